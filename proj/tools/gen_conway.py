#!/usr/bin/env python3
# Copyright 2026 The cjwe Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates core/src/conway_table.inc.

Conway polynomials are computed from their definition: the least monic
primitive polynomial of degree f over F_p (under the alternating-sign
lexicographic order) whose roots are norm-compatible with the Conway
polynomials of every proper subfield.
"""
import itertools
import sys

LIMIT = 1 << 10


def is_prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def polymulmod(a, b, mod, p):
    # a, b: coefficient lists low-degree first, degree < f; mod monic degree f
    f = len(mod) - 1
    prod = [0] * (2 * f)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, f - 1, -1):
        c = prod[d]
        if c:
            for k in range(f + 1):
                prod[d - f + k] = (prod[d - f + k] - c * mod[k]) % p
    return prod[:f]


def polypowmod(base, e, mod, p):
    f = len(mod) - 1
    result = [1] + [0] * (f - 1)
    while e:
        if e & 1:
            result = polymulmod(result, base, mod, p)
        base = polymulmod(base, base, mod, p)
        e >>= 1
    return result


def x_elem(f):
    return ([0, 1] + [0] * f)[:f] if f > 1 else None


def is_primitive(mod, p):
    f = len(mod) - 1
    if mod[0] == 0:
        return False
    order = p ** f - 1
    if f == 1:
        root = (-mod[0]) % p
        return all(pow(root, order // r, p) != 1 for r in prime_factors(order))
    x = x_elem(f)
    one = [1] + [0] * (f - 1)
    if polypowmod(x, order, mod, p) != one:
        return False
    return all(polypowmod(x, order // r, mod, p) != one for r in prime_factors(order))


def evaluate_at(poly_coeffs, elem, mod, p):
    # Horner evaluation of poly_coeffs (low first) at elem in F_p[x]/mod
    f = len(mod) - 1
    acc = [0] * f
    for c in reversed(poly_coeffs):
        acc = polymulmod(acc, elem, mod, p)
        acc[0] = (acc[0] + c) % p
    return acc


def candidates(p, f):
    # Iterate monic degree-f polynomials in Conway order.
    for seq in itertools.product(range(p), repeat=f):
        # seq[i-1] is (-1)^i * a_{f-i}
        coeffs = [0] * (f + 1)
        coeffs[f] = 1
        for i in range(1, f + 1):
            coeffs[f - i] = (seq[i - 1] * (-1) ** i) % p
        yield coeffs


def conway(p, f, table):
    for cand in candidates(p, f):
        if not is_primitive(cand, p):
            continue
        ok = True
        if f > 1:
            x = x_elem(f)
            for d in range(1, f):
                if f % d:
                    continue
                sub = table[(p, d)]
                e = (p ** f - 1) // (p ** d - 1)
                root = polypowmod(x, e, cand, p)
                if any(evaluate_at(sub, root, cand, p)):
                    ok = False
                    break
        if ok:
            return cand
    raise RuntimeError(f"no Conway polynomial for {p}^{f}")


def main():
    table = {}
    rows = []
    for p in range(2, LIMIT + 1):
        if not is_prime(p):
            continue
        f = 1
        while p ** f <= LIMIT:
            table[(p, f)] = conway(p, f, table)
            if f > 1:
                rows.append((p, f, table[(p, f)]))
            f += 1
    out = sys.stdout
    out.write("// Generated by tools/gen_conway.py. Do not edit.\n")
    out.write("// {p, f, {c0, c1, ..., cf}}\n")
    for p, f, c in rows:
        out.write("{%d, %d, {%s}},\n" % (p, f, ", ".join(map(str, c))))


if __name__ == "__main__":
    main()
