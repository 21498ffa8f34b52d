// Copyright 2026 The cjwe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cjwe/code_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "cjwe/error.hpp"

namespace cjwe {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_count(const std::string& tok, std::size_t line) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(tok, &used);
    if (used != tok.size() || tok[0] == '-' || tok[0] == '+') throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    fail(line, "expected a non-negative integer, got '" + tok + "'");
  }
}

}  // namespace

Code parse_code(std::string_view text) {
  std::optional<RingSpec> ring;
  std::optional<std::size_t> n;
  InnerProduct inner = InnerProduct::Euclidean;
  bool inner_seen = false;
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> gens;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::string key;
    if (!(ls >> key)) continue;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);

    if (key == "ring") {
      if (ring) fail(line_no, "duplicate 'ring'");
      std::string lit;
      for (const auto& t : toks) lit += (lit.empty() ? "" : " ") + t;
      try {
        ring = RingSpec::parse(lit);
      } catch (const ParseError& e) {
        fail(line_no, e.what());
      }
    } else if (key == "inner") {
      if (inner_seen) fail(line_no, "duplicate 'inner'");
      if (toks.size() != 1) fail(line_no, "'inner' takes one argument");
      if (toks[0] == "euclidean") {
        inner = InnerProduct::Euclidean;
      } else if (toks[0] == "hermitian") {
        inner = InnerProduct::Hermitian;
      } else {
        fail(line_no, "inner product must be 'euclidean' or 'hermitian'");
      }
      inner_seen = true;
    } else if (key == "n") {
      if (n) fail(line_no, "duplicate 'n'");
      if (toks.size() != 1) fail(line_no, "'n' takes one argument");
      n = static_cast<std::size_t>(parse_count(toks[0], line_no));
    } else if (key == "gen") {
      std::vector<std::uint64_t> entries;
      for (const auto& t : toks) entries.push_back(parse_count(t, line_no));
      gens.emplace_back(line_no, std::move(entries));
    } else {
      fail(line_no, "unknown keyword '" + key + "'");
    }
  }
  if (!ring) throw ParseError("code file has no 'ring' line");
  if (!n) throw ParseError("code file has no 'n' line");

  std::vector<Word> words;
  for (const auto& [line, entries] : gens) {
    if (entries.size() != *n) {
      fail(line, "generator has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(*n));
    }
    Word w;
    for (auto e : entries) {
      if (e >= ring->size()) fail(line, "entry " + std::to_string(e) + " is not a valid element index");
      w.push_back(static_cast<Symbol>(e));
    }
    words.push_back(std::move(w));
  }
  return Code(*ring, *n, std::move(words), inner);
}

Code read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open code file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_code(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string format_code(const Code& c) {
  std::ostringstream os;
  os << "ring " << c.ring().literal() << '\n';
  if (c.inner_product() == InnerProduct::Hermitian) os << "inner hermitian\n";
  os << "n " << c.length() << '\n';
  for (const auto& g : c.generators()) {
    os << "gen";
    for (auto s : g) os << ' ' << s;
    os << '\n';
  }
  return os.str();
}

void write_code_file(const std::filesystem::path& path, const Code& c) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << format_code(c);
}

}  // namespace cjwe
