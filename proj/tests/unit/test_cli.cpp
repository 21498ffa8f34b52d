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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cjwe/cjwe.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cjwe::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(CJWE_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("scalar commands") {
  CHECK(run({"mass", "--type", "IV", "--n", "4"}).out == "27\n");
  CHECK(run({"contains", "--type", "IV", "--n", "4", "--k", "1"}).out == "3\n");
  CHECK(run({"deltaJ", fixture("tetracode.code"), "--type", "III", "--moment", "1"}).out == "3/1\n");
  CHECK(run({"deltaJ", fixture("tetracode.code"), "--type", "III", "--moment", "1", "--empirical"}).out == "3/1\n");
  CHECK(run({"deltaJ", fixture("f4_line.code"), "--type", "IV", "--moment", "2"}).out == "6/1\n");
  CHECK(run({"delta", fixture("e1.code"), fixture("e2.code")}).out == "3/2\n");
}

TEST_CASE("polynomial commands") {
  const auto zero = run({"cwe", fixture("zero2.code")});
  CHECK(zero.code == 0);
  CHECK(zero.out == R"({"ring":"F 3","g":1,"n":2,"terms":[{"exp":[2,0,0],"coeff":"1/1"}]})"
                    "\n");
  const auto avg = run({"avg", fixture("tetracode.code"), fixture("tetracode.code")});
  const auto brute = run({"avg", "--brute-force", fixture("tetracode.code"), fixture("tetracode.code")});
  CHECK(avg.code == 0);
  CHECK(avg.out == brute.out);
  const auto g = run({"avg", "--gfold", fixture("e1.code"), fixture("e2.code"), fixture("zero2_f2.code")});
  const auto gb = run({"avg", "--gfold", "--brute-force", fixture("e1.code"), fixture("e2.code"), fixture("zero2_f2.code")});
  CHECK(g.code == 0);
  CHECK(g.out == gb.out);
  CHECK(run({"gfold", fixture("e1.code"), fixture("e2.code"), fixture("zero2_f2.code")}).code == 0);
  const auto j = run({"cjwe", fixture("e1.code"), fixture("e2.code")});
  CHECK(cjwe::Enumerator::from_json(j.out) ==
        cjwe::cjwe(cjwe::read_code_file(fixture("e1.code")), cjwe::read_code_file(fixture("e2.code"))));
}

TEST_CASE("mw on self-dual inputs returns the input") {
  for (const char* f : {"tetracode.code", "hexacode.code", "rep2.code"}) {
    const auto plain = run({"cwe", fixture(f)});
    CHECK(run({"mw", fixture(f), "--dual", "left"}).out == plain.out);
    const auto joint = run({"cjwe", fixture(f), fixture(f)});
    CHECK(run({"mw", fixture(f), fixture(f), "--dual", "both"}).out == joint.out);
    const auto avg = run({"avg", fixture(f), fixture(f)});
    CHECK(run({"mw", fixture(f), fixture(f), "--dual", "right", "--avg"}).out == avg.out);
  }
  CHECK(run({"mw", fixture("rep3.code"), "--dual", "none"}).out == run({"cwe", fixture("rep3.code")}).out);
  CHECK(run({"mw", fixture("rep3.code"), "--dual", "right"}).code == 4);
  CHECK(run({"mw", fixture("rep3.code"), "--dual", "sideways"}).code == 2);
}

TEST_CASE("enum writes re-parseable files") {
  const fs::path dir = fs::temp_directory_path() / "cjwe_cli_enum_test";
  fs::remove_all(dir);
  const auto r = run({"enum", "--type", "III", "--n", "4", "--out", dir.string()});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir / "manifest.json"));
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() != ".code") continue;
    ++files;
    CHECK(cjwe::classify(cjwe::read_code_file(e.path())) == cjwe::CodeClass::TypeIII);
  }
  CHECK(files == 8);
  CHECK(r.out.find("\"count\": 8") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("exit codes and diagnostics") {
  auto one_line = [](const Result& r) {
    return !r.err.empty() && r.err.find('\n') == r.err.size() - 1;
  };
  const auto missing = run({"cwe", fixture("nope.code")});
  CHECK(missing.code == 2);
  CHECK(one_line(missing));
  const auto budget = run({"--max-codewords", "8", "cwe", fixture("hexacode.code")});
  CHECK(budget.code == 3);
  CHECK(one_line(budget));
  const auto perms = run({"--max-permutations", "10", "avg", "--brute-force", fixture("tetracode.code"), fixture("tetracode.code")});
  CHECK(perms.code == 3);
  const auto cong = run({"mass", "--type", "III", "--n", "6"});
  CHECK(cong.code == 4);
  CHECK(one_line(cong));
  CHECK(run({"deltaJ", fixture("hexacode.code"), "--type", "III", "--moment", "1"}).code == 4);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--threads", "0", "mass", "--type", "IV", "--n", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("settings are restored after a run") {
  const auto before = cjwe::limits().max_codewords;
  const unsigned threads = cjwe::threads();
  run({"--max-codewords", "5", "--threads", "3", "mass", "--type", "IV", "--n", "2"});
  CHECK(cjwe::limits().max_codewords == before);
  CHECK(cjwe::threads() == threads);
}
