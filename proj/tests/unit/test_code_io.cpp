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

#include "cjwe/cjwe.hpp"

using namespace cjwe;

TEST_CASE("parse the documented example") {
  const Code c = parse_code(
      "ring F 4\n"
      "inner hermitian        # optional; default euclidean\n"
      "n 6\n"
      "gen 1 0 0 1 2 3        # entries are gamma-indices\n"
      "gen 0 1 0 2 1 3\n"
      "gen 0 0 1 2 3 1\n");
  CHECK(c.ring() == RingSpec::field(4));
  CHECK(c.inner_product() == InnerProduct::Hermitian);
  CHECK(c.length() == 6);
  CHECK(c.generators().size() == 3);
  CHECK(c.size() == 64);
}

TEST_CASE("round trip through text") {
  const Code c(RingSpec::parse("F 9 poly 2,1,1"), 3, {{1, 4, 8}, {0, 3, 5}});
  const Code back = parse_code(format_code(c));
  CHECK(back.ring() == c.ring());
  CHECK(back.same_codewords(c));
  CHECK(format_code(back) == format_code(c));
  const Code z(RingSpec::residue(6), 2, {});
  CHECK(parse_code(format_code(z)).size() == 1);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "cjwe_code_io_test";
  std::filesystem::create_directories(dir);
  const Code c(RingSpec::residue(4), 3, {{1, 2, 3}});
  write_code_file(dir / "a.code", c);
  CHECK(read_code_file(dir / "a.code").same_codewords(c));
  CHECK_THROWS_AS(read_code_file(dir / "missing.code"), ParseError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("syntax errors carry line numbers") {
  auto message = [](const char* text) {
    try {
      parse_code(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("ring F 2\nn 2\ngen 1 0 1\n").find("line 3") != std::string::npos);
  CHECK(message("ring F 2\nn 2\ngen 1 2\n").find("line 3") != std::string::npos);
  CHECK(message("ring F 2\nring F 3\nn 2\n").find("line 2") != std::string::npos);
  CHECK(message("ring F 2\nn 2\nfoo 1\n").find("line 3") != std::string::npos);
  CHECK(message("n 2\ngen 1 0\n") != "no error");
  CHECK(message("ring F 2\ngen 1 0\n") != "no error");
  CHECK(message("ring F 2\nn x\n") != "no error");
  CHECK(message("ring F 2\ninner sideways\nn 1\n") != "no error");
  CHECK_THROWS_AS(parse_code("ring F 6\nn 1\n"), PreconditionError);
}
