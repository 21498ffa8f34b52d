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

#ifndef CJWE_CODE_IO_HPP
#define CJWE_CODE_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "cjwe/code.hpp"

namespace cjwe {

/// Parses the line-oriented code file format:
///
///   ring F 4               # or: ring F 9 poly 2,2,1 / ring Z 6
///   inner hermitian        # optional, default euclidean
///   n 6
///   gen 1 0 0 1 2 3        # gamma indices
///
/// Throws ParseError on syntax errors and PreconditionError on invalid rings.
Code parse_code(std::string_view text);
Code read_code_file(const std::filesystem::path& path);

std::string format_code(const Code& c);
void write_code_file(const std::filesystem::path& path, const Code& c);

}  // namespace cjwe

#endif  // CJWE_CODE_IO_HPP
