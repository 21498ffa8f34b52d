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

#ifndef CJWE_CJWE_HPP
#define CJWE_CJWE_HPP

#include "cjwe/alphabet.hpp"
#include "cjwe/average.hpp"
#include "cjwe/code.hpp"
#include "cjwe/code_io.hpp"
#include "cjwe/cyclotomic.hpp"
#include "cjwe/enumerator.hpp"
#include "cjwe/error.hpp"
#include "cjwe/macwilliams.hpp"
#include "cjwe/parallel.hpp"
#include "cjwe/rational.hpp"
#include "cjwe/selfdual.hpp"

#endif  // CJWE_CJWE_HPP
