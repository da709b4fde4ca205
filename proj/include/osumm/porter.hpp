// Copyright 2026 the oracle-summ authors
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

#ifndef OSUMM_PORTER_HPP
#define OSUMM_PORTER_HPP

#include <string>
#include <string_view>

namespace osumm::text {

// Porter (1980) stem of a lowercase ASCII-alphabetic token, as published
// (no later Snowball revisions). Tokens that are not pure [a-z]+, or have
// fewer than three characters, pass through unchanged.
std::string porter_stem(std::string_view token);

}  // namespace osumm::text

#endif  // OSUMM_PORTER_HPP
