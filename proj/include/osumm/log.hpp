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

#ifndef OSUMM_LOG_HPP
#define OSUMM_LOG_HPP

// Minimal stderr logger. The level is read once from ORACLE_SUMM_LOG
// (error|warn|info|debug); default is warn. Logging never touches stdout,
// so result output stays byte-stable.

namespace osumm::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

Level level();
bool enabled(Level lvl);

void vlogf(Level lvl, const char* fmt, ...)
    __attribute__((format(printf, 2, 3)));

#define OSUMM_LOG(lvl, ...)                      \
  do {                                           \
    if (::osumm::log::enabled(lvl))              \
      ::osumm::log::vlogf((lvl), __VA_ARGS__);   \
  } while (0)

#define OSUMM_ERROR(...) OSUMM_LOG(::osumm::log::Level::error, __VA_ARGS__)
#define OSUMM_WARN(...) OSUMM_LOG(::osumm::log::Level::warn, __VA_ARGS__)
#define OSUMM_INFO(...) OSUMM_LOG(::osumm::log::Level::info, __VA_ARGS__)
#define OSUMM_DEBUG(...) OSUMM_LOG(::osumm::log::Level::debug, __VA_ARGS__)

}  // namespace osumm::log

#endif  // OSUMM_LOG_HPP
