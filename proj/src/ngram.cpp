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

#include "osumm/ngram.hpp"

#include <algorithm>

#include "osumm/error.hpp"

namespace osumm {

void NGramMultiset::add(const Gram& gram, uint32_t count) {
  if (count == 0) return;
  counts_[gram] += count;
}

void NGramMultiset::add_all(const NGramMultiset& other) {
  for (const auto& [gram, count] : other.counts_) counts_[gram] += count;
}

uint32_t NGramMultiset::count(const Gram& gram) const {
  const auto it = counts_.find(gram);
  return it == counts_.end() ? 0 : it->second;
}

NGramMultiset NGramMultiset::minus(const NGramMultiset& other) const {
  NGramMultiset out;
  for (const auto& [gram, count] : counts_) {
    const uint32_t sub = other.count(gram);
    if (count > sub) out.counts_.emplace(gram, count - sub);
  }
  return out;
}

uint64_t NGramMultiset::clipped_overlap_total(const NGramMultiset& other) const {
  uint64_t total = 0;
  for (const auto& [gram, count] : counts_)
    total += std::min(count, other.count(gram));
  return total;
}

uint64_t NGramMultiset::total() const {
  uint64_t total = 0;
  for (const auto& [gram, count] : counts_) total += count;
  return total;
}

size_t NGramMultiset::unique_size() const { return counts_.size(); }

NGramMultiset extract_ngrams(const std::vector<std::string>& tokens, int n) {
  if (n < 1) throw Error::validation("n-gram order must be >= 1");
  NGramMultiset out;
  if (tokens.size() < static_cast<size_t>(n)) return out;
  for (size_t i = 0; i + n <= tokens.size(); ++i)
    out.add(Gram(tokens.begin() + i, tokens.begin() + i + n));
  return out;
}

}  // namespace osumm
