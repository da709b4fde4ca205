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

#ifndef OSUMM_NGRAM_HPP
#define OSUMM_NGRAM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace osumm {

// An n-gram is its token sequence; std::map keeps gram iteration in
// lexicographic token-sequence order, which fixes every slot and file
// ordering downstream.
using Gram = std::vector<std::string>;

// Multiset of n-grams with positive counts; zero-count entries are never
// stored, so size() is |U(.)|.
class NGramMultiset {
 public:
  using Map = std::map<Gram, uint32_t>;

  NGramMultiset() = default;

  void add(const Gram& gram, uint32_t count = 1);
  void add_all(const NGramMultiset& other);

  uint32_t count(const Gram& gram) const;

  // Per-gram saturating subtraction: max(0, this - other).
  NGramMultiset minus(const NGramMultiset& other) const;

  // sum over grams of min(count here, count in other)
  uint64_t clipped_overlap_total(const NGramMultiset& other) const;

  uint64_t total() const;        // sum of counts
  size_t unique_size() const;    // |U(.)|
  bool empty() const { return counts_.empty(); }

  const Map& counts() const { return counts_; }

  bool operator==(const NGramMultiset& other) const {
    return counts_ == other.counts_;
  }

 private:
  Map counts_;
};

// All contiguous windows of n tokens; sequences shorter than n yield the
// empty multiset. Windows never cross the given sequence (callers keep
// sentences separate to keep windows within sentence boundaries).
NGramMultiset extract_ngrams(const std::vector<std::string>& tokens, int n);

}  // namespace osumm

#endif  // OSUMM_NGRAM_HPP
