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

#ifndef OSUMM_ROUGE_HPP
#define OSUMM_ROUGE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "osumm/bank.hpp"

namespace osumm {

// Clipped n-gram recall of the sentence set against the bank's references.
Score rouge_n(const ReferenceBank& bank, std::span<const uint32_t> ids);

// Marginal score of W given V; V and W must be disjoint.
Score rouge_prime(const ReferenceBank& bank, std::span<const uint32_t> v_ids,
                  std::span<const uint32_t> w_ids);

// Split form of the per-gram overlap of V then W against reference count
// n_ref: min(n_ref, n_v) + min(max(n_ref - n_v, 0), n_w).
uint64_t clipped_overlap_split(uint64_t n_ref, uint64_t n_v, uint64_t n_w);
// Equivalent closed form: min(n_ref, n_v + n_w).
uint64_t clipped_overlap_min(uint64_t n_ref, uint64_t n_v, uint64_t n_w);

// The same quantity for a concrete gram and reference, with V and W given
// as disjoint sentence-id sets.
uint64_t clipped_overlap(const ReferenceBank& bank, const Gram& gram,
                         size_t ref, std::span<const uint32_t> v_ids,
                         std::span<const uint32_t> w_ids);

// Incrementally maintained score of a growing/shrinking sentence set.
// add/remove cost is O(distinct clip-relevant grams of the sentence);
// numerators stay exact. This is the search engine's hot path.
class ScoreState {
 public:
  explicit ScoreState(const ReferenceBank& bank);

  void add(uint32_t id);
  void remove(uint32_t id);
  void clear();

  // Numerator delta if id were added now; by the score decomposition this
  // equals the rouge_prime numerator of {id} given the current set.
  uint64_t gain(uint32_t id) const;

  uint64_t numerator() const { return numerator_; }
  uint64_t used_length() const { return used_length_; }
  Score score() const { return {numerator_, bank_->denominator()}; }
  const std::vector<uint32_t>& chosen() const { return chosen_; }
  const std::vector<uint32_t>& slot_acc() const { return acc_; }
  const ReferenceBank& bank() const { return *bank_; }

 private:
  const ReferenceBank* bank_;
  std::vector<uint32_t> acc_;
  std::vector<uint32_t> chosen_;
  uint64_t numerator_ = 0;
  uint64_t used_length_ = 0;
};

}  // namespace osumm

#endif  // OSUMM_ROUGE_HPP
