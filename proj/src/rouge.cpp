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

#include "osumm/rouge.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "osumm/error.hpp"

namespace osumm {
namespace {

void check_ids(const ReferenceBank& bank, std::span<const uint32_t> ids) {
  for (const uint32_t id : ids)
    if (id >= bank.num_sentences())
      throw Error::validation("sentence id " + std::to_string(id) +
                              " out of range");
}

void check_disjoint(std::span<const uint32_t> v_ids,
                    std::span<const uint32_t> w_ids) {
  std::set<uint32_t> v(v_ids.begin(), v_ids.end());
  for (const uint32_t id : w_ids)
    if (v.count(id) > 0)
      throw Error::validation("V and W overlap at sentence " +
                              std::to_string(id));
}

}  // namespace

Score rouge_n(const ReferenceBank& bank, std::span<const uint32_t> ids) {
  check_ids(bank, ids);
  return bank.rouge(ids);
}

Score rouge_prime(const ReferenceBank& bank, std::span<const uint32_t> v_ids,
                  std::span<const uint32_t> w_ids) {
  check_ids(bank, v_ids);
  check_ids(bank, w_ids);
  check_disjoint(v_ids, w_ids);
  return bank.rouge_prime(v_ids, w_ids);
}

uint64_t clipped_overlap_split(uint64_t n_ref, uint64_t n_v, uint64_t n_w) {
  const uint64_t residual = n_ref > n_v ? n_ref - n_v : 0;
  return std::min(n_ref, n_v) + std::min(residual, n_w);
}

uint64_t clipped_overlap_min(uint64_t n_ref, uint64_t n_v, uint64_t n_w) {
  return std::min(n_ref, n_v + n_w);
}

uint64_t clipped_overlap(const ReferenceBank& bank, const Gram& gram,
                         size_t ref, std::span<const uint32_t> v_ids,
                         std::span<const uint32_t> w_ids) {
  check_ids(bank, v_ids);
  check_ids(bank, w_ids);
  check_disjoint(v_ids, w_ids);
  const uint64_t n_ref = bank.count_in_ref(ref, gram);
  const int64_t slot = bank.find_slot(ref, gram);
  uint64_t n_v = 0;
  uint64_t n_w = 0;
  if (slot >= 0) {
    const auto count_at = [&](std::span<const uint32_t> ids) {
      uint64_t total = 0;
      for (const uint32_t id : ids)
        for (const auto& [s, c] : bank.sentence_counts(id).items)
          if (s == static_cast<uint32_t>(slot)) total += c;
      return total;
    };
    n_v = count_at(v_ids);
    n_w = count_at(w_ids);
  }
  return clipped_overlap_split(n_ref, n_v, n_w);
}

ScoreState::ScoreState(const ReferenceBank& bank)
    : bank_(&bank), acc_(bank.num_slots(), 0) {}

void ScoreState::add(uint32_t id) {
  const auto& ref = bank_->ref_counts();
  for (const auto& [slot, count] : bank_->sentence_counts(id).items) {
    const uint32_t before = std::min(ref[slot], acc_[slot]);
    acc_[slot] += count;
    numerator_ += std::min(ref[slot], acc_[slot]) - before;
  }
  used_length_ += bank_->sentence_length(id);
  chosen_.push_back(id);
  assert(bank_->denominator() == 0 || numerator_ == bank_->rouge(chosen_).num);
}

void ScoreState::remove(uint32_t id) {
  const auto& ref = bank_->ref_counts();
  for (const auto& [slot, count] : bank_->sentence_counts(id).items) {
    const uint32_t before = std::min(ref[slot], acc_[slot]);
    acc_[slot] -= count;
    numerator_ -= before - std::min(ref[slot], acc_[slot]);
  }
  used_length_ -= bank_->sentence_length(id);
  const auto it = std::find(chosen_.rbegin(), chosen_.rend(), id);
  assert(it != chosen_.rend());
  chosen_.erase(std::next(it).base());
  assert(bank_->denominator() == 0 || numerator_ == bank_->rouge(chosen_).num);
}

void ScoreState::clear() {
  std::fill(acc_.begin(), acc_.end(), 0);
  chosen_.clear();
  numerator_ = 0;
  used_length_ = 0;
}

uint64_t ScoreState::gain(uint32_t id) const {
  const auto& ref = bank_->ref_counts();
  uint64_t delta = 0;
  for (const auto& [slot, count] : bank_->sentence_counts(id).items)
    delta += std::min<uint64_t>(ref[slot], uint64_t{acc_[slot]} + count) -
             std::min(ref[slot], acc_[slot]);
  return delta;
}

}  // namespace osumm
