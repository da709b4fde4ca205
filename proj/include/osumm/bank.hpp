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

#ifndef OSUMM_BANK_HPP
#define OSUMM_BANK_HPP

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "osumm/ngram.hpp"
#include "osumm/text.hpp"

namespace osumm {

// Exact score: numerator over the bank's constant denominator. Floats
// appear only through value().
struct Score {
  uint64_t num = 0;
  uint64_t den = 1;
  double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Score&) const = default;
};

// Sparse per-sentence counts restricted to grams that occur in some
// reference: (slot, count) pairs sorted by slot.
struct SparseCounts {
  std::vector<std::pair<uint32_t, uint32_t>> items;
  bool empty() const { return items.empty(); }
};

// Flattened (reference, gram) slot space over the references, with
// per-sentence clip-relevant counts. The slot vectors are what the dense
// kernels run over: the score numerator of a sentence set is
// sum_slots min(ref_counts[slot], accumulated[slot]).
//
// Immutable after construction; scoring is read-only and thread-safe.
class ReferenceBank {
 public:
  struct Options {
    int n = 1;
    bool ref_cross_sentences = false;
    text::LengthMode length_mode = text::LengthMode::raw_words;
  };

  ReferenceBank(const std::vector<text::ReferenceSummary>& refs,
                const text::DocumentSet& docs, const Options& opt);

  int ngram_order() const { return n_; }
  size_t num_refs() const { return ranges_.size(); }
  size_t num_slots() const { return ref_counts_.size(); }
  size_t num_sentences() const { return sentence_counts_.size(); }

  // Constant ROUGE denominator: total gram count over all references.
  uint64_t denominator() const { return denominator_; }
  // Throws a validation error when the denominator is zero.
  void require_scorable() const;

  const std::vector<uint32_t>& ref_counts() const { return ref_counts_; }
  std::pair<uint32_t, uint32_t> slot_range(size_t ref) const {
    return ranges_[ref];
  }
  const Gram& slot_gram(size_t slot) const { return slot_grams_[slot]; }

  const SparseCounts& sentence_counts(uint32_t id) const {
    return sentence_counts_[id];
  }
  uint32_t sentence_length(uint32_t id) const { return lengths_[id]; }
  const std::vector<uint32_t>& sentence_lengths() const { return lengths_; }

  // N(gram, R_k); zero when the gram is not in reference k.
  uint32_t count_in_ref(size_t ref, const Gram& gram) const;
  // Slot of a gram within reference k, or -1.
  int64_t find_slot(size_t ref, const Gram& gram) const;

  // From-scratch scoring over the dense slot space (batch path).
  Score rouge(std::span<const uint32_t> ids) const;
  // Marginal score of W given V against the residual references,
  // numerator of sum_k sum_g min(N(g, R_k \ V), N(g, W)).
  Score rouge_prime(std::span<const uint32_t> v_ids,
                    std::span<const uint32_t> w_ids) const;

  // Scatter-adds the sparse counts of each listed sentence into a dense
  // slot accumulator (not cleared first).
  void accumulate(std::span<const uint32_t> ids,
                  std::vector<uint32_t>& acc) const;

 private:
  int n_;
  std::vector<uint32_t> ref_counts_;
  std::vector<std::pair<uint32_t, uint32_t>> ranges_;
  std::vector<Gram> slot_grams_;
  std::vector<std::map<Gram, uint32_t>> gram_slot_;  // per ref
  std::vector<SparseCounts> sentence_counts_;
  std::vector<uint32_t> lengths_;
  uint64_t denominator_ = 0;
};

}  // namespace osumm

#endif  // OSUMM_BANK_HPP
