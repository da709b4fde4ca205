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

#include "osumm/bank.hpp"

#include <algorithm>

#include "osumm/error.hpp"
#include "osumm/kernels.hpp"

namespace osumm {

ReferenceBank::ReferenceBank(const std::vector<text::ReferenceSummary>& refs,
                             const text::DocumentSet& docs,
                             const Options& opt)
    : n_(opt.n) {
  if (opt.n < 1) throw Error::validation("n-gram order must be >= 1");

  // Reference multisets, then a flat (reference, gram) slot space with
  // grams in lexicographic order within each reference.
  gram_slot_.resize(refs.size());
  ranges_.reserve(refs.size());
  for (size_t k = 0; k < refs.size(); ++k) {
    NGramMultiset bag;
    if (opt.ref_cross_sentences) {
      std::vector<std::string> joined;
      for (const auto& sent : refs[k].sentences)
        joined.insert(joined.end(), sent.begin(), sent.end());
      bag = extract_ngrams(joined, opt.n);
    } else {
      for (const auto& sent : refs[k].sentences)
        bag.add_all(extract_ngrams(sent, opt.n));
    }
    const uint32_t begin = static_cast<uint32_t>(ref_counts_.size());
    for (const auto& [gram, count] : bag.counts()) {
      gram_slot_[k].emplace(gram, static_cast<uint32_t>(ref_counts_.size()));
      ref_counts_.push_back(count);
      slot_grams_.push_back(gram);
    }
    ranges_.emplace_back(begin, static_cast<uint32_t>(ref_counts_.size()));
  }
  denominator_ = kernels::active_ops().sum(ref_counts_.data(), ref_counts_.size());

  // Per-sentence clip-relevant counts. Iterating references in order and
  // grams in map order keeps each sparse list sorted by slot.
  sentence_counts_.resize(docs.sentences.size());
  lengths_.resize(docs.sentences.size());
  for (const auto& sent : docs.sentences) {
    const NGramMultiset bag = extract_ngrams(sent.tokens, opt.n);
    SparseCounts& sparse = sentence_counts_[sent.id];
    for (size_t k = 0; k < refs.size(); ++k) {
      for (const auto& [gram, count] : bag.counts()) {
        const auto it = gram_slot_[k].find(gram);
        if (it != gram_slot_[k].end())
          sparse.items.emplace_back(it->second, count);
      }
    }
    std::sort(sparse.items.begin(), sparse.items.end());
    lengths_[sent.id] = opt.length_mode == text::LengthMode::raw_words
                            ? sent.raw_word_count
                            : static_cast<uint32_t>(sent.tokens.size());
  }
}

void ReferenceBank::require_scorable() const {
  if (denominator_ == 0)
    throw Error::validation(
        "reference denominator is zero (references contain no n-grams of "
        "the requested order)");
}

uint32_t ReferenceBank::count_in_ref(size_t ref, const Gram& gram) const {
  const auto it = gram_slot_[ref].find(gram);
  return it == gram_slot_[ref].end() ? 0 : ref_counts_[it->second];
}

int64_t ReferenceBank::find_slot(size_t ref, const Gram& gram) const {
  const auto it = gram_slot_[ref].find(gram);
  return it == gram_slot_[ref].end() ? -1 : static_cast<int64_t>(it->second);
}

void ReferenceBank::accumulate(std::span<const uint32_t> ids,
                               std::vector<uint32_t>& acc) const {
  for (const uint32_t id : ids)
    for (const auto& [slot, count] : sentence_counts_[id].items)
      acc[slot] += count;
}

Score ReferenceBank::rouge(std::span<const uint32_t> ids) const {
  require_scorable();
  std::vector<uint32_t> acc(num_slots(), 0);
  accumulate(ids, acc);
  const auto& ops = kernels::active_ops();
  return {ops.sum_min(ref_counts_.data(), acc.data(), acc.size()),
          denominator_};
}

Score ReferenceBank::rouge_prime(std::span<const uint32_t> v_ids,
                                 std::span<const uint32_t> w_ids) const {
  require_scorable();
  std::vector<uint32_t> v_acc(num_slots(), 0);
  std::vector<uint32_t> w_acc(num_slots(), 0);
  accumulate(v_ids, v_acc);
  accumulate(w_ids, w_acc);
  const auto& ops = kernels::active_ops();
  return {ops.sum_min_residual(ref_counts_.data(), v_acc.data(), w_acc.data(),
                               v_acc.size()),
          denominator_};
}

}  // namespace osumm
