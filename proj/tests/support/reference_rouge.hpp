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

// Test-only ROUGE oracle. Counts n-grams with plain std::map and computes
// the clipped-overlap numerators directly from the definition. Shares no
// code with the library's bank/kernel scoring path on purpose.

#ifndef OSUMM_TESTS_REFERENCE_ROUGE_HPP
#define OSUMM_TESTS_REFERENCE_ROUGE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace testsupport {

using Tokens = std::vector<std::string>;
using GramMap = std::map<std::vector<std::string>, long long>;

inline GramMap grams_of(const Tokens& tokens, int n) {
  GramMap out;
  if (tokens.size() < static_cast<size_t>(n)) return out;
  for (size_t i = 0; i + n <= tokens.size(); ++i)
    out[std::vector<std::string>(tokens.begin() + i, tokens.begin() + i + n)]++;
  return out;
}

inline GramMap merge_counts(const std::vector<GramMap>& maps) {
  GramMap out;
  for (const auto& m : maps)
    for (const auto& [g, c] : m) out[g] += c;
  return out;
}

// Definition-level scorer over raw token lists.
struct RefOracle {
  std::vector<GramMap> refs;        // one multiset per reference summary
  std::vector<GramMap> sentences;   // per document sentence
  long long denominator = 0;

  RefOracle(const std::vector<std::vector<Tokens>>& ref_sentences,
            const std::vector<Tokens>& doc_sentences, int n,
            bool ref_cross_sentences = false) {
    for (const auto& ref : ref_sentences) {
      GramMap bag;
      if (ref_cross_sentences) {
        Tokens joined;
        for (const auto& s : ref) joined.insert(joined.end(), s.begin(), s.end());
        bag = grams_of(joined, n);
      } else {
        std::vector<GramMap> per;
        for (const auto& s : ref) per.push_back(grams_of(s, n));
        bag = merge_counts(per);
      }
      for (const auto& [g, c] : bag) denominator += c;
      refs.push_back(std::move(bag));
    }
    for (const auto& s : doc_sentences) sentences.push_back(grams_of(s, n));
  }

  GramMap candidate(const std::vector<uint32_t>& ids) const {
    GramMap out;
    for (const uint32_t id : ids)
      for (const auto& [g, c] : sentences[id]) out[g] += c;
    return out;
  }

  long long numerator(const std::vector<uint32_t>& ids) const {
    const GramMap cand = candidate(ids);
    long long num = 0;
    for (const auto& ref : refs) {
      for (const auto& [g, c] : ref) {
        const auto it = cand.find(g);
        num += std::min(c, it == cand.end() ? 0LL : it->second);
      }
    }
    return num;
  }

  long long prime_numerator(const std::vector<uint32_t>& v_ids,
                            const std::vector<uint32_t>& w_ids) const {
    const GramMap v = candidate(v_ids);
    const GramMap w = candidate(w_ids);
    long long num = 0;
    for (const auto& ref : refs) {
      for (const auto& [g, c] : ref) {
        const auto vit = v.find(g);
        const long long in_v = vit == v.end() ? 0LL : vit->second;
        const long long residual = std::max(c - in_v, 0LL);
        const auto wit = w.find(g);
        num += std::min(residual, wit == w.end() ? 0LL : wit->second);
      }
    }
    return num;
  }
};

}  // namespace testsupport

#endif  // OSUMM_TESTS_REFERENCE_ROUGE_HPP
