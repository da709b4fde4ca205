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

#ifndef OSUMM_TESTS_BUILDERS_HPP
#define OSUMM_TESTS_BUILDERS_HPP

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "osumm/bank.hpp"
#include "osumm/text.hpp"

namespace testsupport {

using TokenList = std::vector<std::string>;

// Builds a document set straight from token lists; l(s) = token count.
inline osumm::text::DocumentSet docs_from_tokens(
    const std::vector<TokenList>& sentences) {
  osumm::text::DocumentSet docs;
  for (size_t i = 0; i < sentences.size(); ++i) {
    osumm::text::Sentence s;
    s.id = static_cast<uint32_t>(i);
    s.tokens = sentences[i];
    s.raw_word_count = static_cast<uint32_t>(sentences[i].size());
    docs.sentences.push_back(std::move(s));
  }
  return docs;
}

inline std::vector<osumm::text::ReferenceSummary> refs_from_tokens(
    const std::vector<std::vector<TokenList>>& refs) {
  std::vector<osumm::text::ReferenceSummary> out;
  for (size_t k = 0; k < refs.size(); ++k) {
    osumm::text::ReferenceSummary ref;
    ref.id = static_cast<uint32_t>(k);
    ref.sentences = refs[k];
    out.push_back(std::move(ref));
  }
  return out;
}

struct BuiltCorpus {
  std::vector<TokenList> doc_tokens;
  std::vector<std::vector<TokenList>> ref_tokens;
  osumm::text::DocumentSet docs;
  std::vector<osumm::text::ReferenceSummary> refs;
  std::unique_ptr<osumm::ReferenceBank> bank;
  int n = 1;
};

inline BuiltCorpus build_corpus(std::vector<std::vector<TokenList>> refs,
                                std::vector<TokenList> doc_sentences, int n) {
  BuiltCorpus c;
  c.doc_tokens = doc_sentences;
  c.ref_tokens = refs;
  c.docs = docs_from_tokens(doc_sentences);
  c.refs = refs_from_tokens(refs);
  c.n = n;
  osumm::ReferenceBank::Options opt;
  opt.n = n;
  c.bank = std::make_unique<osumm::ReferenceBank>(c.refs, c.docs, opt);
  return c;
}

// The worked unigram corpus used across the suite: one reference with
// counts {a:2, b:1, c:1}; sentences [a b], [c a], [b b], all of length 2.
inline BuiltCorpus spec_corpus() {
  return build_corpus({{{"a", "a", "b", "c"}}},
                      {{"a", "b"}, {"c", "a"}, {"b", "b"}}, 1);
}

// Random desk-scale instance for the exactness/acceptance suites.
struct RandomInstance {
  BuiltCorpus corpus;
  uint64_t l_max = 1;
};

struct GenParams {
  int min_sentences = 1, max_sentences = 15;
  int min_sentence_len = 1, max_sentence_len = 12;
  int min_vocab = 4, max_vocab = 20;  // vocabulary size drawn per instance
  int min_lmax = 1, max_lmax = 30;
  int max_n = 2;
  int min_ref_sents = 1, max_ref_sents = 3;
  int min_ref_len = 4, max_ref_len = 10;
};

inline RandomInstance random_instance(std::mt19937_64& rng,
                                      const GenParams& p) {
  const auto rnd = [&](int lo, int hi) {
    return static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1)) + lo;
  };
  // small vocabularies give dense n-gram overlap, large ones sparse
  const int vocab = rnd(p.min_vocab, p.max_vocab);
  const auto word = [&]() {
    return std::string(1, static_cast<char>('a' + rnd(0, vocab - 1)));
  };
  const auto sentence = [&](int lo, int hi) {
    TokenList t(rnd(lo, hi));
    for (auto& w : t) w = word();
    return t;
  };

  RandomInstance inst;
  const int n = rnd(1, p.max_n);
  const int num_refs = rnd(1, 3);
  std::vector<std::vector<TokenList>> refs(num_refs);
  for (auto& ref : refs) {
    ref.resize(rnd(p.min_ref_sents, p.max_ref_sents));
    for (auto& s : ref) s = sentence(std::max(p.min_ref_len, n), p.max_ref_len);
  }
  const int num_sents = rnd(p.min_sentences, p.max_sentences);
  std::vector<TokenList> docs(num_sents);
  for (auto& s : docs) s = sentence(p.min_sentence_len, p.max_sentence_len);

  inst.corpus = build_corpus(std::move(refs), std::move(docs), n);
  inst.l_max = static_cast<uint64_t>(rnd(p.min_lmax, p.max_lmax));
  return inst;
}

inline RandomInstance random_instance(std::mt19937_64& rng,
                                      int max_sentences = 15,
                                      int max_sentence_len = 12,
                                      int max_vocab = 20, int max_lmax = 30,
                                      int max_n = 2) {
  GenParams p;
  p.max_sentences = max_sentences;
  p.max_sentence_len = max_sentence_len;
  p.max_vocab = max_vocab;
  p.max_lmax = max_lmax;
  p.max_n = max_n;
  return random_instance(rng, p);
}

}  // namespace testsupport

#endif  // OSUMM_TESTS_BUILDERS_HPP
