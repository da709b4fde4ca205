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

#ifndef OSUMM_TEXT_HPP
#define OSUMM_TEXT_HPP

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace osumm::text {

// How sentence length l(s) is measured against the budget: the word count
// before stopword removal (default; budgets apply to emitted text), or the
// retained token count after preprocessing.
enum class LengthMode { raw_words, retained_tokens };

struct PreprocessConfig {
  int n = 1;
  bool lowercase = true;
  bool stemming = true;
  bool stopword_removal = false;
  std::set<std::string> stopwords;  // matched post-lowercasing, pre-stemming
  bool ref_cross_sentences = false;  // reference n-grams across sentence bounds
  LengthMode length_mode = LengthMode::raw_words;
};

struct Sentence {
  uint32_t id = 0;
  std::vector<std::string> tokens;  // after configured preprocessing
  uint32_t raw_word_count = 0;      // token count before stopword removal
};

struct DocumentSet {
  std::vector<Sentence> sentences;  // ids are 0..|D|-1 in order
};

struct ReferenceSummary {
  uint32_t id = 0;
  std::vector<std::vector<std::string>> sentences;  // tokens per sentence
};

// Splits one sentence on Unicode whitespace, strips punctuation from token
// edges (interior hyphens and apostrophes survive), optionally lowercases
// ASCII letters, and drops tokens that end up empty.
std::vector<std::string> tokenize(std::string_view raw, bool lowercase);

// Full per-sentence pipeline: tokenize, record the raw word count, drop
// stopwords, stem.
Sentence preprocess_sentence(uint32_t id, std::string_view raw,
                             const PreprocessConfig& cfg);

// Concatenates the documents into one sentence list with global ids
// 0..|D|-1. Blank lines are skipped, they are not sentences.
DocumentSet make_document_set(const std::vector<std::vector<std::string>>& docs,
                              const PreprocessConfig& cfg);

// Preprocesses each reference summary; throws a validation error if any
// reference has no non-empty sentence.
std::vector<ReferenceSummary> make_references(
    const std::vector<std::vector<std::string>>& refs,
    const PreprocessConfig& cfg);

// One token per line, UTF-8, '#'-prefixed comment lines and blank lines
// ignored. Entries are lowercased.
std::set<std::string> load_stopwords(const std::string& path);

}  // namespace osumm::text

#endif  // OSUMM_TEXT_HPP
