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

#include <cstdio>
#include <fstream>
#include <random>

#include "doctest.h"
#include "osumm/error.hpp"
#include "osumm/ngram.hpp"
#include "osumm/porter.hpp"
#include "osumm/text.hpp"

using namespace osumm;
using text::PreprocessConfig;
using text::tokenize;

TEST_CASE("tokenize lowercases, splits and strips edge punctuation") {
  CHECK(tokenize("The cat sat.", true) ==
        std::vector<std::string>{"the", "cat", "sat"});
  CHECK(tokenize("", true).empty());
  CHECK(tokenize("A  b", true) == std::vector<std::string>{"a", "b"});
  CHECK(tokenize("  leading and trailing  ", true) ==
        std::vector<std::string>{"leading", "and", "trailing"});
  CHECK(tokenize("(hello), \"world\"!", true) ==
        std::vector<std::string>{"hello", "world"});
}

TEST_CASE("tokenize keeps interior hyphens and apostrophes") {
  CHECK(tokenize("don't stop co-op.", true) ==
        std::vector<std::string>{"don't", "stop", "co-op"});
  CHECK(tokenize("'tis -- strange --", true) ==
        std::vector<std::string>{"tis", "strange"});
}

TEST_CASE("tokenize handles unicode whitespace and punctuation") {
  // U+00A0 no-break space separates; U+201C/U+201D quotes strip
  CHECK(tokenize("a\xC2\xA0"
                 "b",
                 true) == std::vector<std::string>{"a", "b"});
  CHECK(tokenize("\xE2\x80\x9Cquoted\xE2\x80\x9D", true) ==
        std::vector<std::string>{"quoted"});
  // U+2014 em dash at edges strips, interior survives
  CHECK(tokenize("\xE2\x80\x94"
                 "dash",
                 true) == std::vector<std::string>{"dash"});
}

TEST_CASE("tokenize without lowercasing keeps case") {
  CHECK(tokenize("The Cat", false) == std::vector<std::string>{"The", "Cat"});
}

TEST_CASE("raw word count ignores stopword removal; retained count does not") {
  PreprocessConfig with_stop;
  with_stop.stopword_removal = true;
  with_stop.stopwords = {"the", "a"};
  with_stop.stemming = false;
  PreprocessConfig without = with_stop;
  without.stopword_removal = false;

  const std::string raw = "The cat saw a dog.";
  const auto s1 = text::preprocess_sentence(0, raw, with_stop);
  const auto s2 = text::preprocess_sentence(0, raw, without);
  CHECK(s1.raw_word_count == 5);
  CHECK(s2.raw_word_count == 5);
  CHECK(s1.tokens == std::vector<std::string>{"cat", "saw", "dog"});
  CHECK(s2.tokens.size() == 5);
  CHECK(s1.raw_word_count >= s1.tokens.size());
}

TEST_CASE("stopwords match before stemming") {
  PreprocessConfig cfg;
  cfg.stopword_removal = true;
  cfg.stopwords = {"running"};  // surface form, not the stem
  cfg.stemming = true;
  const auto s = text::preprocess_sentence(0, "running quickly", cfg);
  CHECK(s.tokens == std::vector<std::string>{"quickli"});
}

TEST_CASE("extract_ngrams counts windows within one sequence") {
  const auto uni = extract_ngrams({"a", "b", "a"}, 1);
  CHECK(uni.count({"a"}) == 2);
  CHECK(uni.count({"b"}) == 1);
  CHECK(uni.total() == 3);

  const auto bi = extract_ngrams({"a", "b", "a"}, 2);
  CHECK(bi.count({"a", "b"}) == 1);
  CHECK(bi.count({"b", "a"}) == 1);
  CHECK(bi.total() == 2);

  CHECK(extract_ngrams({"a"}, 2).empty());
  CHECK_THROWS_AS(extract_ngrams({"a"}, 0), Error);
}

TEST_CASE("ngram total equals max(0, len-n+1)") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 200; ++rep) {
    const int len = static_cast<int>(rng() % 12);
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<std::string> toks(len);
    for (auto& t : toks) t = std::string(1, 'a' + rng() % 4);
    const int expected = std::max(0, len - n + 1);
    CHECK(extract_ngrams(toks, n).total() == static_cast<uint64_t>(expected));
  }
}

TEST_CASE("stemming commutes with ngram extraction") {
  std::mt19937_64 rng(123);
  const std::vector<std::string> pool = {"running", "cats",  "ponies",
                                         "hopeful", "sized", "troubled"};
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<std::string> toks(2 + rng() % 6);
    for (auto& t : toks) t = pool[rng() % pool.size()];
    const int n = 1 + static_cast<int>(rng() % 2);

    std::vector<std::string> stemmed;
    for (const auto& t : toks) stemmed.push_back(text::porter_stem(t));
    const auto route_a = extract_ngrams(stemmed, n);

    NGramMultiset route_b;
    const auto raw_grams = extract_ngrams(toks, n);
    for (const auto& [gram, c] : raw_grams.counts()) {
      Gram g;
      for (const auto& t : gram) g.push_back(text::porter_stem(t));
      route_b.add(g, c);
    }
    CHECK(route_a == route_b);
  }
}

TEST_CASE("document set skips blank sentences and numbers ids in order") {
  PreprocessConfig cfg;
  cfg.stemming = false;
  const auto docs = text::make_document_set(
      {{"First sentence here.", "   ", "Second one."}, {"Third."}}, cfg);
  REQUIRE(docs.sentences.size() == 3);
  CHECK(docs.sentences[0].id == 0);
  CHECK(docs.sentences[1].id == 1);
  CHECK(docs.sentences[2].id == 2);
  CHECK(docs.sentences[1].tokens == std::vector<std::string>{"second", "one"});
}

TEST_CASE("references reject all-empty input") {
  PreprocessConfig cfg;
  CHECK_THROWS_AS(text::make_references({{"...", "  "}}, cfg), Error);
}

TEST_CASE("stopword files ignore comments and blank lines") {
  const std::string path = "test_stopwords.tmp";
  {
    std::ofstream out(path);
    out << "# comment line\n"
        << "the\n"
        << "\n"
        << "  A  \n"
        << "of\r\n";
  }
  const auto words = text::load_stopwords(path);
  std::remove(path.c_str());
  CHECK(words == std::set<std::string>{"the", "a", "of"});
  CHECK_THROWS_AS(text::load_stopwords("does_not_exist.txt"), Error);
}
