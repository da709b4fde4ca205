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

#include "osumm/text.hpp"

#include <fstream>

#include "osumm/error.hpp"
#include "osumm/porter.hpp"

namespace osumm::text {
namespace {

// Decodes the next UTF-8 code point starting at i and advances i. Invalid
// bytes are returned as-is so that malformed input degrades gracefully.
uint32_t next_codepoint(std::string_view s, size_t& i) {
  const auto byte = [&](size_t p) { return static_cast<uint8_t>(s[p]); };
  const uint8_t b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  size_t len = 0;
  uint32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return b0;
  }
  if (i + len > s.size()) {
    ++i;
    return b0;
  }
  for (size_t p = 1; p < len; ++p) {
    const uint8_t bc = byte(i + p);
    if ((bc & 0xC0) != 0x80) {
      ++i;
      return b0;
    }
    cp = (cp << 6) | (bc & 0x3F);
  }
  i += len;
  return cp;
}

bool is_space_cp(uint32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

// Pragmatic punctuation set: ASCII punctuation plus the common Unicode
// dashes, quotes and CJK brackets. Not a full Unicode category lookup.
bool is_punct_cp(uint32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  switch (cp) {
    case 0xA1: case 0xA7: case 0xAB: case 0xB6: case 0xB7: case 0xBB:
    case 0xBF:
      return true;
    default:
      break;
  }
  if (cp >= 0x2010 && cp <= 0x2027) return true;   // dashes, quotes, bullets
  if (cp >= 0x2030 && cp <= 0x205E) return true;   // permille..general punct
  if (cp >= 0x3001 && cp <= 0x3003) return true;
  if (cp >= 0x3008 && cp <= 0x3011) return true;
  if (cp >= 0x3014 && cp <= 0x301F) return true;
  if (cp >= 0xFF01 && cp <= 0xFF0F) return true;   // fullwidth punctuation
  if (cp >= 0xFF1A && cp <= 0xFF20) return true;
  if (cp >= 0xFF3B && cp <= 0xFF40) return true;
  if (cp >= 0xFF5B && cp <= 0xFF65) return true;
  return false;
}

// Strips punctuation code points from both edges of a token; interior
// characters (hyphens, apostrophes, anything else) stay.
std::string strip_edges(std::string_view token) {
  // code point start offsets, plus one-past-the-end
  std::vector<std::pair<size_t, uint32_t>> cps;
  size_t i = 0;
  while (i < token.size()) {
    const size_t start = i;
    const uint32_t cp = next_codepoint(token, i);
    cps.emplace_back(start, cp);
  }
  size_t first = 0;
  while (first < cps.size() && is_punct_cp(cps[first].second)) ++first;
  size_t last = cps.size();
  while (last > first && is_punct_cp(cps[last - 1].second)) --last;
  if (first >= last) return {};
  const size_t begin = cps[first].first;
  const size_t end = last < cps.size() ? cps[last].first : token.size();
  return std::string(token.substr(begin, end - begin));
}

void lowercase_ascii(std::string& s) {
  for (char& c : s)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
}

}  // namespace

std::vector<std::string> tokenize(std::string_view raw, bool lowercase) {
  std::vector<std::string> out;
  size_t i = 0;
  size_t token_start = 0;
  bool in_token = false;
  const auto flush = [&](size_t end) {
    if (!in_token) return;
    std::string tok = strip_edges(raw.substr(token_start, end - token_start));
    if (!tok.empty()) {
      if (lowercase) lowercase_ascii(tok);
      out.push_back(std::move(tok));
    }
    in_token = false;
  };
  while (i < raw.size()) {
    const size_t at = i;
    const uint32_t cp = next_codepoint(raw, i);
    if (is_space_cp(cp)) {
      flush(at);
    } else if (!in_token) {
      in_token = true;
      token_start = at;
    }
  }
  flush(raw.size());
  return out;
}

Sentence preprocess_sentence(uint32_t id, std::string_view raw,
                             const PreprocessConfig& cfg) {
  Sentence s;
  s.id = id;
  std::vector<std::string> toks = tokenize(raw, cfg.lowercase);
  s.raw_word_count = static_cast<uint32_t>(toks.size());
  s.tokens.reserve(toks.size());
  for (std::string& t : toks) {
    if (cfg.stopword_removal && cfg.stopwords.count(t) > 0) continue;
    s.tokens.push_back(cfg.stemming ? porter_stem(t) : std::move(t));
  }
  return s;
}

DocumentSet make_document_set(const std::vector<std::vector<std::string>>& docs,
                              const PreprocessConfig& cfg) {
  DocumentSet set;
  uint32_t id = 0;
  for (const auto& doc : docs) {
    for (const auto& raw : doc) {
      Sentence s = preprocess_sentence(id, raw, cfg);
      if (s.raw_word_count == 0) continue;
      set.sentences.push_back(std::move(s));
      ++id;
    }
  }
  return set;
}

std::vector<ReferenceSummary> make_references(
    const std::vector<std::vector<std::string>>& refs,
    const PreprocessConfig& cfg) {
  std::vector<ReferenceSummary> out;
  out.reserve(refs.size());
  for (size_t k = 0; k < refs.size(); ++k) {
    ReferenceSummary ref;
    ref.id = static_cast<uint32_t>(k);
    for (const auto& raw : refs[k]) {
      Sentence s = preprocess_sentence(0, raw, cfg);
      if (s.tokens.empty()) continue;
      ref.sentences.push_back(std::move(s.tokens));
    }
    if (ref.sentences.empty())
      throw Error::validation("reference summary " + std::to_string(k) +
                              " has no non-empty sentence after preprocessing");
    out.push_back(std::move(ref));
  }
  return out;
}

std::set<std::string> load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error::io("cannot open stopword file: " + path);
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t a = line.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t");
    std::string w = line.substr(a, b - a + 1);
    if (w.empty() || w[0] == '#') continue;
    lowercase_ascii(w);
    words.insert(std::move(w));
  }
  return words;
}

}  // namespace osumm::text
