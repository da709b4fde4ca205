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

#include "osumm/porter.hpp"

#include <cstring>

namespace osumm::text {
namespace {

// Working state for one word. b holds the word, k is the index of its last
// character, j is the index of the last character of the candidate stem
// (set by ends()). Indices are signed; j == -1 means the empty stem.
struct Stemmer {
  std::string b;
  int k;
  int j;

  // A consonant is any letter other than a,e,i,o,u, and other than y when
  // y is preceded by a consonant.
  bool cons(int i) const {
    switch (b[i]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // The measure m of b[0..j]: the word has form [C](VC)^m[V].
  int m() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j; ++i)
      if (!cons(i)) return true;
    return false;
  }

  // b[i-1..i] is a double consonant.
  bool doublec(int i) const {
    if (i < 1) return false;
    if (b[i] != b[i - 1]) return false;
    return cons(i);
  }

  // b[i-2..i] is consonant-vowel-consonant with the last consonant not
  // one of w, x, y. Used to restore a trailing e (e.g. fil+ing -> file).
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    const char ch = b[i];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool ends(const char* s) {
    const int length = static_cast<int>(std::strlen(s));
    if (length > k + 1) return false;
    if (b.compare(k + 1 - length, length, s) != 0) return false;
    j = k - length;
    return true;
  }

  // Replace the suffix after j with s.
  void setto(const char* s) {
    b.resize(j + 1);
    b.append(s);
    k = static_cast<int>(b.size()) - 1;
  }

  void r(const char* s) {
    if (m() > 0) setto(s);
  }

  void truncate(int new_k) {
    k = new_k;
    b.resize(k + 1);
  }

  // caresses -> caress, ponies -> poni, caress -> caress, cats -> cat
  void step1a() {
    if (b[k] != 's') return;
    if (ends("sses")) {
      truncate(k - 2);
    } else if (ends("ies")) {
      setto("i");
    } else if (b[k - 1] != 's') {
      truncate(k - 1);
    }
  }

  // feed -> feed, agreed -> agree, plastered -> plaster, motoring -> motor;
  // after removing ed/ing, conflat -> conflate, hopp -> hop, fil -> file.
  void step1b() {
    if (ends("eed")) {
      if (m() > 0) truncate(k - 1);
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      truncate(j);
      j = k;
      if (ends("at")) {
        setto("ate");
      } else if (ends("bl")) {
        setto("ble");
      } else if (ends("iz")) {
        setto("ize");
      } else if (doublec(k)) {
        const char ch = b[k];
        if (ch != 'l' && ch != 's' && ch != 'z') truncate(k - 1);
      } else if (m() == 1 && cvc(k)) {
        setto("e");
      }
    }
  }

  // happy -> happi, sky -> sky
  void step1c() {
    if (ends("y") && vowel_in_stem()) b[k] = 'i';
  }

  // Double-suffix reductions, applied when the stem has m > 0. Keyed on
  // the penultimate character; within a key, the longest suffix decides.
  void step2() {
    if (k < 1) return;
    switch (b[k - 1]) {
      case 'a':
        if (ends("ational")) { r("ate"); break; }
        if (ends("tional")) { r("tion"); break; }
        break;
      case 'c':
        if (ends("enci")) { r("ence"); break; }
        if (ends("anci")) { r("ance"); break; }
        break;
      case 'e':
        if (ends("izer")) { r("ize"); break; }
        break;
      case 'l':
        if (ends("abli")) { r("able"); break; }
        if (ends("alli")) { r("al"); break; }
        if (ends("entli")) { r("ent"); break; }
        if (ends("eli")) { r("e"); break; }
        if (ends("ousli")) { r("ous"); break; }
        break;
      case 'o':
        if (ends("ization")) { r("ize"); break; }
        if (ends("ation")) { r("ate"); break; }
        if (ends("ator")) { r("ate"); break; }
        break;
      case 's':
        if (ends("alism")) { r("al"); break; }
        if (ends("iveness")) { r("ive"); break; }
        if (ends("fulness")) { r("ful"); break; }
        if (ends("ousness")) { r("ous"); break; }
        break;
      case 't':
        if (ends("aliti")) { r("al"); break; }
        if (ends("iviti")) { r("ive"); break; }
        if (ends("biliti")) { r("ble"); break; }
        break;
      default:
        break;
    }
  }

  // triplicate -> triplic, formative -> form, formalize -> formal
  void step3() {
    switch (b[k]) {
      case 'e':
        if (ends("icate")) { r("ic"); break; }
        if (ends("ative")) { r(""); break; }
        if (ends("alize")) { r("al"); break; }
        break;
      case 'i':
        if (ends("iciti")) { r("ic"); break; }
        break;
      case 'l':
        if (ends("ical")) { r("ic"); break; }
        if (ends("ful")) { r(""); break; }
        break;
      case 's':
        if (ends("ness")) { r(""); break; }
        break;
      default:
        break;
    }
  }

  // Single-suffix deletions for stems with m > 1. The matched suffix ends
  // the step whether or not the measure condition lets it fire; -ion is
  // deleted only after s or t.
  void step4() {
    if (k < 1) return;
    switch (b[k - 1]) {
      case 'a':
        if (ends("al")) break;
        return;
      case 'c':
        if (ends("ance")) break;
        if (ends("ence")) break;
        return;
      case 'e':
        if (ends("er")) break;
        return;
      case 'i':
        if (ends("ic")) break;
        return;
      case 'l':
        if (ends("able")) break;
        if (ends("ible")) break;
        return;
      case 'n':
        if (ends("ant")) break;
        if (ends("ement")) break;
        if (ends("ment")) break;
        if (ends("ent")) break;
        return;
      case 'o':
        if (ends("ion") && j >= 0 && (b[j] == 's' || b[j] == 't')) break;
        if (ends("ou")) break;
        return;
      case 's':
        if (ends("ism")) break;
        return;
      case 't':
        if (ends("ate")) break;
        if (ends("iti")) break;
        return;
      case 'u':
        if (ends("ous")) break;
        return;
      case 'v':
        if (ends("ive")) break;
        return;
      case 'z':
        if (ends("ize")) break;
        return;
      default:
        return;
    }
    if (m() > 1) truncate(j);
  }

  // probate -> probat, rate -> rate, cease -> ceas; controll -> control
  void step5() {
    j = k;
    if (b[k] == 'e') {
      const int a = m();
      if (a > 1 || (a == 1 && !cvc(k - 1))) truncate(k - 1);
    }
    j = k;
    if (b[k] == 'l' && doublec(k) && m() > 1) truncate(k - 1);
  }
};

}  // namespace

std::string porter_stem(std::string_view token) {
  if (token.size() <= 2) return std::string(token);
  for (const char c : token)
    if (c < 'a' || c > 'z') return std::string(token);
  Stemmer st{std::string(token), static_cast<int>(token.size()) - 1, 0};
  st.step1a();
  st.step1b();
  st.step1c();
  st.step2();
  st.step3();
  st.step4();
  st.step5();
  return st.b.substr(0, st.k + 1);
}

}  // namespace osumm::text
