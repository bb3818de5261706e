// Copyright 2026 The Crosscheck Authors.
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

#include "crosscheck/text/porter_stemmer.h"

#include <functional>
#include <initializer_list>

namespace crosscheck::text {
namespace {

// A word under transformation. All predicates look at the prefix [0, len).
class Word {
 public:
  explicit Word(std::string_view w) : s_(w) {}

  const std::string& str() const { return s_; }
  size_t size() const { return s_.size(); }

  bool EndsWith(std::string_view suffix) const {
    return s_.size() >= suffix.size() &&
           std::string_view(s_).substr(s_.size() - suffix.size()) == suffix;
  }

  static bool IsVowelLetter(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  }

  // 'y' is a consonant at the start of a word or after a vowel.
  bool IsConsonant(size_t i) const {
    bool flip = false;
    while (i > 0 && s_[i] == 'y') {
      flip = !flip;
      --i;
    }
    return !IsVowelLetter(s_[i]) != flip;
  }

  // m in [C](VC){m}[V] over the first `len` letters.
  int Measure(size_t len) const {
    int m = 0;
    bool prev_consonant = true;
    bool prev_vowel = false;
    for (size_t i = 0; i < len; ++i) {
      const char c = s_[i];
      const bool consonant =
          IsVowelLetter(c) ? false : (c == 'y' ? (i == 0 || !prev_consonant)
                                               : true);
      if (consonant && prev_vowel) ++m;
      prev_vowel = !consonant;
      prev_consonant = consonant;
    }
    return m;
  }

  bool ContainsVowel(size_t len) const {
    bool prev_consonant = true;
    for (size_t i = 0; i < len; ++i) {
      const char c = s_[i];
      const bool consonant =
          IsVowelLetter(c) ? false : (c == 'y' ? (i == 0 || !prev_consonant)
                                               : true);
      if (!consonant) return true;
      prev_consonant = consonant;
    }
    return false;
  }

  // *d: ends with a double consonant.
  bool EndsDoubleConsonant(size_t len) const {
    return len >= 2 && s_[len - 1] == s_[len - 2] && IsConsonant(len - 1);
  }

  // *o: ends consonant-vowel-consonant, last not w, x or y.
  bool EndsCvc(size_t len) const {
    if (len < 3) return false;
    const char last = s_[len - 1];
    return IsConsonant(len - 3) && !IsConsonant(len - 2) &&
           IsConsonant(len - 1) && last != 'w' && last != 'x' && last != 'y';
  }

  void ReplaceTail(size_t drop, std::string_view replacement) {
    s_.resize(s_.size() - drop);
    s_.append(replacement);
  }

 private:
  std::string s_;
};

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
  int min_measure;  // condition m > min_measure; -1 means unconditional
};

// Applies the first rule whose suffix matches. A matching rule whose
// condition fails ends the step without trying later rules.
void ApplyFirst(Word& w, std::initializer_list<Rule> rules) {
  for (const Rule& r : rules) {
    if (!w.EndsWith(r.suffix)) continue;
    const size_t stem_len = w.size() - r.suffix.size();
    if (r.min_measure < 0 || w.Measure(stem_len) > r.min_measure) {
      w.ReplaceTail(r.suffix.size(), r.replacement);
    }
    return;
  }
}

void Step1a(Word& w) {
  ApplyFirst(w, {{"sses", "ss", -1}, {"ies", "i", -1}, {"ss", "ss", -1},
                 {"s", "", -1}});
}

void Step1b(Word& w) {
  if (w.EndsWith("eed")) {
    if (w.Measure(w.size() - 3) > 0) w.ReplaceTail(1, "");
    return;
  }
  size_t suffix_len = 0;
  for (std::string_view suffix : {"ed", "ing"}) {
    if (w.EndsWith(suffix) && w.ContainsVowel(w.size() - suffix.size())) {
      suffix_len = suffix.size();
      break;
    }
  }
  if (suffix_len == 0) return;
  w.ReplaceTail(suffix_len, "");

  if (w.EndsWith("at") || w.EndsWith("bl") || w.EndsWith("iz")) {
    w.ReplaceTail(0, "e");
  } else if (w.EndsDoubleConsonant(w.size())) {
    const char last = w.str().back();
    if (last != 'l' && last != 's' && last != 'z') w.ReplaceTail(1, "");
  } else if (w.Measure(w.size()) == 1 && w.EndsCvc(w.size())) {
    w.ReplaceTail(0, "e");
  }
}

void Step1c(Word& w) {
  if (w.EndsWith("y") && w.ContainsVowel(w.size() - 1)) w.ReplaceTail(1, "i");
}

void Step2(Word& w) {
  ApplyFirst(w, {
                    {"ational", "ate", 0}, {"tional", "tion", 0},
                    {"enci", "ence", 0},   {"anci", "ance", 0},
                    {"izer", "ize", 0},    {"abli", "able", 0},
                    {"alli", "al", 0},     {"entli", "ent", 0},
                    {"eli", "e", 0},       {"ousli", "ous", 0},
                    {"ization", "ize", 0}, {"ation", "ate", 0},
                    {"ator", "ate", 0},    {"alism", "al", 0},
                    {"iveness", "ive", 0}, {"fulness", "ful", 0},
                    {"ousness", "ous", 0}, {"aliti", "al", 0},
                    {"iviti", "ive", 0},   {"biliti", "ble", 0},
                });
}

void Step3(Word& w) {
  ApplyFirst(w, {
                    {"icate", "ic", 0}, {"ative", "", 0}, {"alize", "al", 0},
                    {"iciti", "ic", 0}, {"ical", "ic", 0}, {"ful", "", 0},
                    {"ness", "", 0},
                });
}

void Step4(Word& w) {
  for (std::string_view suffix :
       {"al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
        "ment", "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive",
        "ize"}) {
    if (!w.EndsWith(suffix)) continue;
    const size_t stem_len = w.size() - suffix.size();
    bool ok = w.Measure(stem_len) > 1;
    if (ok && suffix == "ion") {
      ok = stem_len > 0 &&
           (w.str()[stem_len - 1] == 's' || w.str()[stem_len - 1] == 't');
    }
    if (ok) w.ReplaceTail(suffix.size(), "");
    return;
  }
}

void Step5a(Word& w) {
  if (!w.EndsWith("e")) return;
  const size_t stem_len = w.size() - 1;
  const int m = w.Measure(stem_len);
  if (m > 1 || (m == 1 && !w.EndsCvc(stem_len))) w.ReplaceTail(1, "");
}

void Step5b(Word& w) {
  if (w.EndsWith("ll") && w.Measure(w.size() - 1) > 1) w.ReplaceTail(1, "");
}

bool IsLowerAscii(std::string_view s) {
  for (char c : s) {
    if (c < 'a' || c > 'z') return false;
  }
  return !s.empty();
}

}  // namespace

std::string PorterStem(std::string_view word) {
  if (!IsLowerAscii(word)) return std::string(word);
  Word w(word);
  Step1a(w);
  Step1b(w);
  Step1c(w);
  Step2(w);
  Step3(w);
  Step4(w);
  Step5a(w);
  Step5b(w);
  return w.str();
}

}  // namespace crosscheck::text
