// Copyright 2026 The HMT Authors.
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

#include "hmt/transliterate.h"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "hmt/corpus.h"
#include "hmt/text.h"

namespace hmt {
namespace {

constexpr char32_t kVirama = 0x094D;
constexpr char32_t kNukta = 0x093C;
constexpr char32_t kZwnj = 0x200C;
constexpr char32_t kZwj = 0x200D;
constexpr std::string_view kInherentVowel = "a";

enum class Kind { kConsonant, kVowel, kMatra, kSign, kOther };

Kind classify(char32_t c) {
  if ((c >= 0x0915 && c <= 0x0939) || (c >= 0x0958 && c <= 0x095F) ||
      (c >= 0x0978 && c <= 0x097F)) {
    return Kind::kConsonant;
  }
  if ((c >= 0x0904 && c <= 0x0914) || c == 0x0960 || c == 0x0961 ||
      (c >= 0x0972 && c <= 0x0977)) {
    return Kind::kVowel;
  }
  if (c == 0x093A || c == 0x093B || (c >= 0x093E && c <= 0x094C) ||
      c == 0x094E || c == 0x094F || (c >= 0x0955 && c <= 0x0957) ||
      c == 0x0962 || c == 0x0963) {
    return Kind::kMatra;
  }
  if ((c >= 0x0900 && c <= 0x0903) || c == 0x093D) return Kind::kSign;
  return Kind::kOther;
}

struct Unit {
  Kind kind = Kind::kOther;
  std::string latin;
  std::string matra;  // consonants only
  bool has_matra = false;
  bool has_virama = false;
  bool schwa = false;  // decided after parsing
};

Unit make_unit(Kind kind, std::string latin) {
  Unit u;
  u.kind = kind;
  u.latin = std::move(latin);
  return u;
}

bool carries_schwa_candidate(const Unit& u) {
  return u.kind == Kind::kConsonant && !u.has_matra && !u.has_virama;
}

std::string placeholder(char32_t c) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "u%04x", static_cast<unsigned>(c));
  return buf;
}

LenientTransliteration run(std::string_view word,
                           const TransliterationTable& table, bool strict) {
  LenientTransliteration result;
  const std::u32string text = decode_utf8(nfc(word));
  std::vector<Unit> units;
  std::size_t i = 0;
  while (i < text.size()) {
    const char32_t c = text[i];
    if (c == kZwj || c == kZwnj) {
      ++i;
      continue;
    }
    if (c == kVirama) {
      if (!units.empty() && units.back().kind == Kind::kConsonant) {
        units.back().has_virama = true;
      }
      ++i;
      continue;
    }
    std::string_view latin;
    const std::size_t len =
        table.match(std::u32string_view(text).substr(i), &latin);
    if (len == 0) {
      if (c == kNukta) {  // a nukta with no cluster entry modifies nothing
        ++i;
        continue;
      }
      if (strict) throw UncoveredCodepoint(c);
      result.uncovered.push_back(c);
      units.push_back(make_unit(Kind::kOther, placeholder(c)));
      ++i;
      continue;
    }
    const Kind kind = classify(c);
    if (kind == Kind::kMatra && !units.empty() &&
        units.back().kind == Kind::kConsonant && !units.back().has_matra &&
        !units.back().has_virama) {
      units.back().has_matra = true;
      units.back().matra = std::string(latin);
    } else {
      units.push_back(make_unit(kind, std::string(latin)));
    }
    i += len;
  }

  // Inherent-vowel decisions, left to right.
  auto sounds_vowel = [&](std::size_t k) {
    const Unit& u = units[k];
    switch (u.kind) {
      case Kind::kVowel:
      case Kind::kMatra:
      case Kind::kSign:
        return true;
      case Kind::kConsonant:
        return u.has_matra || u.schwa;
      case Kind::kOther:
        return false;
    }
    return false;
  };
  const std::size_t n = units.size();
  for (std::size_t k = 0; k < n; ++k) {
    Unit& u = units[k];
    if (!carries_schwa_candidate(u)) continue;
    // Placeholders for uncovered characters end the word for this purpose.
    if (k + 1 == n || units[k + 1].kind == Kind::kOther) {
      bool vowel_before = false;
      for (std::size_t j = 0; j < k; ++j) vowel_before |= sounds_vowel(j);
      const bool after_conjunct =
          k > 0 && units[k - 1].kind == Kind::kConsonant &&
          units[k - 1].has_virama;
      u.schwa = !vowel_before || after_conjunct;
      continue;
    }
    const Unit& next = units[k + 1];
    const bool next_voiced =
        next.kind == Kind::kConsonant &&
        (next.has_matra || (carries_schwa_candidate(next) && k + 2 < n));
    const bool vowel_before = k > 0 && sounds_vowel(k - 1);
    u.schwa = !(vowel_before && next_voiced);
  }

  for (const Unit& u : units) {
    result.text += u.latin;
    if (u.kind == Kind::kConsonant) {
      if (u.has_matra) {
        result.text += u.matra;
      } else if (u.schwa) {
        result.text += kInherentVowel;
      }
    }
  }
  return result;
}

}  // namespace

UncoveredCodepoint::UncoveredCodepoint(char32_t c)
    : std::runtime_error("no transliteration for " + codepoint_name(c)),
      codepoint_(c) {}

void TransliterationTable::add(std::u32string key, std::string latin) {
  max_key_len_ = std::max(max_key_len_, key.size());
  entries_[std::move(key)] = std::move(latin);
}

std::size_t TransliterationTable::match(std::u32string_view text,
                                        std::string_view* latin) const {
  for (std::size_t len = std::min(max_key_len_, text.size()); len > 0; --len) {
    auto it = entries_.find(std::u32string(text.substr(0, len)));
    if (it != entries_.end()) {
      *latin = it->second;
      return len;
    }
  }
  return 0;
}

TransliterationTable TransliterationTable::parse(std::istream& in) {
  TransliterationTable table;
  for_each_table_line(in, [&](std::size_t line,
                              const std::vector<std::string_view>& fields) {
    if (fields.size() != 2) {
      throw FormatError(line, "expected devanagari<TAB>latin");
    }
    std::u32string key;
    std::string_view k = fields[0];
    if (k.size() > 2 && k.substr(0, 2) == "U+") {
      unsigned value = 0;
      if (std::sscanf(std::string(k.substr(2)).c_str(), "%x", &value) != 1) {
        throw FormatError(line, "bad codepoint '" + std::string(k) + "'");
      }
      key.push_back(static_cast<char32_t>(value));
    } else {
      key = decode_utf8(nfc(k));
    }
    std::string latin = ascii_lower(fields[1]);
    if (key.empty() || latin.empty() ||
        !std::all_of(latin.begin(), latin.end(),
                     [](char c) { return c >= 'a' && c <= 'z'; })) {
      throw FormatError(line, "latin side must be ASCII letters");
    }
    table.add(std::move(key), std::move(latin));
  });
  return table;
}

TransliterationTable TransliterationTable::load(
    const std::filesystem::path& path) {
  return load_table(path, [](std::istream& in) { return parse(in); });
}

void TransliterationTable::write(std::ostream& out) const {
  for (const auto& [key, latin] : entries_) {
    out << encode_utf8(key) << '\t' << latin << '\n';
  }
}

std::string transliterate(std::string_view word,
                          const TransliterationTable& table) {
  return run(word, table, /*strict=*/true).text;
}

LenientTransliteration transliterate_lenient(
    std::string_view word, const TransliterationTable& table) {
  return run(word, table, /*strict=*/false);
}

}  // namespace hmt
