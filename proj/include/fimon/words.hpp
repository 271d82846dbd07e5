// Copyright 2026 The fimon Authors. All Rights Reserved.
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

// Words over X ∪ X⁻¹ and the extended terms u₀ (v₁)^m u₁ ⋯ (vₙ)^m uₙ that
// name elements of F-inverse monoids.

#ifndef FIMON_WORDS_HPP_
#define FIMON_WORDS_HPP_

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace fimon {

  //! A generator or the formal inverse of a generator.
  struct Letter {
    uint32_t base    = 0;
    bool     inverse = false;

    [[nodiscard]] constexpr Letter inverted() const noexcept {
      return Letter{base, !inverse};
    }

    [[nodiscard]] constexpr int sign() const noexcept {
      return inverse ? -1 : 1;
    }

    constexpr auto operator<=>(Letter const&) const = default;
  };

  [[nodiscard]] constexpr Letter pos(uint32_t base) noexcept {
    return Letter{base, false};
  }

  [[nodiscard]] constexpr Letter neg(uint32_t base) noexcept {
    return Letter{base, true};
  }

  //! The generating set X, interned to indices 0, 1, ...
  class Alphabet {
   public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> names) {
      for (auto& name : names) {
        add(std::move(name));
      }
    }

    Alphabet(std::initializer_list<std::string_view> names) {
      for (auto name : names) {
        add(std::string(name));
      }
    }

    //! Throws parse_error on an invalid or repeated name.
    uint32_t add(std::string name) {
      if (!is_valid_name(name)) {
        throw parse_error("invalid generator name \"" + name + "\"");
      }
      if (_index.contains(name)) {
        throw parse_error("generator \"" + name + "\" declared twice");
      }
      auto const i = static_cast<uint32_t>(_names.size());
      _index.emplace(name, i);
      _names.push_back(std::move(name));
      return i;
    }

    [[nodiscard]] size_t size() const noexcept {
      return _names.size();
    }

    [[nodiscard]] std::string const& name(uint32_t base) const {
      return _names.at(base);
    }

    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    [[nodiscard]] std::optional<uint32_t> find(std::string_view name) const {
      auto it = _index.find(std::string(name));
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    [[nodiscard]] uint32_t index(std::string_view name) const {
      auto i = find(name);
      if (!i) {
        throw parse_error("unknown generator \"" + std::string(name) + "\"");
      }
      return *i;
    }

    [[nodiscard]] bool contains(Letter l) const noexcept {
      return l.base < _names.size();
    }

    bool operator==(Alphabet const& that) const {
      return _names == that._names;
    }

    [[nodiscard]] static bool is_valid_name(std::string_view name) noexcept {
      if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
        return false;
      }
      return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      });
    }

   private:
    std::vector<std::string>                  _names;
    std::unordered_map<std::string, uint32_t> _index;
  };

  //! An element of the free monoid with involution (X ∪ X⁻¹)*.  No implicit
  //! reduction ever happens: x x⁻¹ is a word of length 2.
  class Word {
   public:
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;
    Word(std::initializer_list<Letter> letters) : _letters(letters) {}
    explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}

    [[nodiscard]] size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }
    [[nodiscard]] const_iterator begin() const noexcept {
      return _letters.begin();
    }
    [[nodiscard]] const_iterator end() const noexcept {
      return _letters.end();
    }
    [[nodiscard]] Letter operator[](size_t i) const {
      return _letters[i];
    }
    [[nodiscard]] std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }

    void push_back(Letter l) {
      _letters.push_back(l);
    }

    Word& operator*=(Word const& that) {
      _letters.insert(_letters.end(), that._letters.begin(), that._letters.end());
      return *this;
    }

    friend Word operator*(Word lhs, Word const& rhs) {
      lhs *= rhs;
      return lhs;
    }

    bool operator==(Word const&) const = default;
    auto operator<=>(Word const&) const = default;

   private:
    std::vector<Letter> _letters;
  };

  [[nodiscard]] inline Word invert_word(Word const& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      out.push_back(it->inverted());
    }
    return Word(std::move(out));
  }

  //! Cancels factors x x⁻¹ and x⁻¹ x until none remain.
  [[nodiscard]] inline Word free_reduce(Word const& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (auto l : w) {
      if (!stack.empty() && stack.back() == l.inverted()) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    }
    return Word(std::move(stack));
  }

  [[nodiscard]] inline bool is_reduced(Word const& w) noexcept {
    return std::adjacent_find(w.begin(),
                              w.end(),
                              [](Letter a, Letter b) { return a == b.inverted(); })
           == w.end();
  }

  //! A term u₀ (v₁)^m u₁ ⋯ (vₙ)^m uₙ.  The uᵢ are the path segments and the
  //! vᵢ the jump words; n = 0 is a plain word.
  class FTerm {
   public:
    FTerm() : _segments(1) {}

    // NOLINTNEXTLINE(runtime/explicit)
    FTerm(Word w) : _segments{std::move(w)} {}

    [[nodiscard]] static FTerm jump(Word v) {
      FTerm t;
      t._jumps.push_back(std::move(v));
      t._segments.emplace_back();
      return t;
    }

    [[nodiscard]] size_t jump_count() const noexcept {
      return _jumps.size();
    }
    [[nodiscard]] bool is_word() const noexcept {
      return _jumps.empty();
    }
    //! Segment i, 0 ≤ i ≤ jump_count().
    [[nodiscard]] Word const& segment(size_t i) const {
      return _segments.at(i);
    }
    //! Jump word i, 0 ≤ i < jump_count() (this is v_{i+1}).
    [[nodiscard]] Word const& jump_word(size_t i) const {
      return _jumps.at(i);
    }
    [[nodiscard]] std::vector<Word> const& segments() const noexcept {
      return _segments;
    }
    [[nodiscard]] std::vector<Word> const& jump_words() const noexcept {
      return _jumps;
    }

    //! The plain word of a term without m-markers.
    [[nodiscard]] Word const& as_word() const {
      if (!is_word()) {
        throw error("term has m-markers and is not a word");
      }
      return _segments.front();
    }

    //! Sum of the lengths of all segments and jump words.
    [[nodiscard]] size_t length() const noexcept {
      size_t n = 0;
      for (auto const& u : _segments) {
        n += u.size();
      }
      for (auto const& v : _jumps) {
        n += v.size();
      }
      return n;
    }

    FTerm& operator*=(FTerm const& that) {
      _segments.back() *= that._segments.front();
      _jumps.insert(_jumps.end(), that._jumps.begin(), that._jumps.end());
      _segments.insert(
          _segments.end(), that._segments.begin() + 1, that._segments.end());
      return *this;
    }

    friend FTerm operator*(FTerm lhs, FTerm const& rhs) {
      lhs *= rhs;
      return lhs;
    }

    bool operator==(FTerm const&) const = default;

   private:
    friend FTerm invert_term(FTerm const&);

    std::vector<Word> _segments;
    std::vector<Word> _jumps;
  };

  //! uₙ⁻¹ (vₙ⁻¹)^m ⋯ (v₁⁻¹)^m u₀⁻¹, using (w⁻¹)^m = (w^m)⁻¹.
  [[nodiscard]] inline FTerm invert_term(FTerm const& t) {
    FTerm out;
    out._segments.clear();
    for (auto it = t._segments.rbegin(); it != t._segments.rend(); ++it) {
      out._segments.push_back(invert_word(*it));
    }
    for (auto it = t._jumps.rbegin(); it != t._jumps.rend(); ++it) {
      out._jumps.push_back(invert_word(*it));
    }
    return out;
  }

  //! u₀ v₁ u₁ ⋯ vₙ uₙ.
  [[nodiscard]] inline Word erase_m(FTerm const& t) {
    Word out = t.segment(0);
    for (size_t i = 0; i < t.jump_count(); ++i) {
      out *= t.jump_word(i);
      out *= t.segment(i + 1);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Printing
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] inline std::string to_string(Letter l, Alphabet const& a) {
    return l.inverse ? a.name(l.base) + "^-1" : a.name(l.base);
  }

  [[nodiscard]] inline std::string to_string(Word const& w, Alphabet const& a) {
    std::string out;
    for (auto l : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += to_string(l, a);
    }
    return out;
  }

  [[nodiscard]] inline std::string to_string(FTerm const& t,
                                             Alphabet const& a) {
    std::string out;
    auto        append = [&out](std::string const& s) {
      if (s.empty()) {
        return;
      }
      if (!out.empty()) {
        out += ' ';
      }
      out += s;
    };
    append(to_string(t.segment(0), a));
    for (size_t i = 0; i < t.jump_count(); ++i) {
      append("(" + to_string(t.jump_word(i), a) + ")^m");
      append(to_string(t.segment(i + 1), a));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    class TermParser {
     public:
      TermParser(std::string_view text, Alphabet const& alphabet)
          : _text(text), _alphabet(alphabet) {}

      FTerm parse() {
        FTerm t = sequence();
        skip_space();
        if (_pos != _text.size()) {
          fail("unexpected ')'");
        }
        return t;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw parse_error(what + " at offset " + std::to_string(_pos)
                          + " in \"" + std::string(_text) + "\"");
      }

      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      FTerm sequence() {
        FTerm t;
        while (true) {
          skip_space();
          if (_pos == _text.size() || _text[_pos] == ')') {
            return t;
          }
          t *= atom();
        }
      }

      FTerm atom() {
        FTerm t;
        char  c = _text[_pos];
        if (c == '(') {
          ++_pos;
          t = sequence();
          if (_pos == _text.size()) {
            fail("missing ')'");
          }
          ++_pos;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
          size_t start = _pos;
          while (_pos < _text.size()
                 && (std::isalnum(static_cast<unsigned char>(_text[_pos]))
                     || _text[_pos] == '_')) {
            ++_pos;
          }
          auto name = _text.substr(start, _pos - start);
          auto base = _alphabet.find(name);
          if (!base) {
            fail("unknown generator \"" + std::string(name) + "\"");
          }
          t = FTerm(Word{pos(*base)});
        } else {
          fail(std::string("unexpected character '") + c + "'");
        }
        return suffix(std::move(t));
      }

      FTerm suffix(FTerm t) {
        if (_pos == _text.size() || _text[_pos] != '^') {
          return t;
        }
        ++_pos;
        auto rest = _text.substr(_pos);
        if (rest.starts_with("-1")) {
          _pos += 2;
          t = invert_term(t);
        } else if (rest.starts_with("m")) {
          _pos += 1;
          if (!t.is_word()) {
            fail("nested m-marker");
          }
          t = FTerm::jump(t.as_word());
        } else {
          fail("malformed exponent");
        }
        if (_pos < _text.size()
            && (_text[_pos] == '^'
                || std::isalnum(static_cast<unsigned char>(_text[_pos]))
                || _text[_pos] == '_')) {
          fail("malformed exponent");
        }
        return t;
      }

      std::string_view _text;
      Alphabet const&  _alphabet;
      size_t           _pos = 0;
    };

  }  // namespace detail

  //! Parses the term grammar: generator names with an optional ^-1 or ^m,
  //! parenthesised groups with an optional ^-1 or ^m, and juxtaposition.
  [[nodiscard]] inline FTerm parse_term(std::string_view  text,
                                        Alphabet const& alphabet) {
    return detail::TermParser(text, alphabet).parse();
  }

  [[nodiscard]] inline Word parse_word(std::string_view  text,
                                       Alphabet const& alphabet) {
    FTerm t = parse_term(text, alphabet);
    if (!t.is_word()) {
      throw parse_error("m-marker in \"" + std::string(text)
                        + "\" where a plain word is expected");
    }
    return t.as_word();
  }

}  // namespace fimon

#endif  // FIMON_WORDS_HPP_
