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

// X-generated groups with decidable word problem: free groups, free abelian
// groups and finite permutation groups.  Elements are kept in canonical form
// so that equality, ordering and hashing are literal.

#ifndef FIMON_GROUPS_HPP_
#define FIMON_GROUPS_HPP_

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "words.hpp"

namespace fimon {

  enum class GroupKind : uint8_t { free, free_abelian, permutation };

  //! An element of a Group in canonical form.
  //!
  //! * free: the freely reduced word, letter x_i encoded as i + 1 and its
  //!   inverse as -(i + 1);
  //! * free_abelian: the exponent vector;
  //! * permutation: the image table on {0, ..., degree - 1}.
  //!
  //! The ordering is shortlex on the form, which for free groups orders
  //! elements by distance from the identity first.
  class GroupElem {
   public:
    GroupElem() = default;
    GroupElem(GroupKind kind, std::vector<int32_t> form)
        : _kind(kind), _form(std::move(form)) {}

    [[nodiscard]] GroupKind kind() const noexcept {
      return _kind;
    }
    [[nodiscard]] std::vector<int32_t> const& form() const noexcept {
      return _form;
    }

    bool operator==(GroupElem const&) const = default;

    std::strong_ordering operator<=>(GroupElem const& that) const {
      if (auto c = _kind <=> that._kind; c != 0) {
        return c;
      }
      if (auto c = _form.size() <=> that._form.size(); c != 0) {
        return c;
      }
      return _form <=> that._form;
    }

   private:
    GroupKind            _kind = GroupKind::free;
    std::vector<int32_t> _form;
  };

  //! The X-generated group G together with its generator map X → G.
  class Group {
   public:
    using Permutation = std::vector<uint32_t>;

    [[nodiscard]] static Group free(Alphabet alphabet) {
      return Group(GroupKind::free, std::move(alphabet), 0, {});
    }

    [[nodiscard]] static Group free_abelian(Alphabet alphabet) {
      return Group(GroupKind::free_abelian, std::move(alphabet), 0, {});
    }

    //! Images are given 0-based, one per generator.
    [[nodiscard]] static Group permutation(Alphabet                 alphabet,
                                           size_t                   degree,
                                           std::vector<Permutation> images) {
      if (degree == 0) {
        throw error("permutation group of degree 0");
      }
      if (images.size() != alphabet.size()) {
        throw error("expected one permutation per generator, found "
                    + std::to_string(images.size()) + " for "
                    + std::to_string(alphabet.size()) + " generators");
      }
      for (size_t i = 0; i < images.size(); ++i) {
        auto const& p = images[i];
        if (p.size() != degree) {
          throw error("image of " + alphabet.name(i) + " has wrong degree");
        }
        std::vector<bool> hit(degree, false);
        for (auto x : p) {
          if (x >= degree || hit[x]) {
            throw error("image of " + alphabet.name(i) + " is not a bijection");
          }
          hit[x] = true;
        }
      }
      return Group(
          GroupKind::permutation, std::move(alphabet), degree, std::move(images));
    }

    [[nodiscard]] GroupKind kind() const noexcept {
      return _kind;
    }
    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] size_t rank() const noexcept {
      return _alphabet.size();
    }
    [[nodiscard]] size_t degree() const noexcept {
      return _degree;
    }
    [[nodiscard]] bool is_finite() const noexcept {
      return _kind == GroupKind::permutation;
    }

    [[nodiscard]] GroupElem identity() const {
      switch (_kind) {
        case GroupKind::free:
          return GroupElem(_kind, {});
        case GroupKind::free_abelian:
          return GroupElem(_kind, std::vector<int32_t>(rank(), 0));
        case GroupKind::permutation: {
          std::vector<int32_t> id(_degree);
          for (size_t i = 0; i < _degree; ++i) {
            id[i] = static_cast<int32_t>(i);
          }
          return GroupElem(_kind, std::move(id));
        }
      }
      return {};
    }

    [[nodiscard]] GroupElem generator(Letter l) const {
      return act(identity(), l);
    }

    //! g · l, the target of the l-edge leaving g in the Cayley graph.
    [[nodiscard]] GroupElem act(GroupElem const& g, Letter l) const {
      validate(g);
      validate(l);
      auto form = g.form();
      switch (_kind) {
        case GroupKind::free: {
          auto code = l.inverse ? -static_cast<int32_t>(l.base + 1)
                                : static_cast<int32_t>(l.base + 1);
          if (!form.empty() && form.back() == -code) {
            form.pop_back();
          } else {
            form.push_back(code);
          }
          break;
        }
        case GroupKind::free_abelian:
          form[l.base] += l.sign();
          break;
        case GroupKind::permutation: {
          auto const& p = l.inverse ? _inverse_images[l.base] : _images[l.base];
          for (auto& x : form) {
            x = static_cast<int32_t>(p[static_cast<size_t>(x)]);
          }
          break;
        }
      }
      return GroupElem(_kind, std::move(form));
    }

    [[nodiscard]] GroupElem eval(Word const& w) const {
      return act(identity(), w);
    }

    //! g · w_G.
    [[nodiscard]] GroupElem act(GroupElem g, Word const& w) const {
      for (auto l : w) {
        g = act(g, l);
      }
      return g;
    }

    //! The image of a term in G, which ignores the m-markers.
    [[nodiscard]] GroupElem eval(FTerm const& t) const {
      return eval(erase_m(t));
    }

    [[nodiscard]] GroupElem multiply(GroupElem const& a,
                                     GroupElem const& b) const {
      validate(a);
      validate(b);
      switch (_kind) {
        case GroupKind::free:
          return act(a, word_of(b));
        case GroupKind::free_abelian: {
          auto form = a.form();
          for (size_t i = 0; i < form.size(); ++i) {
            form[i] += b.form()[i];
          }
          return GroupElem(_kind, std::move(form));
        }
        case GroupKind::permutation: {
          // apply a, then b
          auto form = a.form();
          for (auto& x : form) {
            x = b.form()[static_cast<size_t>(x)];
          }
          return GroupElem(_kind, std::move(form));
        }
      }
      return {};
    }

    [[nodiscard]] GroupElem inverse(GroupElem const& a) const {
      validate(a);
      switch (_kind) {
        case GroupKind::free:
          return GroupElem(_kind, word_codes(invert_word(word_of(a))));
        case GroupKind::free_abelian: {
          auto form = a.form();
          for (auto& x : form) {
            x = -x;
          }
          return GroupElem(_kind, std::move(form));
        }
        case GroupKind::permutation: {
          std::vector<int32_t> form(a.form().size());
          for (size_t i = 0; i < form.size(); ++i) {
            form[static_cast<size_t>(a.form()[i])] = static_cast<int32_t>(i);
          }
          return GroupElem(_kind, std::move(form));
        }
      }
      return {};
    }

    //! The unique reduced word representing g; free groups only.
    [[nodiscard]] Word geodesic(GroupElem const& g) const {
      if (_kind != GroupKind::free) {
        throw error("geodesic words are only available in free groups");
      }
      validate(g);
      return word_of(g);
    }

    //! All elements of a finite group, in breadth-first order from 1.
    [[nodiscard]] std::vector<GroupElem> elements() const {
      if (!is_finite()) {
        throw error("cannot enumerate the elements of an infinite group");
      }
      std::set<GroupElem>    seen{identity()};
      std::vector<GroupElem> out{identity()};
      for (size_t i = 0; i < out.size(); ++i) {
        for (uint32_t b = 0; b < rank(); ++b) {
          for (auto l : {pos(b), neg(b)}) {
            auto h = act(out[i], l);
            if (seen.insert(h).second) {
              out.push_back(std::move(h));
            }
          }
        }
      }
      return out;
    }

    //! Human-readable canonical form: a reduced word, an exponent product,
    //! or cycle notation.  The identity prints as 1, or () for permutations.
    [[nodiscard]] std::string to_string(GroupElem const& g) const {
      validate(g);
      switch (_kind) {
        case GroupKind::free: {
          auto s = fimon::to_string(word_of(g), _alphabet);
          return s.empty() ? "1" : s;
        }
        case GroupKind::free_abelian: {
          std::string out;
          for (size_t i = 0; i < rank(); ++i) {
            auto e = g.form()[i];
            if (e == 0) {
              continue;
            }
            if (!out.empty()) {
              out += ' ';
            }
            out += _alphabet.name(static_cast<uint32_t>(i));
            if (e != 1) {
              out += '^' + std::to_string(e);
            }
          }
          return out.empty() ? "1" : out;
        }
        case GroupKind::permutation: {
          std::string       out;
          std::vector<bool> done(_degree, false);
          for (size_t i = 0; i < _degree; ++i) {
            if (done[i] || g.form()[i] == static_cast<int32_t>(i)) {
              continue;
            }
            out += '(';
            size_t j = i;
            do {
              done[j] = true;
              out += std::to_string(j + 1);
              j = static_cast<size_t>(g.form()[j]);
              if (j != i) {
                out += ' ';
              }
            } while (j != i);
            out += ')';
          }
          return out.empty() ? "()" : out;
        }
      }
      return {};
    }

    bool operator==(Group const& that) const {
      return _kind == that._kind && _alphabet == that._alphabet
             && _degree == that._degree && _images == that._images;
    }

    //! Throws mismatch_error if g cannot be an element of this group.
    void validate(GroupElem const& g) const {
      bool ok = g.kind() == _kind;
      if (ok) {
        switch (_kind) {
          case GroupKind::free:
            ok = std::all_of(g.form().begin(), g.form().end(), [this](int32_t c) {
              return c != 0 && static_cast<size_t>(c < 0 ? -c : c) <= rank();
            });
            break;
          case GroupKind::free_abelian:
            ok = g.form().size() == rank();
            break;
          case GroupKind::permutation:
            ok = g.form().size() == _degree;
            break;
        }
      }
      if (!ok) {
        throw mismatch_error("group element does not belong to this group");
      }
    }

    void validate(Letter l) const {
      if (!_alphabet.contains(l)) {
        throw mismatch_error("letter outside the group's alphabet");
      }
    }

   private:
    Group(GroupKind                kind,
          Alphabet                 alphabet,
          size_t                   degree,
          std::vector<Permutation> images)
        : _kind(kind),
          _alphabet(std::move(alphabet)),
          _degree(degree),
          _images(std::move(images)) {
      for (auto const& p : _images) {
        Permutation q(p.size());
        for (size_t i = 0; i < p.size(); ++i) {
          q[p[i]] = static_cast<uint32_t>(i);
        }
        _inverse_images.push_back(std::move(q));
      }
    }

    static Word word_of(GroupElem const& g) {
      Word w;
      for (auto c : g.form()) {
        w.push_back(c > 0 ? pos(static_cast<uint32_t>(c - 1))
                          : neg(static_cast<uint32_t>(-c - 1)));
      }
      return w;
    }

    static std::vector<int32_t> word_codes(Word const& w) {
      std::vector<int32_t> out;
      out.reserve(w.size());
      for (auto l : w) {
        auto c = static_cast<int32_t>(l.base + 1);
        out.push_back(l.inverse ? -c : c);
      }
      return out;
    }

    GroupKind                _kind;
    Alphabet                 _alphabet;
    size_t                   _degree;
    std::vector<Permutation> _images;
    std::vector<Permutation> _inverse_images;
  };

  using GroupPtr = std::shared_ptr<Group const>;

  [[nodiscard]] inline GroupPtr share(Group g) {
    return std::make_shared<Group const>(std::move(g));
  }

  [[nodiscard]] inline bool same_group(GroupPtr const& a, GroupPtr const& b) {
    return a == b || (a && b && *a == *b);
  }

  //! Parses cycle notation such as "(1 2)(3 4 5)" or "()" over 1..degree into
  //! a 0-based image table.
  [[nodiscard]] inline Group::Permutation parse_cycles(std::string_view text,
                                                       size_t           degree) {
    Group::Permutation p(degree);
    for (size_t i = 0; i < degree; ++i) {
      p[i] = static_cast<uint32_t>(i);
    }
    std::vector<bool> used(degree, false);
    size_t            i    = 0;
    auto              fail = [&](std::string const& what) {
      throw parse_error(what + " in cycle notation \"" + std::string(text)
                        + "\"");
    };
    auto skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    skip();
    if (i == text.size()) {
      fail("empty permutation");
    }
    while (i < text.size()) {
      if (text[i] != '(') {
        fail("expected '('");
      }
      ++i;
      std::vector<uint32_t> cycle;
      while (true) {
        skip();
        if (i == text.size()) {
          fail("missing ')'");
        }
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
          fail("expected a point");
        }
        size_t point = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          point = point * 10 + static_cast<size_t>(text[i] - '0');
          if (point > degree) {
            fail("point out of range");
          }
          ++i;
        }
        if (point == 0) {
          fail("point out of range");
        }
        if (used[point - 1]) {
          fail("repeated point");
        }
        used[point - 1] = true;
        cycle.push_back(static_cast<uint32_t>(point - 1));
      }
      for (size_t k = 0; k < cycle.size(); ++k) {
        p[cycle[k]] = cycle[(k + 1) % cycle.size()];
      }
      skip();
    }
    return p;
  }

}  // namespace fimon

#endif  // FIMON_GROUPS_HPP_
