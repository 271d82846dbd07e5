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

// Text presentations Inv⟨X | R⟩ and FInv⟨X | R⟩ over a chosen group G.
//
//   # comment
//   finv;
//   group perm 3 x=(1 2 3) y=();
//   gens x y;
//   rels (x)^m = x, y x = x y;
//   rels y^-1 = y;
//
// Statements end with ';'.  `group` is `free` (the default), `abelian`, or
// `perm <degree>` followed by one cycle-notation image per generator.  An
// empty side of a relator is the empty word.  `builtin fim | free_finv |
// margolis_meakin | fim_as_finv` selects a model closure instead of rels and
// implies the mode.

#ifndef FIMON_PRESENTATION_HPP_
#define FIMON_PRESENTATION_HPP_

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "closure.hpp"
#include "error.hpp"
#include "groups.hpp"
#include "monoid.hpp"
#include "words.hpp"

namespace fimon {

  enum class Builtin : uint8_t {
    fim,
    free_finv,
    margolis_meakin,
    fim_as_finv
  };

  struct Presentation {
    Mode                                 mode = Mode::e_unitary;
    GroupPtr                             group;
    std::optional<Builtin>               builtin;
    std::vector<std::pair<FTerm, FTerm>> relations;

    [[nodiscard]] Alphabet const& alphabet() const {
      return group->alphabet();
    }

    //! Parses a word in inv mode and a term in finv mode.
    [[nodiscard]] FTerm parse_label(std::string_view text) const {
      if (mode == Mode::e_unitary) {
        return FTerm(parse_word(text, alphabet()));
      }
      return parse_term(text, alphabet());
    }

    [[nodiscard]] ClosureOperator closure() const {
      if (!builtin) {
        RelationSystem rel(group, mode);
        for (auto const& [u, v] : relations) {
          rel.add(u, v);
        }
        return ClosureOperator::relation(std::move(rel));
      }
      switch (*builtin) {
        case Builtin::fim:
        case Builtin::margolis_meakin:
          return ClosureOperator::identity_connected();
        case Builtin::free_finv:
          return ClosureOperator::identity_all();
        case Builtin::fim_as_finv:
          return ClosureOperator::tree_connect();
      }
      return ClosureOperator::identity_all();
    }

    [[nodiscard]] Monoid monoid(ClosureBudget budget = {}) const {
      return Monoid(group, closure(), budget);
    }
  };

  namespace detail {

    inline std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    inline std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> out;
      size_t                        start = 0;
      for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
          out.push_back(s.substr(start, i - start));
          start = i + 1;
        }
      }
      return out;
    }

    inline std::vector<std::string_view> tokens(std::string_view s) {
      std::vector<std::string_view> out;
      size_t                        i = 0;
      while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
        size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
        if (i > start) {
          out.push_back(s.substr(start, i - start));
        }
      }
      return out;
    }

    // "x=(1 2) y=(1 2 3)(4 5) z=()" → {x: "(1 2)", y: "(1 2 3)(4 5)", ...}
    inline std::vector<std::pair<std::string, std::string>>
    perm_images(std::string_view s) {
      std::vector<std::pair<std::string, std::string>> out;
      size_t                                           i    = 0;
      auto                                             skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
      };
      while (true) {
        skip();
        if (i == s.size()) {
          return out;
        }
        size_t start = i;
        while (i < s.size() && s[i] != '=' && s[i] != '('
               && !std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
        std::string name(s.substr(start, i - start));
        skip();
        if (name.empty() || i == s.size() || s[i] != '=') {
          throw parse_error("expected <gen>=(cycles) in group perm declaration");
        }
        ++i;
        skip();
        size_t cycles_start = i;
        while (i < s.size() && s[i] == '(') {
          while (i < s.size() && s[i] != ')') {
            ++i;
          }
          if (i == s.size()) {
            throw parse_error("missing ')' in image of " + name);
          }
          ++i;
          size_t save = i;
          skip();
          if (i == s.size() || s[i] != '(') {
            i = save;
            break;
          }
        }
        if (i == cycles_start) {
          throw parse_error("missing image of " + name);
        }
        out.emplace_back(std::move(name),
                         std::string(s.substr(cycles_start, i - cycles_start)));
      }
    }

  }  // namespace detail

  //! Parses and validates a presentation.  Throws parse_error on malformed
  //! text and error on semantic problems, including a relator whose sides
  //! differ in G.
  [[nodiscard]] inline Presentation parse_presentation(std::string_view text) {
    std::string stripped;
    for (auto line : detail::split(text, '\n')) {
      stripped += line.substr(0, line.find('#'));
      stripped += '\n';
    }

    std::optional<Mode>                              mode;
    std::optional<std::string>                       group_kind;
    size_t                                           degree = 0;
    std::vector<std::pair<std::string, std::string>> images;
    std::optional<std::vector<std::string>>          gens;
    std::optional<Builtin>                           builtin;
    std::vector<std::string>                         rels;

    auto set_mode = [&mode](Mode m) {
      if (mode && *mode != m) {
        throw error("conflicting inv/finv declarations");
      }
      mode = m;
    };

    for (auto raw : detail::split(stripped, ';')) {
      auto stmt = detail::trim(raw);
      if (stmt.empty()) {
        continue;
      }
      auto toks    = detail::tokens(stmt);
      auto keyword = toks.front();
      auto rest    = detail::trim(stmt.substr(keyword.size()));
      if (keyword == "inv" || keyword == "finv") {
        if (toks.size() != 1) {
          throw parse_error("unexpected text after " + std::string(keyword));
        }
        set_mode(keyword == "inv" ? Mode::e_unitary : Mode::f_inverse);
      } else if (keyword == "group") {
        if (group_kind) {
          throw error("group declared twice");
        }
        if (toks.size() < 2) {
          throw parse_error("missing group kind");
        }
        group_kind = std::string(toks[1]);
        if (*group_kind == "free" || *group_kind == "abelian") {
          if (toks.size() != 2) {
            throw parse_error("unexpected text after group " + *group_kind);
          }
        } else if (*group_kind == "perm") {
          if (toks.size() < 3) {
            throw parse_error("group perm needs a degree");
          }
          try {
            size_t used = 0;
            degree      = std::stoul(std::string(toks[2]), &used);
            if (used != toks[2].size()) {
              throw std::invalid_argument("degree");
            }
          } catch (std::exception const&) {
            throw parse_error("invalid permutation degree \""
                              + std::string(toks[2]) + "\"");
          }
          auto after = rest.substr(rest.find(toks[2]) + toks[2].size());
          images     = detail::perm_images(after);
        } else {
          throw error("unknown group kind \"" + *group_kind + "\"");
        }
      } else if (keyword == "gens") {
        if (gens) {
          throw error("gens declared twice");
        }
        gens.emplace();
        for (size_t i = 1; i < toks.size(); ++i) {
          gens->emplace_back(toks[i]);
        }
      } else if (keyword == "rels") {
        for (auto rel : detail::split(rest, ',')) {
          rels.emplace_back(rel);
        }
      } else if (keyword == "builtin") {
        if (builtin) {
          throw error("builtin declared twice");
        }
        if (toks.size() != 2) {
          throw parse_error("builtin takes exactly one name");
        }
        static std::map<std::string_view, Builtin> const names{
            {"fim", Builtin::fim},
            {"free_finv", Builtin::free_finv},
            {"margolis_meakin", Builtin::margolis_meakin},
            {"fim_as_finv", Builtin::fim_as_finv}};
        auto it = names.find(toks[1]);
        if (it == names.end()) {
          throw error("unknown builtin \"" + std::string(toks[1]) + "\"");
        }
        builtin = it->second;
      } else {
        throw parse_error("unknown statement \"" + std::string(keyword) + "\"");
      }
    }

    if (!gens || gens->empty()) {
      throw error("presentation declares no generators");
    }
    Alphabet alphabet(*gens);

    if (builtin) {
      if (!rels.empty()) {
        throw error("a builtin presentation cannot have rels");
      }
      bool finv = *builtin == Builtin::free_finv || *builtin == Builtin::fim_as_finv;
      set_mode(finv ? Mode::f_inverse : Mode::e_unitary);
      if (*builtin != Builtin::margolis_meakin && group_kind
          && *group_kind != "free") {
        throw error("this builtin needs group free");
      }
    }
    if (!mode) {
      throw error("presentation must declare inv or finv");
    }

    Presentation p;
    p.mode    = *mode;
    p.builtin = builtin;
    if (!group_kind || *group_kind == "free") {
      p.group = share(Group::free(std::move(alphabet)));
    } else if (*group_kind == "abelian") {
      p.group = share(Group::free_abelian(std::move(alphabet)));
    } else {
      std::vector<Group::Permutation> table(alphabet.size());
      std::vector<bool>               given(alphabet.size(), false);
      for (auto const& [name, cycles] : images) {
        auto i = alphabet.find(name);
        if (!i) {
          throw error("image given for undeclared generator \"" + name + "\"");
        }
        if (given[*i]) {
          throw error("two images given for generator \"" + name + "\"");
        }
        table[*i] = parse_cycles(cycles, degree);
        given[*i] = true;
      }
      for (uint32_t i = 0; i < alphabet.size(); ++i) {
        if (!given[i]) {
          throw error("no image given for generator \"" + alphabet.name(i)
                      + "\"");
        }
      }
      p.group = share(
          Group::permutation(std::move(alphabet), degree, std::move(table)));
    }

    for (auto const& rel : rels) {
      auto sides = detail::split(rel, '=');
      if (sides.size() != 2) {
        throw parse_error("relator \"" + std::string(detail::trim(rel))
                          + "\" must have the form lhs = rhs");
      }
      auto lhs = p.parse_label(sides[0]);
      auto rhs = p.parse_label(sides[1]);
      if (p.group->eval(lhs) != p.group->eval(rhs)) {
        throw error("relator \"" + std::string(detail::trim(rel))
                    + "\" has sides that differ in the group");
      }
      p.relations.emplace_back(std::move(lhs), std::move(rhs));
    }
    return p;
  }

}  // namespace fimon

#endif  // FIMON_PRESENTATION_HPP_
