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

// Semi-decision procedures for the word problem of a monoid S_c given by a
// closure, usually the closure c_R of a presentation: equality is confirmed
// as soon as each side's span lies in the other side's expansion, and is
// refuted only when both expansions stabilize.

#ifndef FIMON_WORD_PROBLEM_HPP_
#define FIMON_WORD_PROBLEM_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "closure.hpp"
#include "dot.hpp"
#include "error.hpp"
#include "monoid.hpp"
#include "subgraph.hpp"
#include "words.hpp"

namespace fimon {

  struct Verdict {
    enum class Kind : uint8_t {
      equal,
      not_equal,
      greater_eq,
      not_greater_eq,
      unknown
    };
    enum class Reason : uint8_t {
      none,
      group_image,
      stabilized_distinct,
      stabilized
    };

    Kind   kind     = Kind::unknown;
    Reason reason   = Reason::none;
    size_t rounds   = 0;
    size_t vertices = 0;

    //! Equal/NotEqual and GreaterEq/NotGreaterEq are final answers.
    [[nodiscard]] bool is_final() const noexcept {
      return kind != Kind::unknown;
    }

    //! 0 for Equal/GreaterEq, 1 for NotEqual/NotGreaterEq, 2 for Unknown.
    [[nodiscard]] int exit_code() const noexcept {
      switch (kind) {
        case Kind::equal:
        case Kind::greater_eq:
          return 0;
        case Kind::not_equal:
        case Kind::not_greater_eq:
          return 1;
        case Kind::unknown:
          return 2;
      }
      return 2;
    }

    [[nodiscard]] std::string name() const {
      std::string out;
      switch (kind) {
        case Kind::equal:
          return "Equal";
        case Kind::greater_eq:
          return "GreaterEq";
        case Kind::unknown:
          return "Unknown";
        case Kind::not_equal:
          out = "NotEqual";
          break;
        case Kind::not_greater_eq:
          out = "NotGreaterEq";
          break;
      }
      switch (reason) {
        case Reason::group_image:
          return out + "(group-image)";
        case Reason::stabilized_distinct:
          return out + "(stabilized-distinct)";
        case Reason::stabilized:
          return out + "(stabilized)";
        case Reason::none:
          break;
      }
      return out;
    }

    //! VERDICT=<name> ROUNDS=<n> VERTICES=<n>
    [[nodiscard]] std::string to_string() const {
      return "VERDICT=" + name() + " ROUNDS=" + std::to_string(rounds)
             + " VERTICES=" + std::to_string(vertices);
    }
  };

  namespace detail {
    inline void check_label_mode(Monoid const& S, FTerm const& t) {
      if (!t.is_word() && S.mode() != Mode::f_inverse) {
        throw error("m-markers are only available in F-inverse mode");
      }
    }
  }  // namespace detail

  //! Decides u_S = v_S when true, by growing both expansion sequences in
  //! lockstep until ⟨v̄⟩ ⊆ Δᵢᵘ and ⟨ū⟩ ⊆ Δᵢᵛ.  NotEqual is reported only
  //! for distinct group images or when both sequences stabilize.
  [[nodiscard]] inline Verdict check_equal(Monoid const& S,
                                           FTerm const&  u,
                                           FTerm const&  v,
                                           ClosureBudget budget) {
    detail::check_label_mode(S, u);
    detail::check_label_mode(S, v);
    auto const& G   = S.group();
    auto const  one = G.identity();
    Verdict     out;
    if (G.eval(u) != G.eval(v)) {
      out.kind   = Verdict::Kind::not_equal;
      out.reason = Verdict::Reason::group_image;
      return out;
    }
    auto const span_u = span_journey(S.group_ptr(), one, u);
    auto const span_v = span_journey(S.group_ptr(), one, v);
    Expansion  eu(span_u, S.closure(), budget);
    Expansion  ev(span_v, S.closure(), budget);
    while (true) {
      out.rounds   = std::max(eu.rounds(), ev.rounds());
      out.vertices = std::max(eu.graph().number_of_vertices(),
                              ev.graph().number_of_vertices());
      if (eu.graph().contains(span_v) && ev.graph().contains(span_u)) {
        out.kind = Verdict::Kind::equal;
        return out;
      }
      if (eu.stabilized() && ev.stabilized()) {
        out.kind   = Verdict::Kind::not_equal;
        out.reason = Verdict::Reason::stabilized_distinct;
        return out;
      }
      if (eu.finished() && ev.finished()) {
        out.kind = Verdict::Kind::unknown;
        return out;
      }
      eu.step();
      ev.step();
    }
  }

  [[nodiscard]] inline Verdict check_equal(Monoid const& S,
                                           FTerm const&  u,
                                           FTerm const&  v) {
    return check_equal(S, u, v, S.budget());
  }

  //! Decides u_S ≥ w_S when true: u must label a journey from 1 to w_G in
  //! some Δᵢʷ.  NotGreaterEq needs distinct group images or a stabilized
  //! expansion without such a journey.
  [[nodiscard]] inline Verdict check_geq(Monoid const& S,
                                         FTerm const&  u,
                                         FTerm const&  w,
                                         ClosureBudget budget) {
    detail::check_label_mode(S, u);
    detail::check_label_mode(S, w);
    auto const& G   = S.group();
    auto const  one = G.identity();
    auto const  w_G = G.eval(w);
    Verdict     out;
    if (G.eval(u) != w_G) {
      out.kind   = Verdict::Kind::not_greater_eq;
      out.reason = Verdict::Reason::group_image;
      return out;
    }
    Expansion ew(span_journey(S.group_ptr(), one, w), S.closure(), budget);
    while (true) {
      out.rounds   = ew.rounds();
      out.vertices = ew.graph().number_of_vertices();
      if (trace_journey(ew.graph(), one, u) == w_G) {
        out.kind = Verdict::Kind::greater_eq;
        return out;
      }
      if (ew.stabilized()) {
        out.kind   = Verdict::Kind::not_greater_eq;
        out.reason = Verdict::Reason::stabilized;
        return out;
      }
      if (ew.finished()) {
        out.kind = Verdict::Kind::unknown;
        return out;
      }
      ew.step();
    }
  }

  [[nodiscard]] inline Verdict check_geq(Monoid const& S,
                                         FTerm const&  u,
                                         FTerm const&  w) {
    return check_geq(S, u, w, S.budget());
  }

  //! The expansion graphs Δ₀ ⊆ Δ₁ ⊆ ⋯ of ⟨w̄⟩ up to stabilization or budget;
  //! the last one is the (possibly truncated) Schützenberger graph.
  [[nodiscard]] inline std::vector<Subgraph>
  expansion_rounds(Monoid const& S, FTerm const& w, ClosureBudget budget) {
    detail::check_label_mode(S, w);
    Expansion e(span_journey(S.group_ptr(), S.group().identity(), w),
                S.closure(),
                budget);
    std::vector<Subgraph> out{e.graph()};
    while (e.step()) {
      out.push_back(e.graph());
    }
    return out;
  }

  //! DOT text of ⟨w̄⟩^c with 1 and w_G highlighted; with all_rounds, one DOT
  //! per expansion round instead of just the last.
  [[nodiscard]] inline std::vector<std::string> graph_export(Monoid const& S,
                                                             FTerm const&  w,
                                                             ClosureBudget budget,
                                                             bool all_rounds
                                                             = false) {
    auto const                rounds = expansion_rounds(S, w, budget);
    std::set<GroupElem> const marks{S.group().identity(), S.group().eval(w)};
    std::vector<std::string>  out;
    for (size_t i = all_rounds ? 0 : rounds.size() - 1; i < rounds.size(); ++i) {
      out.push_back(to_dot(rounds[i], marks, "round" + std::to_string(i)));
    }
    return out;
  }

}  // namespace fimon

#endif  // FIMON_WORD_PROBLEM_HPP_
