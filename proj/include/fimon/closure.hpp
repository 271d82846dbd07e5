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

// G-invariant finitary closure operators on subgraphs of Γ_X, and the
// round-by-round fixpoint engine that approximates them.

#ifndef FIMON_CLOSURE_HPP_
#define FIMON_CLOSURE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "groups.hpp"
#include "subgraph.hpp"
#include "words.hpp"

namespace fimon {

  //! E-unitary: labels are words and graphs are connected.  F-inverse:
  //! labels are terms and graphs are arbitrary.
  enum class Mode : uint8_t { e_unitary, f_inverse };

  [[nodiscard]] inline char const* to_string(Mode m) noexcept {
    return m == Mode::e_unitary ? "e-unitary" : "f-inverse";
  }

  //! A finite symmetric relation R on labels whose related labels are equal
  //! in G.
  class RelationSystem {
   public:
    RelationSystem(GroupPtr group, Mode mode)
        : _group(std::move(group)), _mode(mode) {
      if (!_group) {
        throw error("relation system needs a group");
      }
    }

    //! Adds (u, v) and (v, u).  Throws if u_G ≠ v_G, or if a label carries
    //! m-markers in E-unitary mode.
    RelationSystem& add(FTerm const& u, FTerm const& v) {
      if (_mode == Mode::e_unitary && (!u.is_word() || !v.is_word())) {
        throw error("terms with m-markers in an E-unitary relation system");
      }
      if (_group->eval(u) != _group->eval(v)) {
        auto const& a = _group->alphabet();
        throw error("related labels \"" + to_string(u, a) + "\" and \""
                    + to_string(v, a) + "\" differ in the group");
      }
      insert(u, v);
      insert(v, u);
      return *this;
    }

    [[nodiscard]] Mode mode() const noexcept {
      return _mode;
    }
    [[nodiscard]] GroupPtr const& group_ptr() const noexcept {
      return _group;
    }
    //! Every ordered pair, both orientations included.
    [[nodiscard]] std::vector<std::pair<FTerm, FTerm>> const&
    pairs() const noexcept {
      return _pairs;
    }
    [[nodiscard]] bool empty() const noexcept {
      return _pairs.empty();
    }

   private:
    void insert(FTerm const& u, FTerm const& v) {
      for (auto const& p : _pairs) {
        if (p.first == u && p.second == v) {
          return;
        }
      }
      _pairs.emplace_back(u, v);
    }

    GroupPtr                             _group;
    Mode                                 _mode;
    std::vector<std::pair<FTerm, FTerm>> _pairs;
  };

  //! All (g, h) such that the label reads a journey (or path) in Δ from g
  //! to h, in vertex order.
  [[nodiscard]] inline std::vector<std::pair<GroupElem, GroupElem>>
  occurrences(Subgraph const& graph, FTerm const& label) {
    std::vector<std::pair<GroupElem, GroupElem>> out;
    for (auto const& g : graph.vertices()) {
      if (auto h = trace_journey(graph, g, label)) {
        out.emplace_back(g, std::move(*h));
      }
    }
    return out;
  }

  namespace detail {
    inline void require_connected(Subgraph const& graph) {
      if (!is_connected(graph)) {
        throw error("E-unitary closures are defined on connected subgraphs only");
      }
    }

    // One simultaneous round: every occurrence is found in the frozen input
    // before anything is added.
    inline Subgraph p_expand(Subgraph const& graph, RelationSystem const& rel) {
      Subgraph out = graph;
      for (auto const& [u, v] : rel.pairs()) {
        for (auto const& occ : occurrences(graph, u)) {
          detail::add_journey(out, occ.first, v);
        }
      }
      return out;
    }
  }  // namespace detail

  //! Δ together with the span of v from g for every (u, v) ∈ R and every
  //! occurrence of u from g in Δ.
  [[nodiscard]] inline Subgraph full_p_expansion(Subgraph const&       graph,
                                                 RelationSystem const& rel) {
    graph.check_same_group(Subgraph(rel.group_ptr()));
    if (rel.mode() == Mode::e_unitary) {
      detail::require_connected(graph);
    }
    return detail::p_expand(graph, rel);
  }

  //! True iff for every (u, v) ∈ R, u and v occur between the same pairs of
  //! vertices of Δ.
  [[nodiscard]] inline bool is_closed(Subgraph const&       graph,
                                      RelationSystem const& rel) {
    graph.check_same_group(Subgraph(rel.group_ptr()));
    for (auto const& [u, v] : rel.pairs()) {
      if (occurrences(graph, u) != occurrences(graph, v)) {
        return false;
      }
    }
    return true;
  }

  //! The smallest subtree of the Cayley tree of a free group containing Δ:
  //! the union of Δ with the geodesics from its least vertex to every other
  //! vertex.
  [[nodiscard]] inline Subgraph tree_hull(Subgraph const& graph) {
    auto const& G = graph.group();
    if (G.kind() != GroupKind::free) {
      throw error("the tree-connect closure needs a free group");
    }
    Subgraph out = graph;
    if (graph.empty()) {
      return out;
    }
    auto const& root     = *graph.vertices().begin();
    auto const  root_inv = G.inverse(root);
    for (auto const& v : graph.vertices()) {
      auto g = root;
      for (auto l : G.geodesic(G.multiply(root_inv, v))) {
        g = out.add_edge(g, l);
      }
    }
    return out;
  }

  struct ClosureBudget {
    size_t max_rounds   = 64;
    size_t max_vertices = 10000;

    void validate() const {
      if (max_rounds == 0 || max_vertices == 0) {
        throw error("closure budget limits must be positive");
      }
    }
  };

  class ClosureOperator {
   public:
    enum class Kind : uint8_t {
      identity_connected,
      identity_all,
      relation,
      tree_connect
    };

    [[nodiscard]] static ClosureOperator identity_connected() {
      return ClosureOperator(Kind::identity_connected);
    }
    [[nodiscard]] static ClosureOperator identity_all() {
      return ClosureOperator(Kind::identity_all);
    }
    //! The closure on Sub Γ_X whose closed graphs are the connected ones;
    //! free groups only.
    [[nodiscard]] static ClosureOperator tree_connect() {
      return ClosureOperator(Kind::tree_connect);
    }
    [[nodiscard]] static ClosureOperator relation(RelationSystem rel) {
      ClosureOperator c(Kind::relation);
      c._relations = std::make_shared<RelationSystem const>(std::move(rel));
      return c;
    }

    [[nodiscard]] Kind kind() const noexcept {
      return _kind;
    }

    [[nodiscard]] Mode mode() const noexcept {
      switch (_kind) {
        case Kind::identity_connected:
          return Mode::e_unitary;
        case Kind::relation:
          return _relations->mode();
        default:
          return Mode::f_inverse;
      }
    }

    [[nodiscard]] bool requires_connected() const noexcept {
      return mode() == Mode::e_unitary;
    }

    [[nodiscard]] RelationSystem const* relations() const noexcept {
      return _relations.get();
    }

    [[nodiscard]] std::string name() const {
      switch (_kind) {
        case Kind::identity_connected:
          return "identity_connected";
        case Kind::identity_all:
          return "identity_all";
        case Kind::relation:
          return "relation";
        case Kind::tree_connect:
          return "tree_connect";
      }
      return {};
    }

    //! Throws if Δ is outside the operator's domain.
    void check_domain(Subgraph const& graph) const {
      if (requires_connected()) {
        detail::require_connected(graph);
      }
      if (_kind == Kind::tree_connect
          && graph.group().kind() != GroupKind::free) {
        throw error("the tree-connect closure needs a free group");
      }
      if (_relations) {
        graph.check_same_group(Subgraph(_relations->group_ptr()));
      }
    }

    //! One round of the fixpoint iteration: Δ itself for the identities,
    //! the geodesic hull for tree_connect, and the full P-expansion for a
    //! relation.
    [[nodiscard]] Subgraph expand(Subgraph const& graph) const {
      switch (_kind) {
        case Kind::identity_connected:
        case Kind::identity_all:
          return graph;
        case Kind::tree_connect:
          return tree_hull(graph);
        case Kind::relation:
          return detail::p_expand(graph, *_relations);
      }
      return graph;
    }

    [[nodiscard]] bool is_closed(Subgraph const& graph) const {
      switch (_kind) {
        case Kind::identity_connected:
        case Kind::identity_all:
          return true;
        case Kind::tree_connect:
          return tree_hull(graph) == graph;
        case Kind::relation:
          return fimon::is_closed(graph, *_relations);
      }
      return false;
    }

   private:
    explicit ClosureOperator(Kind kind) : _kind(kind) {}

    Kind                          _kind;
    std::shared_ptr<RelationSystem const> _relations;
  };

  enum class ClosureStatus : uint8_t { stabilized, budget_exhausted };

  struct ClosureResult {
    Subgraph      graph;
    ClosureStatus status      = ClosureStatus::stabilized;
    size_t        rounds_used = 0;

    [[nodiscard]] bool stabilized() const noexcept {
      return status == ClosureStatus::stabilized;
    }
  };

  //! The sequence Δ₀ ⊆ Δ₁ ⊆ ⋯ of a closure computation, advanced one round
  //! at a time.
  //!
  //! rounds() counts the rounds that changed the graph.  A round that
  //! changes nothing marks the sequence stabilized.  Once rounds() reaches
  //! max_rounds, or the graph has more than max_vertices vertices, the next
  //! step only probes: it reports stabilized if the graph is already closed
  //! and budget_exhausted otherwise.
  class Expansion {
   public:
    Expansion(Subgraph start, ClosureOperator op, ClosureBudget budget)
        : _op(std::move(op)), _budget(budget), _graph(std::move(start)) {
      _budget.validate();
      _op.check_domain(_graph);
    }

    [[nodiscard]] Subgraph const& graph() const noexcept {
      return _graph;
    }
    [[nodiscard]] size_t rounds() const noexcept {
      return _rounds;
    }
    [[nodiscard]] bool finished() const noexcept {
      return _status.has_value();
    }
    [[nodiscard]] bool stabilized() const noexcept {
      return _status == ClosureStatus::stabilized;
    }
    [[nodiscard]] bool exhausted() const noexcept {
      return _status == ClosureStatus::budget_exhausted;
    }
    [[nodiscard]] ClosureOperator const& op() const noexcept {
      return _op;
    }

    //! Returns true if the graph grew.
    bool step() {
      if (finished()) {
        return false;
      }
      auto next = _op.expand(_graph);
      if (next == _graph) {
        _status = ClosureStatus::stabilized;
        return false;
      }
      if (_rounds >= _budget.max_rounds
          || _graph.number_of_vertices() > _budget.max_vertices) {
        _status = ClosureStatus::budget_exhausted;
        return false;
      }
      _graph = std::move(next);
      ++_rounds;
#ifndef NDEBUG
      if (_op.requires_connected()) {
        detail::require_connected(_graph);
      }
#endif
      return true;
    }

    //! Steps until stabilized or out of budget.
    ClosureResult run() {
      while (!finished()) {
        step();
      }
      return result();
    }

    [[nodiscard]] ClosureResult result() const {
      return ClosureResult{_graph,
                           _status.value_or(ClosureStatus::budget_exhausted),
                           _rounds};
    }

   private:
    ClosureOperator              _op;
    ClosureBudget                _budget;
    Subgraph                     _graph;
    size_t                       _rounds = 0;
    std::optional<ClosureStatus> _status;
  };

  [[nodiscard]] inline ClosureResult close(Subgraph const&        graph,
                                           ClosureOperator const& op,
                                           ClosureBudget          budget = {}) {
    return Expansion(graph, op, budget).run();
  }

}  // namespace fimon

#endif  // FIMON_CLOSURE_HPP_
