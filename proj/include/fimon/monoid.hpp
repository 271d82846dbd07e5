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

// The inverse monoid S_c of pairs (Δ, g) attached to a closure operator c:
// Δ a compact subgraph containing 1 and g, with
//
//   (Δ, g)(Ξ, h) = ((Δ ∪ gΞ)^c, gh),   (Δ, g)⁻¹ = (g⁻¹Δ, g⁻¹),
//   (Δ, g)^m     = ({1, g}^c, g)       (F-inverse mode only).
//
// Elements remember the finite seed whose closure is Δ, so arithmetic stays
// exact even when a closure does not stabilize within budget; only
// comparisons need stabilized closures.

#ifndef FIMON_MONOID_HPP_
#define FIMON_MONOID_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "closure.hpp"
#include "error.hpp"
#include "groups.hpp"
#include "subgraph.hpp"
#include "words.hpp"

namespace fimon {

  struct MonoidContext {
    GroupPtr        group;
    ClosureOperator closure;
    Mode            mode;
    ClosureBudget   budget;
  };

  class Monoid;

  class Element {
   public:
    [[nodiscard]] Subgraph const& seed() const noexcept {
      return _seed;
    }
    [[nodiscard]] GroupElem const& anchor() const noexcept {
      return _anchor;
    }
    [[nodiscard]] ClosureResult const& closed() const noexcept {
      return _closed;
    }
    //! Δ, or the budget-truncated approximation of it.
    [[nodiscard]] Subgraph const& graph() const noexcept {
      return _closed.graph;
    }
    [[nodiscard]] bool stabilized() const noexcept {
      return _closed.stabilized();
    }

    //! Equality of (Δ, g); empty when either closure is unstabilized.
    [[nodiscard]] std::optional<bool> try_equal(Element const& that) const {
      if (!stabilized() || !that.stabilized()) {
        return std::nullopt;
      }
      return _anchor == that._anchor && graph() == that.graph();
    }

    //! Throws unless both closures stabilized.
    bool operator==(Element const& that) const {
      auto eq = try_equal(that);
      if (!eq) {
        throw error("element equality needs stabilized closures");
      }
      return *eq;
    }

   private:
    friend class Monoid;

    Element(std::shared_ptr<MonoidContext const> ctx,
            Subgraph                             seed,
            GroupElem                            anchor,
            ClosureResult                        closed)
        : _ctx(std::move(ctx)),
          _seed(std::move(seed)),
          _anchor(std::move(anchor)),
          _closed(std::move(closed)) {}

    std::shared_ptr<MonoidContext const> _ctx;
    Subgraph                             _seed;
    GroupElem                            _anchor;
    ClosureResult                        _closed;
  };

  //! Strict weak order on stabilized elements by (Δ, g), for use in sets.
  struct ElementLess {
    bool operator()(Element const& a, Element const& b) const {
      auto const& x = a.graph();
      auto const& y = b.graph();
      if (auto c = x.vertices() <=> y.vertices(); c != 0) {
        return c < 0;
      }
      if (auto c = x.edges() <=> y.edges(); c != 0) {
        return c < 0;
      }
      return a.anchor() < b.anchor();
    }
  };

  class Monoid {
   public:
    Monoid(GroupPtr group, ClosureOperator closure, ClosureBudget budget = {}) {
      if (!group) {
        throw error("monoid needs a group");
      }
      budget.validate();
      if (closure.kind() == ClosureOperator::Kind::tree_connect
          && group->kind() != GroupKind::free) {
        throw error("the tree-connect closure needs a free group");
      }
      if (auto const* rel = closure.relations()) {
        if (!same_group(rel->group_ptr(), group)) {
          throw mismatch_error("relation system over a different group");
        }
      }
      auto mode = closure.mode();
      _ctx      = std::make_shared<MonoidContext const>(MonoidContext{
          std::move(group), std::move(closure), mode, budget});
    }

    //! FIM(X) as Munn trees: identical closure on connected subgraphs of the
    //! free group's Cayley tree.
    [[nodiscard]] static Monoid free_inverse(Alphabet a, ClosureBudget b = {}) {
      return Monoid(
          share(Group::free(std::move(a))), ClosureOperator::identity_connected(), b);
    }

    //! The free F-inverse monoid: identical closure on all subgraphs.
    [[nodiscard]] static Monoid free_f_inverse(Alphabet a, ClosureBudget b = {}) {
      return Monoid(
          share(Group::free(std::move(a))), ClosureOperator::identity_all(), b);
    }

    //! FIM(X) in the F-inverse signature, where w^m = red(w).
    [[nodiscard]] static Monoid free_inverse_as_f_inverse(Alphabet      a,
                                                          ClosureBudget b = {}) {
      return Monoid(
          share(Group::free(std::move(a))), ClosureOperator::tree_connect(), b);
    }

    //! The Margolis–Meakin expansion M(G, X).
    [[nodiscard]] static Monoid margolis_meakin(GroupPtr g, ClosureBudget b = {}) {
      return Monoid(std::move(g), ClosureOperator::identity_connected(), b);
    }

    //! The initial X-generated F-inverse monoid with greatest group image G.
    [[nodiscard]] static Monoid f_margolis_meakin(GroupPtr      g,
                                                  ClosureBudget b = {}) {
      return Monoid(std::move(g), ClosureOperator::identity_all(), b);
    }

    [[nodiscard]] MonoidContext const& context() const noexcept {
      return *_ctx;
    }
    [[nodiscard]] Group const& group() const noexcept {
      return *_ctx->group;
    }
    [[nodiscard]] GroupPtr const& group_ptr() const noexcept {
      return _ctx->group;
    }
    [[nodiscard]] ClosureOperator const& closure() const noexcept {
      return _ctx->closure;
    }
    [[nodiscard]] Mode mode() const noexcept {
      return _ctx->mode;
    }
    [[nodiscard]] ClosureBudget budget() const noexcept {
      return _ctx->budget;
    }

    //! The element (seed^c, anchor).
    [[nodiscard]] Element make(Subgraph seed, GroupElem anchor) const {
      seed.check_same_group(Subgraph(_ctx->group));
      auto const one = group().identity();
      if (!seed.has_vertex(one) || !seed.has_vertex(anchor)) {
        throw error("seed must contain the identity and the anchor");
      }
      auto closed = close(seed, _ctx->closure, _ctx->budget);
      return Element(_ctx, std::move(seed), std::move(anchor), std::move(closed));
    }

    [[nodiscard]] Element identity() const {
      Subgraph seed(_ctx->group);
      seed.add_vertex(group().identity());
      return make(std::move(seed), group().identity());
    }

    //! w_{S_c} = (⟨w̄⟩^c, w_G).
    [[nodiscard]] Element eval(Word const& w) const {
      auto const one = group().identity();
      return make(span_path(_ctx->group, one, w), group().eval(w));
    }

    [[nodiscard]] Element eval(FTerm const& t) const {
      if (!t.is_word() && mode() != Mode::f_inverse) {
        throw error("m-markers are only available in F-inverse mode");
      }
      auto const one = group().identity();
      return make(span_journey(_ctx->group, one, t), group().eval(t));
    }

    [[nodiscard]] Element generator(Letter l) const {
      return eval(Word{l});
    }

    [[nodiscard]] Element multiply(Element const& a, Element const& b) const {
      check(a);
      check(b);
      auto seed = a._seed;
      seed.merge(translate(a._anchor, b._seed));
      return make(std::move(seed), group().multiply(a._anchor, b._anchor));
    }

    [[nodiscard]] Element inverse(Element const& a) const {
      check(a);
      auto const g_inv = group().inverse(a._anchor);
      // Rounds of the expansion commute with translation, so the translated
      // closure is exact even when it is budget-truncated.
      ClosureResult closed{translate(g_inv, a._closed.graph),
                           a._closed.status,
                           a._closed.rounds_used};
      return Element(_ctx, translate(g_inv, a._seed), g_inv, std::move(closed));
    }

    //! ({1, g}^c, g); F-inverse mode only.
    [[nodiscard]] Element max_m(Element const& a) const {
      check(a);
      if (mode() != Mode::f_inverse) {
        throw error("^m is only available in F-inverse mode");
      }
      Subgraph seed(_ctx->group);
      seed.add_vertex(group().identity());
      seed.add_vertex(a._anchor);
      return make(std::move(seed), a._anchor);
    }

    //! The natural partial order: (Δ, g) ≤ (Ξ, h) iff g = h and Ξ ⊆ Δ.
    //! Throws unless both closures stabilized.
    [[nodiscard]] bool leq(Element const& a, Element const& b) const {
      check(a);
      check(b);
      if (!a.stabilized() || !b.stabilized()) {
        throw error("the natural order needs stabilized closures");
      }
      return a._anchor == b._anchor && a.graph().contains(b.graph());
    }

    //! The image of a in the greatest group image G.
    [[nodiscard]] GroupElem const& sigma(Element const& a) const {
      check(a);
      return a._anchor;
    }

    [[nodiscard]] bool is_idempotent(Element const& a) const {
      check(a);
      return a._anchor == group().identity();
    }

    //! e ∧ f = ((Δ ∪ Ξ)^c, 1) for idempotents e = (Δ, 1) and f = (Ξ, 1).
    [[nodiscard]] Element meet_idempotent(Element const& e,
                                          Element const& f) const {
      if (!is_idempotent(e) || !is_idempotent(f)) {
        throw error("meet of non-idempotent elements");
      }
      return multiply(e, f);
    }

    //! Every element of S_c, for a finite group.  Since Γ_X is finite every
    //! closed subgraph is compact, so the elements are the pairs (Δ, g) with
    //! Δ closed (and connected in E-unitary mode), 1 ∈ Δ and g ∈ Δ.
    [[nodiscard]] std::vector<Element> elements() const {
      auto const& G = group();
      if (!G.is_finite()) {
        throw error("cannot enumerate S_c over an infinite group");
      }
      auto const         vertices = G.elements();
      std::vector<Edge> all_edges;
      for (auto const& v : vertices) {
        for (uint32_t b = 0; b < G.rank(); ++b) {
          all_edges.push_back(Edge{v, b});
        }
      }
      // vertices[0] is the identity and is always present.
      size_t const free_vertices = vertices.size() - 1;
      if (free_vertices + all_edges.size() > 24) {
        throw error("Cayley graph too large to enumerate its subgraphs");
      }
      std::vector<Element> out;
      for (uint64_t vmask = 0; vmask < (uint64_t{1} << free_vertices); ++vmask) {
        Subgraph base(_ctx->group);
        base.add_vertex(vertices[0]);
        for (size_t i = 0; i < free_vertices; ++i) {
          if (vmask >> i & 1) {
            base.add_vertex(vertices[i + 1]);
          }
        }
        std::vector<Edge> induced;
        for (auto const& e : all_edges) {
          if (base.has_vertex(e.source) && base.has_vertex(base.target(e))) {
            induced.push_back(e);
          }
        }
        for (uint64_t emask = 0; emask < (uint64_t{1} << induced.size());
             ++emask) {
          Subgraph graph = base;
          for (size_t i = 0; i < induced.size(); ++i) {
            if (emask >> i & 1) {
              graph.add_edge(induced[i].source, pos(induced[i].generator));
            }
          }
          if (mode() == Mode::e_unitary && !is_connected(graph)) {
            continue;
          }
          if (!closure().is_closed(graph)) {
            continue;
          }
          for (auto const& g : graph.vertices()) {
            out.push_back(make(graph, g));
          }
        }
      }
      return out;
    }

    //! Throws mismatch_error if a was not produced by this monoid.
    void check(Element const& a) const {
      if (a._ctx != _ctx) {
        throw mismatch_error("element belongs to a different monoid");
      }
    }

    friend Element canonical_morphism(Monoid const&  from,
                                      Monoid const&  to,
                                      Element const& a);

   private:
    std::shared_ptr<MonoidContext const> _ctx;
  };

  //! (Δ, g) ↦ (Δ^{c'}, g) from S_c to S_{c'}, which is a morphism when every
  //! c'-closed graph is c-closed.  Throws if that is visibly violated on a,
  //! i.e. the c'-closure fails to contain the c-closure.
  [[nodiscard]] inline Element canonical_morphism(Monoid const&  from,
                                                  Monoid const&  to,
                                                  Element const& a) {
    from.check(a);
    if (!same_group(from.group_ptr(), to.group_ptr())) {
      throw mismatch_error("canonical morphism between different groups");
    }
    if (from.mode() != to.mode()) {
      throw mismatch_error("canonical morphism between different modes");
    }
    auto image = to.make(a.seed(), a.anchor());
    if (a.stabilized() && image.stabilized()
        && !image.graph().contains(a.graph())) {
      throw error("target closure is not coarser than the source closure");
    }
    return image;
  }

}  // namespace fimon

#endif  // FIMON_MONOID_HPP_
