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

// Finite subgraphs of the Cayley graph of an X-generated group, embedded in
// the Cayley graph: vertices are group elements, edges are determined by a
// source vertex and a letter.

#ifndef FIMON_SUBGRAPH_HPP_
#define FIMON_SUBGRAPH_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "groups.hpp"
#include "words.hpp"

namespace fimon {

  //! An undirected Cayley-graph edge in positive normal form: the x-edge from
  //! source to source · x together with its inverse x⁻¹-edge.
  struct Edge {
    GroupElem source;
    uint32_t  generator = 0;

    bool operator==(Edge const&) const = default;
    auto operator<=>(Edge const&) const = default;
  };

  //! A finite subgraph of Γ_X closed under α, ω and edge inversion.
  //!
  //! Each inverse pair of edges is stored once, as the edge carrying a
  //! positive letter; queries with x⁻¹ at g are answered through the stored
  //! edge (g · x⁻¹, x).  Isolated vertices are allowed.
  class Subgraph {
   public:
    explicit Subgraph(GroupPtr group) : _group(std::move(group)) {
      if (!_group) {
        throw error("subgraph needs a group");
      }
    }

    [[nodiscard]] GroupPtr const& group_ptr() const noexcept {
      return _group;
    }
    [[nodiscard]] Group const& group() const noexcept {
      return *_group;
    }

    [[nodiscard]] std::set<GroupElem> const& vertices() const noexcept {
      return _vertices;
    }
    [[nodiscard]] std::set<Edge> const& edges() const noexcept {
      return _edges;
    }
    [[nodiscard]] size_t number_of_vertices() const noexcept {
      return _vertices.size();
    }
    [[nodiscard]] size_t number_of_edges() const noexcept {
      return _edges.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _vertices.empty();
    }

    [[nodiscard]] Edge normalize(GroupElem const& from, Letter l) const {
      if (!l.inverse) {
        return Edge{from, l.base};
      }
      return Edge{_group->act(from, l), l.base};
    }

    [[nodiscard]] GroupElem target(Edge const& e) const {
      return _group->act(e.source, pos(e.generator));
    }

    bool add_vertex(GroupElem g) {
      _group->validate(g);
      return _vertices.insert(std::move(g)).second;
    }

    //! Adds the l-edge at g, its inverse, and both endpoints.  Returns the
    //! target g · l.
    GroupElem add_edge(GroupElem const& from, Letter l) {
      auto to = _group->act(from, l);
      auto e  = normalize(from, l);
      if (_edges.insert(std::move(e)).second) {
        _vertices.insert(from);
        _vertices.insert(to);
      }
      return to;
    }

    [[nodiscard]] bool has_vertex(GroupElem const& g) const {
      return _vertices.contains(g);
    }

    [[nodiscard]] bool has_edge(GroupElem const& from, Letter l) const {
      return _edges.contains(normalize(from, l));
    }

    //! The target of the l-edge at g, if the edge is present.
    [[nodiscard]] std::optional<GroupElem> follow(GroupElem const& from,
                                                  Letter           l) const {
      auto to = _group->act(from, l);
      Edge e  = l.inverse ? Edge{to, l.base} : Edge{from, l.base};
      if (!_edges.contains(e)) {
        return std::nullopt;
      }
      return to;
    }

    [[nodiscard]] bool contains(Subgraph const& that) const {
      check_same_group(that);
      return std::includes(_vertices.begin(),
                           _vertices.end(),
                           that._vertices.begin(),
                           that._vertices.end())
             && std::includes(
                 _edges.begin(), _edges.end(), that._edges.begin(), that._edges.end());
    }

    Subgraph& merge(Subgraph const& that) {
      check_same_group(that);
      _vertices.insert(that._vertices.begin(), that._vertices.end());
      _edges.insert(that._edges.begin(), that._edges.end());
      return *this;
    }

    bool operator==(Subgraph const& that) const {
      return same_group(_group, that._group) && _vertices == that._vertices
             && _edges == that._edges;
    }

    void check_same_group(Subgraph const& that) const {
      if (!same_group(_group, that._group)) {
        throw mismatch_error("subgraphs of Cayley graphs of different groups");
      }
    }

   private:
    GroupPtr            _group;
    std::set<GroupElem> _vertices;
    std::set<Edge>      _edges;
  };

  //! ⟨g w̄⟩, the vertices and edges traversed by the path from g labelled w.
  [[nodiscard]] inline Subgraph span_path(GroupPtr const&  group,
                                          GroupElem const& from,
                                          Word const&      w) {
    Subgraph out(group);
    out.add_vertex(from);
    auto g = from;
    for (auto l : w) {
      g = out.add_edge(g, l);
    }
    return out;
  }

  namespace detail {
    inline GroupElem add_journey(Subgraph&        out,
                                 GroupElem const& from,
                                 FTerm const&     t) {
      auto const& G = out.group();
      auto        g = from;
      out.add_vertex(g);
      for (size_t i = 0; i <= t.jump_count(); ++i) {
        if (i > 0) {
          g = G.act(g, t.jump_word(i - 1));
          out.add_vertex(g);
        }
        for (auto l : t.segment(i)) {
          g = out.add_edge(g, l);
        }
      }
      return g;
    }
  }  // namespace detail

  //! The union of the spans of the paths making up the journey labelled t
  //! from g.  Every path contributes its endpoints, so jumps add vertices
  //! but no edges.
  [[nodiscard]] inline Subgraph span_journey(GroupPtr const&  group,
                                             GroupElem const& from,
                                             FTerm const&     t) {
    Subgraph out(group);
    detail::add_journey(out, from, t);
    return out;
  }

  //! g · w_G when the path from g labelled w lies in Δ.
  [[nodiscard]] inline std::optional<GroupElem>
  trace_path(Subgraph const& graph, GroupElem const& from, Word const& w) {
    if (!graph.has_vertex(from)) {
      return std::nullopt;
    }
    auto g = from;
    for (auto l : w) {
      auto next = graph.follow(g, l);
      if (!next) {
        return std::nullopt;
      }
      g = std::move(*next);
    }
    return g;
  }

  //! The endpoint of the journey labelled t from g, when it lies in Δ.
  //! Jumps need both of their endpoints to be vertices of Δ.
  [[nodiscard]] inline std::optional<GroupElem>
  trace_journey(Subgraph const& graph, GroupElem const& from, FTerm const& t) {
    auto g = trace_path(graph, from, t.segment(0));
    for (size_t i = 0; g && i < t.jump_count(); ++i) {
      auto h = graph.group().act(*g, t.jump_word(i));
      g      = trace_path(graph, h, t.segment(i + 1));
    }
    return g;
  }

  //! The left translate gΔ.
  [[nodiscard]] inline Subgraph translate(GroupElem const& g,
                                          Subgraph const&  graph) {
    auto const& G = graph.group();
    Subgraph    out(graph.group_ptr());
    for (auto const& v : graph.vertices()) {
      out.add_vertex(G.multiply(g, v));
    }
    for (auto const& e : graph.edges()) {
      out.add_edge(G.multiply(g, e.source), pos(e.generator));
    }
    return out;
  }

  [[nodiscard]] inline Subgraph graph_union(Subgraph lhs, Subgraph const& rhs) {
    lhs.merge(rhs);
    return lhs;
  }

  [[nodiscard]] inline bool contains(Subgraph const& big, Subgraph const& small) {
    return big.contains(small);
  }

  //! Maximal connected subgraphs, ordered by their least vertex.
  [[nodiscard]] inline std::vector<Subgraph> components(Subgraph const& graph) {
    std::map<GroupElem, std::vector<GroupElem>> adjacent;
    for (auto const& e : graph.edges()) {
      auto to = graph.target(e);
      adjacent[e.source].push_back(to);
      adjacent[to].push_back(e.source);
    }
    std::set<GroupElem>   seen;
    std::vector<Subgraph> out;
    for (auto const& root : graph.vertices()) {
      if (seen.contains(root)) {
        continue;
      }
      std::set<GroupElem>    part{root};
      std::vector<GroupElem> stack{root};
      seen.insert(root);
      while (!stack.empty()) {
        auto v = std::move(stack.back());
        stack.pop_back();
        for (auto const& w : adjacent[v]) {
          if (seen.insert(w).second) {
            part.insert(w);
            stack.push_back(w);
          }
        }
      }
      Subgraph component(graph.group_ptr());
      for (auto const& v : part) {
        component.add_vertex(v);
      }
      for (auto const& e : graph.edges()) {
        if (part.contains(e.source)) {
          component.add_edge(e.source, pos(e.generator));
        }
      }
      out.push_back(std::move(component));
    }
    return out;
  }

  //! True for a nonempty graph with a single component.
  [[nodiscard]] inline bool is_connected(Subgraph const& graph) {
    return !graph.empty() && components(graph).size() == 1;
  }

}  // namespace fimon

#endif  // FIMON_SUBGRAPH_HPP_
