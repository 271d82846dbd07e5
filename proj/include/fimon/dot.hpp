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

#ifndef FIMON_DOT_HPP_
#define FIMON_DOT_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <string>

#include "groups.hpp"
#include "subgraph.hpp"

namespace fimon {

  namespace detail {
    inline std::string dot_escape(std::string const& s) {
      std::string out;
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out;
    }
  }  // namespace detail

  //! Graphviz text for Δ.  Nodes are numbered in the order of their
  //! canonical forms and edges are emitted in sorted order, so equal graphs
  //! give byte-identical output.  Highlighted vertices are double circles.
  [[nodiscard]] inline std::string to_dot(Subgraph const&            graph,
                                          std::set<GroupElem> const& highlights
                                          = {},
                                          std::string const& name = "subgraph") {
    auto const&                 G = graph.group();
    std::map<GroupElem, size_t> id;
    std::string                 out = "digraph \"" + detail::dot_escape(name)
                      + "\" {\n  node [shape=circle];\n";
    for (auto const& v : graph.vertices()) {
      auto n = id.size();
      id.emplace(v, n);
      out += "  n" + std::to_string(n) + " [label=\""
             + detail::dot_escape(G.to_string(v)) + "\"";
      if (highlights.contains(v)) {
        out += ", shape=doublecircle";
      }
      out += "];\n";
    }
    for (auto const& e : graph.edges()) {
      out += "  n" + std::to_string(id.at(e.source)) + " -> n"
             + std::to_string(id.at(graph.target(e))) + " [label=\""
             + detail::dot_escape(G.alphabet().name(e.generator)) + "\"];\n";
    }
    out += "}\n";
    return out;
  }

}  // namespace fimon

#endif  // FIMON_DOT_HPP_
