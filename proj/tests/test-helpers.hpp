// Seeded generators shared by the unit and acceptance tests.

#ifndef FIMON_TESTS_TEST_HELPERS_HPP_
#define FIMON_TESTS_TEST_HELPERS_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "fimon/fimon.hpp"

namespace fimon::test {

  using Rng = std::mt19937_64;

  inline Letter random_letter(Rng& rng, size_t rank) {
    std::uniform_int_distribution<uint32_t> base(0, static_cast<uint32_t>(rank - 1));
    std::bernoulli_distribution             inv(0.5);
    return Letter{base(rng), inv(rng)};
  }

  //! A word of length uniform in [0, max_len].
  inline Word random_word(Rng& rng, size_t rank, size_t max_len) {
    std::uniform_int_distribution<size_t> len(0, max_len);
    Word                                  w;
    for (size_t i = len(rng); i > 0; --i) {
      w.push_back(random_letter(rng, rank));
    }
    return w;
  }

  //! A term with up to max_jumps m-markers and total length at most about
  //! max_len.
  inline FTerm random_term(Rng& rng, size_t rank, size_t max_len, size_t max_jumps) {
    std::uniform_int_distribution<size_t> jumps(0, max_jumps);
    size_t const                          n     = jumps(rng);
    size_t const                          piece = max_len / (2 * n + 1) + 1;
    FTerm                                 t(random_word(rng, rank, piece));
    for (size_t i = 0; i < n; ++i) {
      t *= FTerm::jump(random_word(rng, rank, piece));
      t *= FTerm(random_word(rng, rank, piece));
    }
    return t;
  }

  inline GroupElem random_elem(Rng& rng, Group const& G, size_t max_len = 6) {
    return G.eval(random_word(rng, G.rank(), max_len));
  }

  //! Union of the journey spans of one to three random terms, each from a
  //! random vertex.  Connected when `connected`, in which case plain words
  //! are used and each starts at a vertex already present.
  inline Subgraph random_subgraph(Rng&            rng,
                                  GroupPtr const& G,
                                  size_t          max_len,
                                  bool            connected) {
    std::uniform_int_distribution<size_t> pieces(1, 3);
    Subgraph                              out(G);
    size_t const                          n = pieces(rng);
    for (size_t i = 0; i < n; ++i) {
      GroupElem start;
      if (connected && !out.empty()) {
        std::uniform_int_distribution<size_t> pick(0, out.number_of_vertices() - 1);
        start = *std::next(out.vertices().begin(),
                           static_cast<std::ptrdiff_t>(pick(rng)));
      } else {
        start = random_elem(rng, *G, 3);
      }
      FTerm t = connected ? FTerm(random_word(rng, G->rank(), max_len))
                          : random_term(rng, G->rank(), max_len, 2);
      out.merge(span_journey(G, start, t));
    }
    return out;
  }

  //! Every word of length at most k over the alphabet of G, shortest first.
  inline std::vector<Word> all_words(size_t rank, size_t k) {
    std::vector<Word> out{Word{}};
    for (size_t start = 0, len = 0; len < k; ++len) {
      size_t const end = out.size();
      for (size_t i = start; i < end; ++i) {
        for (uint32_t b = 0; b < rank; ++b) {
          for (auto l : {pos(b), neg(b)}) {
            out.push_back(out[i] * Word{l});
          }
        }
      }
      start = end;
    }
    return out;
  }

  //! The truncated schema {(red(w), w^m) : |w| <= k} presenting FIM(X) in
  //! the limit k → ∞.
  inline RelationSystem fim_schema(GroupPtr const& G, size_t k) {
    RelationSystem rel(G, Mode::f_inverse);
    for (auto const& w : all_words(G->rank(), k)) {
      rel.add(FTerm(free_reduce(w)), FTerm::jump(w));
    }
    return rel;
  }

  //! Counts pairs (Δ, g) with Δ a subgraph of the Cayley graph of the
  //! permutation group generated by gens, containing 1 and g (and connected
  //! when asked).  Works on raw image tables, without the library.
  inline size_t count_subgraph_pairs(std::vector<std::vector<uint32_t>> const& gens,
                                     bool connected) {
    using Perm = std::vector<uint32_t>;
    Perm id(gens.at(0).size());
    for (uint32_t i = 0; i < id.size(); ++i) {
      id[i] = i;
    }
    std::vector<Perm> elems{id};
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t i = 0; i < elems.size(); ++i) {
      for (auto const& x : gens) {
        Perm p(id.size());
        for (size_t k = 0; k < p.size(); ++k) {
          p[k] = x[elems[i][k]];
        }
        auto it = std::find(elems.begin(), elems.end(), p);
        size_t j = static_cast<size_t>(it - elems.begin());
        if (it == elems.end()) {
          elems.push_back(p);
        }
        edges.emplace_back(i, j);
      }
    }
    size_t const n     = elems.size();
    size_t       total = 0;
    for (uint64_t vs = 1; vs < (uint64_t{1} << n); vs += 2) {
      std::vector<size_t> inner;
      for (size_t e = 0; e < edges.size(); ++e) {
        if ((vs >> edges[e].first & 1) && (vs >> edges[e].second & 1)) {
          inner.push_back(e);
        }
      }
      size_t const nv = static_cast<size_t>(std::popcount(vs));
      for (uint64_t es = 0; es < (uint64_t{1} << inner.size()); ++es) {
        if (connected) {
          uint64_t seen = 1;
          for (bool grew = true; grew;) {
            grew = false;
            for (size_t i = 0; i < inner.size(); ++i) {
              if (es >> i & 1) {
                auto [a, b] = edges[inner[i]];
                if ((seen >> a & 1) != (seen >> b & 1)) {
                  seen |= (uint64_t{1} << a) | (uint64_t{1} << b);
                  grew = true;
                }
              }
            }
          }
          if (seen != vs) {
            continue;
          }
        }
        total += nv;
      }
    }
    return total;
  }

}  // namespace fimon::test

#endif  // FIMON_TESTS_TEST_HELPERS_HPP_
