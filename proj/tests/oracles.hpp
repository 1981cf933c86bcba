#ifndef KAUFFMAN_TESTS_ORACLES_HPP_
#define KAUFFMAN_TESTS_ORACLES_HPP_

// Reference computations that share no code with the library beyond the
// public PlanarDiagram accessors. They are slow and deliberately simple.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "kauffman/diagrams.hpp"
#include "kauffman/words.hpp"

namespace oracle {

  using kauffman::degree_type;

  // A matching as a 1-based mate table on points 1..2n (i' is n + i).
  using Mate = std::vector<std::size_t>;

  inline std::uint64_t catalan(std::size_t n) {
    std::uint64_t c = 1;
    for (std::size_t k = 0; k < n; ++k) {
      c = c * 2 * (2 * k + 1) / (k + 2);
    }
    return c;
  }

  inline std::size_t circle(std::size_t p, degree_type n) {
    return p <= n ? p : 3 * n + 1 - p;
  }

  // Non-crossing iff for every chord the points strictly inside it on the
  // boundary circle are matched among themselves.
  inline bool noncrossing(Mate const& m, degree_type n) {
    for (std::size_t p = 1; p <= 2 * n; ++p) {
      std::size_t a = circle(p, n), b = circle(m[p], n);
      if (a > b) {
        continue;
      }
      for (std::size_t q = 1; q <= 2 * n; ++q) {
        std::size_t x = circle(q, n), y = circle(m[q], n);
        bool inside_x = a < x && x < b;
        bool inside_y = a < y && y < b;
        if (inside_x != inside_y) {
          return false;
        }
      }
    }
    return true;
  }

  inline void all_matchings(Mate& m, degree_type n, std::vector<Mate>& out) {
    std::size_t first = 0;
    for (std::size_t p = 1; p <= 2 * n; ++p) {
      if (m[p] == 0) {
        first = p;
        break;
      }
    }
    if (first == 0) {
      out.push_back(m);
      return;
    }
    for (std::size_t q = first + 1; q <= 2 * n; ++q) {
      if (m[q] == 0) {
        m[first] = q;
        m[q]     = first;
        all_matchings(m, n, out);
        m[first] = m[q] = 0;
      }
    }
  }

  // Every perfect matching of 2n points, filtered to the non-crossing ones.
  inline std::vector<Mate> planar_matchings(degree_type n) {
    std::vector<Mate> all, out;
    Mate              m(2 * n + 1, 0);
    all_matchings(m, n, all);
    for (auto const& x : all) {
      if (noncrossing(x, n)) {
        out.push_back(x);
      }
    }
    return out;
  }

  inline Mate mate_of(kauffman::PlanarDiagram const& d) {
    Mate m(2 * d.degree() + 1, 0);
    for (std::size_t p = 1; p <= 2 * d.degree(); ++p) {
      m[p] = d.mate(static_cast<kauffman::point_type>(p));
    }
    return m;
  }

  struct Element {
    std::size_t exp = 0;
    Mate        mate;
    friend auto operator<=>(Element const&, Element const&) = default;
  };

  // Stack a over b by walking strands. Each outer point is followed until it
  // leaves the picture again; untouched middle points form closed loops.
  inline Element product(Element const& a, Element const& b, degree_type n) {
    Element r{a.exp + b.exp, Mate(2 * n + 1, 0)};
    std::vector<bool> seen(n + 1, false);
    // Layer 0 is a, layer 1 is b; in a the middle row is its bottom row.
    auto walk = [&](int layer, std::size_t p) -> std::size_t {
      for (;;) {
        Mate const& m = layer == 0 ? a.mate : b.mate;
        std::size_t q = m[p];
        if (layer == 0 && q <= n) {
          return q;
        }
        if (layer == 1 && q > n) {
          return q;
        }
        std::size_t mid = layer == 0 ? q - n : q;
        seen[mid]       = true;
        layer           = 1 - layer;
        p               = layer == 0 ? mid + n : mid;
      }
    };
    for (std::size_t p = 1; p <= n; ++p) {
      r.mate[p] = walk(0, p);
    }
    for (std::size_t p = n + 1; p <= 2 * n; ++p) {
      r.mate[p] = walk(1, p);
    }
    for (std::size_t k = 1; k <= n; ++k) {
      if (seen[k]) {
        continue;
      }
      ++r.exp;
      std::size_t mid = k;
      do {
        seen[mid] = true;
        mid       = a.mate[mid + n] - n;
        seen[mid] = true;
        mid       = b.mate[mid];
      } while (mid != k);
    }
    return r;
  }

  inline Element identity(degree_type n) {
    Element e{0, Mate(2 * n + 1, 0)};
    for (std::size_t i = 1; i <= n; ++i) {
      e.mate[i]     = n + i;
      e.mate[n + i] = i;
    }
    return e;
  }

  inline Element hook(std::size_t i, degree_type n) {
    Element e  = identity(n);
    e.mate[i]     = i + 1;
    e.mate[i + 1] = i;
    e.mate[n + i]     = n + i + 1;
    e.mate[n + i + 1] = n + i;
    return e;
  }

  // The word read letter by letter with every block expanded into hooks.
  inline Element eval(kauffman::Word const& w, degree_type n) {
    Element acc = identity(n);
    for (auto x : w) {
      if (x.is_c()) {
        ++acc.exp;
        continue;
      }
      for (std::size_t t = x.top(); t >= x.bottom(); --t) {
        acc = product(acc, hook(t, n), n);
      }
    }
    return acc;
  }

  inline Element from(kauffman::KElement const& x) {
    return {x.exp, mate_of(x.diag)};
  }

  // Idempotents among exponent 0 diagrams: x x = x forces no loops.
  inline std::set<Mate> idempotent_diagrams(degree_type n) {
    std::set<Mate> out;
    for (auto const& m : planar_matchings(n)) {
      Element x{0, m};
      if (product(x, x, n) == x) {
        out.insert(m);
      }
    }
    return out;
  }

  // BFS over products of the length two idempotents h_{i+1} h_i and
  // h_i h_{i+1}, keeping exponents <= max_exp. Includes the identity.
  inline std::set<Element> closure(degree_type n, std::size_t max_exp) {
    std::vector<Element> gens;
    for (std::size_t i = 1; i + 2 <= n; ++i) {
      gens.push_back(product(hook(i + 1, n), hook(i, n), n));
      gens.push_back(product(hook(i, n), hook(i + 1, n), n));
    }
    std::set<Element>   seen{identity(n)};
    std::queue<Element> todo;
    todo.push(identity(n));
    while (!todo.empty()) {
      Element x = todo.front();
      todo.pop();
      for (auto const& g : gens) {
        Element y = product(x, g, n);
        if (y.exp <= max_exp && seen.insert(y).second) {
          todo.push(y);
        }
      }
    }
    return seen;
  }

  // Smallest k such that some k-subset of the elements generates a set
  // containing `target`, where mul returns an index or -1 for the zero.
  inline std::size_t min_generating(std::size_t                            size,
                                    std::vector<std::vector<int>> const&   mul,
                                    std::vector<std::size_t> const&        pool,
                                    std::size_t                            max_k) {
    for (std::size_t k = 1; k <= std::min(max_k, pool.size()); ++k) {
      std::vector<bool> pick(pool.size(), false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        std::vector<bool>        in(size, false);
        std::vector<std::size_t> list;
        for (std::size_t t = 0; t < pool.size(); ++t) {
          if (pick[t] && !in[pool[t]]) {
            in[pool[t]] = true;
            list.push_back(pool[t]);
          }
        }
        for (std::size_t s = 0; s < list.size(); ++s) {
          for (std::size_t t = 0; t <= s; ++t) {
            for (auto [x, y] : {std::pair{list[s], list[t]}, std::pair{list[t], list[s]}}) {
              int z = mul[x][y];
              if (z >= 0 && !in[static_cast<std::size_t>(z)]) {
                in[static_cast<std::size_t>(z)] = true;
                list.push_back(static_cast<std::size_t>(z));
              }
            }
          }
        }
        if (list.size() == size) {
          return k;
        }
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return 0;
  }

  struct ClassRanks {
    std::size_t rank   = 0;
    std::size_t idrank = 0;
  };

  // D holds h[i,j] with i of the given parity and j of the other, as
  // diagrams; the product of two of them counts only if it is loop free and
  // again in D. Zero is ignored: generating D itself is what is measured.
  inline ClassRanks class_ranks(degree_type n, std::size_t parity) {
    std::vector<Element> elems;
    std::vector<bool>    idem;
    for (std::size_t i = 1; i < n; ++i) {
      if (i % 2 != parity) {
        continue;
      }
      for (std::size_t j = 1; j < n; ++j) {
        if (j % 2 == parity) {
          continue;
        }
        Element e = identity(n);
        if (i >= j) {
          for (std::size_t t = i; t >= j; --t) {
            e = product(e, hook(t, n), n);
          }
        } else {
          for (std::size_t t = i; t <= j; ++t) {
            e = product(e, hook(t, n), n);
          }
        }
        elems.push_back(e);
        idem.push_back(i + 1 == j || j + 1 == i);
      }
    }
    std::map<Element, int> index;
    for (std::size_t k = 0; k < elems.size(); ++k) {
      index[elems[k]] = static_cast<int>(k);
    }
    std::vector<std::vector<int>> mul(elems.size(), std::vector<int>(elems.size(), -1));
    for (std::size_t x = 0; x < elems.size(); ++x) {
      for (std::size_t y = 0; y < elems.size(); ++y) {
        auto it = index.find(product(elems[x], elems[y], n));
        if (it != index.end()) {
          mul[x][y] = it->second;
        }
      }
    }
    std::vector<std::size_t> all, ids;
    for (std::size_t k = 0; k < elems.size(); ++k) {
      all.push_back(k);
      if (idem[k]) {
        ids.push_back(k);
      }
    }
    return {min_generating(elems.size(), mul, all, elems.size()),
            min_generating(elems.size(), mul, ids, ids.size())};
  }

}  // namespace oracle

#endif  // KAUFFMAN_TESTS_ORACLES_HPP_
