#include "kauffman/diagrams.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "kauffman/errors.hpp"

namespace kauffman {

  namespace {

    constexpr degree_type max_degree = 127;

    void check_degree(degree_type n) {
      if (n < 1 || n > max_degree) {
        throw DiagramError("degree " + std::to_string(n)
                           + " outside [1, " + std::to_string(max_degree) + "]");
      }
    }

    // Position of a zero based point on the boundary circle read as
    // 1, ..., n, n', ..., 1'.
    std::size_t circle_position(std::size_t p, degree_type n) {
      return p < n ? p : 3 * n - 1 - p;
    }

    class UnionFind {
     public:
      explicit UnionFind(std::size_t size) : _parent(size) {
        std::iota(_parent.begin(), _parent.end(), std::size_t(0));
      }

      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      void unite(std::size_t x, std::size_t y) {
        _parent[find(x)] = find(y);
      }

     private:
      std::vector<std::size_t> _parent;
    };

    std::int64_t signed_point(point_type p, degree_type n) {
      return p <= n ? static_cast<std::int64_t>(p)
                    : -static_cast<std::int64_t>(p - n);
    }

    point_type unsigned_point(std::int64_t p, degree_type n) {
      auto const m = static_cast<std::int64_t>(n);
      if (p == 0 || p > m || p < -m) {
        throw DiagramError("point " + std::to_string(p) + " out of range for n = "
                           + std::to_string(n));
      }
      return p > 0 ? static_cast<point_type>(p)
                   : static_cast<point_type>(n + static_cast<std::size_t>(-p));
    }

    void dyck(degree_type                         n,
              std::vector<std::uint8_t>&          mate,
              std::vector<std::size_t>&           stack,
              std::size_t                         pos,
              std::size_t                         opened,
              std::vector<std::vector<std::uint8_t>>& out,
              std::vector<std::size_t> const&     point_at) {
      if (pos == 2 * n) {
        out.push_back(mate);
        return;
      }
      if (opened < n) {
        stack.push_back(pos);
        dyck(n, mate, stack, pos + 1, opened + 1, out, point_at);
        stack.pop_back();
      }
      if (!stack.empty()) {
        std::size_t open = stack.back();
        stack.pop_back();
        mate[point_at[open]] = static_cast<std::uint8_t>(point_at[pos]);
        mate[point_at[pos]]  = static_cast<std::uint8_t>(point_at[open]);
        dyck(n, mate, stack, pos + 1, opened, out, point_at);
        stack.push_back(open);
      }
    }

  }  // namespace

  PlanarDiagram PlanarDiagram::identity(degree_type n) {
    check_degree(n);
    PlanarDiagram d;
    d._mate.resize(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      d._mate[i]     = static_cast<std::uint8_t>(n + i);
      d._mate[n + i] = static_cast<std::uint8_t>(i);
    }
    return d;
  }

  PlanarDiagram PlanarDiagram::hook(index_type i, degree_type n) {
    check_degree(n);
    if (i < 1 || i + 1 > n) {
      throw DiagramError("hook index " + std::to_string(i) + " outside [1, "
                         + std::to_string(n - 1) + "]");
    }
    PlanarDiagram d = identity(n);
    std::size_t   a = i - 1;
    d._mate[a]         = static_cast<std::uint8_t>(a + 1);
    d._mate[a + 1]     = static_cast<std::uint8_t>(a);
    d._mate[n + a]     = static_cast<std::uint8_t>(n + a + 1);
    d._mate[n + a + 1] = static_cast<std::uint8_t>(n + a);
    return d;
  }

  PlanarDiagram PlanarDiagram::from_pairs(degree_type                n,
                                          std::span<PointPair const> pairs) {
    check_degree(n);
    if (!is_planar(n, pairs)) {
      throw DiagramError("pairs contain crossing chords");
    }
    PlanarDiagram d;
    d._mate.resize(2 * n);
    for (auto [p, q] : pairs) {
      d._mate[p - 1] = static_cast<std::uint8_t>(q - 1);
      d._mate[q - 1] = static_cast<std::uint8_t>(p - 1);
    }
    return d;
  }

  std::vector<PointPair> PlanarDiagram::pairs() const {
    std::vector<PointPair> out;
    for (std::size_t p = 0; p < _mate.size(); ++p) {
      if (p < _mate[p]) {
        out.emplace_back(static_cast<point_type>(p + 1),
                         static_cast<point_type>(_mate[p] + 1));
      }
    }
    return out;
  }

  std::size_t PlanarDiagram::rank() const noexcept {
    std::size_t const n = degree();
    std::size_t       r = 0;
    for (std::size_t p = 0; p < n; ++p) {
      r += _mate[p] >= n;
    }
    return r;
  }

  std::size_t PlanarDiagram::hash() const noexcept {
    std::size_t h = _mate.size();
    for (auto x : _mate) {
      h = h * 131 + x;
    }
    return h;
  }

  std::pair<PlanarDiagram, std::size_t> multiply(PlanarDiagram const& a,
                                                 PlanarDiagram const& b) {
    std::size_t const n = a.degree();
    assert(b.degree() == n);
    // Points of a are 0..2n-1 and points of b are 2n..4n-1; the bottom of a
    // is glued to the top of b.
    UnionFind uf(4 * n);
    for (std::size_t p = 0; p < 2 * n; ++p) {
      uf.unite(p, a._mate[p]);
      uf.unite(2 * n + p, 2 * n + b._mate[p]);
    }
    for (std::size_t k = 0; k < n; ++k) {
      uf.unite(n + k, 2 * n + k);
    }
    auto outer_to_result = [n](std::size_t p) {
      return p < n ? p : p - 2 * n;
    };
    std::vector<std::ptrdiff_t> first_outer(4 * n, -1);
    PlanarDiagram               product;
    product._mate.resize(2 * n);
    for (std::size_t p = 0; p < 4 * n; ++p) {
      bool const outer = p < n || p >= 3 * n;
      if (!outer) {
        continue;
      }
      std::size_t r = uf.find(p);
      if (first_outer[r] < 0) {
        first_outer[r] = static_cast<std::ptrdiff_t>(p);
      } else {
        auto q = outer_to_result(static_cast<std::size_t>(first_outer[r]));
        auto s = outer_to_result(p);
        product._mate[q] = static_cast<std::uint8_t>(s);
        product._mate[s] = static_cast<std::uint8_t>(q);
      }
    }
    std::size_t       loops = 0;
    std::vector<bool> counted(4 * n, false);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t r = uf.find(n + k);
      if (first_outer[r] < 0 && !counted[r]) {
        counted[r] = true;
        ++loops;
      }
    }
#ifndef NDEBUG
    auto ps = product.pairs();
    assert(is_planar(n, ps));
#endif
    return {std::move(product), loops};
  }

  KElement kmul(KElement const& x, KElement const& y) {
    auto [d, loops] = multiply(x.diag, y.diag);
    return KElement{x.exp + y.exp + loops, std::move(d)};
  }

  KElement identity_element(degree_type n) {
    return KElement{0, PlanarDiagram::identity(n)};
  }

  KElement eval(Word const& w, degree_type n) {
    validate(w, n);
    KElement acc = identity_element(n);
    for (Letter x : w) {
      if (x.is_c()) {
        ++acc.exp;
        continue;
      }
      for (index_type t = x.top(); t >= x.bottom(); --t) {
        acc = kmul(acc, KElement{0, PlanarDiagram::hook(t, n)});
      }
    }
    return acc;
  }

  std::vector<PlanarDiagram> enumerate(degree_type n) {
    check_degree(n);
    std::vector<std::size_t> point_at(2 * n);
    for (std::size_t p = 0; p < 2 * n; ++p) {
      point_at[circle_position(p, n)] = p;
    }
    std::vector<std::vector<std::uint8_t>> mates;
    std::vector<std::uint8_t>              mate(2 * n);
    std::vector<std::size_t>               stack;
    dyck(n, mate, stack, 0, 0, mates, point_at);
    std::vector<PlanarDiagram> out(mates.size());
    for (std::size_t k = 0; k < mates.size(); ++k) {
      out[k]._mate = std::move(mates[k]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_planar(degree_type n, std::span<PointPair const> pairs) {
    if (pairs.size() != n) {
      throw DiagramError("not a perfect matching: expected " + std::to_string(n)
                         + " pairs, got " + std::to_string(pairs.size()));
    }
    std::vector<bool> seen(2 * n, false);
    std::vector<std::pair<std::size_t, std::size_t>> chords;
    for (auto [p, q] : pairs) {
      for (auto x : {p, q}) {
        if (x < 1 || x > 2 * n) {
          throw DiagramError("not a perfect matching: point "
                             + std::to_string(x) + " out of range");
        }
        if (seen[x - 1]) {
          throw DiagramError("not a perfect matching: point "
                             + std::to_string(x) + " appears twice");
        }
        seen[x - 1] = true;
      }
      auto u = circle_position(p - 1, n);
      auto v = circle_position(q - 1, n);
      chords.emplace_back(std::min(u, v), std::max(u, v));
    }
    for (std::size_t s = 0; s < chords.size(); ++s) {
      for (std::size_t t = s + 1; t < chords.size(); ++t) {
        auto [a, b] = chords[s];
        auto [c, d] = chords[t];
        if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) {
          return false;
        }
      }
    }
    return true;
  }

  nlohmann::json to_json(PlanarDiagram const& d) {
    auto const     n = d.degree();
    nlohmann::json pairs = nlohmann::json::array();
    for (auto [p, q] : d.pairs()) {
      pairs.push_back({signed_point(p, n), signed_point(q, n)});
    }
    return {{"n", n}, {"pairs", std::move(pairs)}};
  }

  nlohmann::json to_json(KElement const& x) {
    return {{"exp", x.exp}, {"diagram", to_json(x.diag)}};
  }

  PlanarDiagram diagram_from_json(nlohmann::json const& j) {
    try {
      auto const             n = j.at("n").get<degree_type>();
      std::vector<PointPair> pairs;
      for (auto const& pr : j.at("pairs")) {
        if (!pr.is_array() || pr.size() != 2) {
          throw DiagramError("each pair must be a two element array");
        }
        pairs.emplace_back(unsigned_point(pr[0].get<std::int64_t>(), n),
                           unsigned_point(pr[1].get<std::int64_t>(), n));
      }
      return PlanarDiagram::from_pairs(n, pairs);
    } catch (nlohmann::json::exception const& e) {
      throw DiagramError(std::string("malformed diagram JSON: ") + e.what());
    }
  }

  KElement kelement_from_json(nlohmann::json const& j) {
    try {
      return KElement{j.at("exp").get<std::size_t>(),
                      diagram_from_json(j.at("diagram"))};
    } catch (nlohmann::json::exception const& e) {
      throw DiagramError(std::string("malformed element JSON: ") + e.what());
    }
  }

  NormalFormIndex::NormalFormIndex(degree_type n) : _n(n) {
    for_each_jnf(n, 0, [this, n](Jnf const& j) {
      KElement x = eval(j.to_word(), n);
      if (x.exp != 0) {
        throw VerificationFailed("normal form " + render(j)
                                 + " evaluates with a loop");
      }
      if (!_index.emplace(std::move(x.diag), j).second) {
        throw VerificationFailed("two normal forms evaluate to one diagram");
      }
    });
  }

  Jnf const& NormalFormIndex::of(PlanarDiagram const& d) const {
    auto it = _index.find(d);
    if (it == _index.end()) {
      throw DiagramError("diagram has no normal form in degree "
                         + std::to_string(_n));
    }
    return it->second;
  }

  Jnf NormalFormIndex::operator()(KElement const& x) const {
    Jnf j = of(x.diag);
    j.ell = x.exp;
    return j;
  }

}  // namespace kauffman
