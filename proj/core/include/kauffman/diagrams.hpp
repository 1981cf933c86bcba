#ifndef KAUFFMAN_DIAGRAMS_HPP_
#define KAUFFMAN_DIAGRAMS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "kauffman/words.hpp"

namespace kauffman {

  // Boundary points of a diagram of degree n: top points are 1..n and the
  // bottom point i' is n + i. The canonical order 1 < ... < n < 1' < ... < n'
  // is then the numeric order.
  using point_type = std::uint32_t;
  using PointPair  = std::pair<point_type, point_type>;

  // A planar Brauer diagram: a non-crossing perfect matching of the 2n
  // boundary points.
  class PlanarDiagram {
   public:
    PlanarDiagram() = default;

    static PlanarDiagram identity(degree_type n);
    // The hook joining i to i + 1 and i' to (i + 1)'. Throws DiagramError
    // unless 1 <= i <= n - 1.
    static PlanarDiagram hook(index_type i, degree_type n);
    // Validates that pairs is a non-crossing perfect matching.
    static PlanarDiagram from_pairs(degree_type n, std::span<PointPair const> pairs);

    degree_type degree() const noexcept {
      return _mate.size() / 2;
    }

    point_type mate(point_type p) const {
      return _mate[p - 1] + 1;
    }

    // Each pair smaller point first, sorted by first point.
    std::vector<PointPair> pairs() const;

    // Number of top points joined to bottom points.
    std::size_t rank() const noexcept;

    std::size_t hash() const noexcept;

    friend bool operator==(PlanarDiagram const&, PlanarDiagram const&) = default;
    friend auto operator<=>(PlanarDiagram const&, PlanarDiagram const&) = default;

   private:
    friend std::pair<PlanarDiagram, std::size_t> multiply(PlanarDiagram const&,
                                                          PlanarDiagram const&);
    friend std::vector<PlanarDiagram> enumerate(degree_type n);

    // Zero based: _mate[p] is the partner of point p, points 0..n-1 on top
    // and n..2n-1 on the bottom.
    std::vector<std::uint8_t> _mate;
  };

  // An element (c^exp, diag) of the diagrammatic Kauffman monoid.
  struct KElement {
    std::size_t   exp = 0;
    PlanarDiagram diag;

    friend bool operator==(KElement const&, KElement const&) = default;
    friend auto operator<=>(KElement const&, KElement const&) = default;
  };

  // Stacks a on top of b. The second component is the number of closed
  // loops formed in the middle row.
  std::pair<PlanarDiagram, std::size_t> multiply(PlanarDiagram const& a,
                                                 PlanarDiagram const& b);

  KElement kmul(KElement const& x, KElement const& y);

  KElement identity_element(degree_type n);

  // The homomorphic image of a word: c -> (1, id), h[j,i] -> hooks j..i.
  KElement eval(Word const& w, degree_type n);

  // All non-crossing perfect matchings on 2n points, sorted.
  std::vector<PlanarDiagram> enumerate(degree_type n);

  // Chord crossing test in boundary order 1..n, n'..1'. Throws DiagramError
  // if pairs is not a perfect matching of the 2n points.
  bool is_planar(degree_type n, std::span<PointPair const> pairs);

  // Diagram JSON writes primed points as negative integers:
  //   {"n": 3, "pairs": [[1,2],[3,-3],[-1,-2]]}
  nlohmann::json to_json(PlanarDiagram const& d);
  nlohmann::json to_json(KElement const& x);
  PlanarDiagram  diagram_from_json(nlohmann::json const& j);
  KElement       kelement_from_json(nlohmann::json const& j);

  // Inverse of eval on normal forms: maps each element to its Jones normal
  // form, using the bijection between exponent 0 normal forms and diagrams.
  class NormalFormIndex {
   public:
    explicit NormalFormIndex(degree_type n);

    degree_type degree() const noexcept {
      return _n;
    }
    Jnf operator()(KElement const& x) const;
    Jnf const& of(PlanarDiagram const& d) const;

   private:
    struct Hash {
      std::size_t operator()(PlanarDiagram const& d) const noexcept {
        return d.hash();
      }
    };
    degree_type                                   _n;
    std::unordered_map<PlanarDiagram, Jnf, Hash> _index;
  };

}  // namespace kauffman

template <>
struct std::hash<kauffman::PlanarDiagram> {
  std::size_t operator()(kauffman::PlanarDiagram const& d) const noexcept {
    return d.hash();
  }
};

template <>
struct std::hash<kauffman::KElement> {
  std::size_t operator()(kauffman::KElement const& x) const noexcept {
    return x.diag.hash() * 31 + x.exp;
  }
};

#endif  // KAUFFMAN_DIAGRAMS_HPP_
