#ifndef KAUFFMAN_STRUCTURE_HPP_
#define KAUFFMAN_STRUCTURE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "kauffman/words.hpp"

namespace kauffman {

  // The two J-classes of <E_n> made of white blocks and white inverse
  // blocks: D1 holds h[i,j] with i odd, D2 those with i even.
  enum class DClass : std::uint8_t { d1, d2 };

  std::string_view to_string(DClass which) noexcept;

  // h[first, second]: a block when first >= second, an inverse block
  // otherwise. first and second have opposite parity.
  struct DClassElement {
    index_type first  = 1;
    index_type second = 2;

    Word        word() const;
    std::string render() const;
    bool        is_idempotent() const noexcept {
      return first + 1 == second || second + 1 == first;
    }

    friend auto operator<=>(DClassElement const&, DClassElement const&) = default;
  };

  // Sorted by (first, second).
  std::vector<DClassElement> dclass(DClass which, degree_type n);
  std::pair<std::vector<DClassElement>, std::vector<DClassElement>>
  dclasses(degree_type n);

  // The element of `which` whose word has normal form j, if any: ell = 0 and
  // j is a single white block or a stairway of singletons h_a ... h_b.
  std::optional<DClassElement> classify(Jnf const& j, DClass which);

  // Rows are R-classes (indexed by first), columns are L-classes (indexed by
  // second).
  struct EggboxView {
    DClass                         which = DClass::d1;
    degree_type                    n     = 0;
    std::vector<index_type>        rows;
    std::vector<index_type>        cols;
    std::vector<std::vector<bool>> idempotent;

    std::size_t idempotent_count() const;
  };

  EggboxView eggbox(DClass which, degree_type n);

  // One line per R-class, cells h[i,j] with idempotents marked by '*'.
  std::string render(EggboxView const& view);
  nlohmann::json to_json(EggboxView const& view);

  // D_i together with an adjoined zero; the product of two elements is their
  // product in K_n when that lies in D_i, and zero otherwise. The table is
  // indexed by element position, with zero() as the last row and column.
  struct PrincipalFactor {
    DClass                                which = DClass::d1;
    degree_type                           n     = 0;
    std::vector<DClassElement>            elements;
    std::vector<std::vector<std::size_t>> table;

    std::size_t zero() const noexcept {
      return elements.size();
    }
    std::size_t product(std::size_t x, std::size_t y) const {
      return table[x][y];
    }
    std::optional<std::size_t> index_of(DClassElement e) const;
    std::vector<std::size_t>   idempotents() const;
    // Whether zero is a product of two elements of D_i.
    bool zero_is_product() const;
  };

  PrincipalFactor principal_factor(DClass which, degree_type n);

  // Bitset of the subsemigroup generated by the elements in mask; bit zero()
  // stands for the zero.
  std::uint64_t generated(PrincipalFactor const& pf, std::uint64_t mask);

  // True iff the generated subsemigroup contains every element of D_i, and
  // the zero when zero_is_product().
  bool generates(PrincipalFactor const& pf, std::uint64_t mask);

  struct SearchLimits {
    degree_type max_subset_degree       = 8;
    degree_type max_incomparable_degree = 7;
  };

  struct RankResult {
    std::size_t                rank      = 0;
    std::size_t                r_classes = 0;
    std::size_t                l_classes = 0;
    std::vector<DClassElement> witness;
  };

  // Smallest generating subset of D_i by exhaustive search, the first found
  // in lexicographic order. Throws BudgetExceeded past the configured degree.
  RankResult rank_pf(PrincipalFactor const& pf, SearchLimits const& limits = {});

  struct IdRankResult {
    std::size_t                idrank = 0;
    std::vector<DClassElement> witness;
    // Number of generating sets of idempotents of minimum size.
    std::size_t minimal_sets   = 0;
    bool        unique_minimal = false;
  };

  IdRankResult idrank_pf(PrincipalFactor const& pf, SearchLimits const& limits = {});

  struct IncomparabilityReport {
    degree_type n = 0;
    std::size_t members_scanned = 0;
    // Pairs (y, z) of members with y h[2,1] z = h[1,2], resp. y h[1,2] z = h[2,1].
    std::size_t witnesses_d1_below_d2 = 0;
    std::size_t witnesses_d2_below_d1 = 0;
    // Over all exponent 0 elements y, z of K_n with y h[2,1] z = h[1,2]:
    std::size_t factorizations       = 0;
    std::size_t with_components_23   = 0;
    std::size_t equal_to_h22         = 0;

    bool ok() const noexcept {
      return witnesses_d1_below_d2 == 0 && witnesses_d2_below_d1 == 0;
    }
    // Every completing z has components {2,3}, {2',3'} and is h[2,2].
    bool forcing_ok() const noexcept {
      return factorizations > 0 && with_components_23 == factorizations
             && equal_to_h22 == factorizations;
    }
  };

  IncomparabilityReport verify_incomparable(degree_type         n,
                                            SearchLimits const& limits = {});

  struct RankReport {
    degree_type  n = 0;
    RankResult   rank_d1, rank_d2;
    IdRankResult idrank_d1, idrank_d2;
    std::size_t  rank_total   = 0;
    std::size_t  idrank_total = 0;
    // Semigroup generating sets need the identity as well.
    std::size_t semigroup_rank   = 0;
    std::size_t semigroup_idrank = 0;

    std::size_t expected_rank() const noexcept {
      return 2 * (n / 2);
    }
    std::size_t expected_idrank() const noexcept {
      return 2 * n - 4;
    }
    bool ok() const noexcept;
  };

  RankReport verify_main2(degree_type n, SearchLimits const& limits = {});

  nlohmann::json to_json(RankReport const& r);
  nlohmann::json to_json(IncomparabilityReport const& r);

}  // namespace kauffman

#endif  // KAUFFMAN_STRUCTURE_HPP_
