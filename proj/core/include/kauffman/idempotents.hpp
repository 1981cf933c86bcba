#ifndef KAUFFMAN_IDEMPOTENTS_HPP_
#define KAUFFMAN_IDEMPOTENTS_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kauffman/words.hpp"

namespace kauffman {

  // The idempotents of length two: h[i+1,i] (down) and h[i,i+1] = h_i h_{i+1}
  // (up), for 1 <= i <= n - 2.
  enum class GenKind : std::uint8_t { down, up };

  struct EPrimeGen {
    GenKind    kind = GenKind::down;
    index_type i    = 1;

    static EPrimeGen down(index_type i) {
      return {GenKind::down, i};
    }
    static EPrimeGen up(index_type i) {
      return {GenKind::up, i};
    }

    // The generator with the same support and the other orientation.
    EPrimeGen partner() const {
      return {kind == GenKind::down ? GenKind::up : GenKind::down, i};
    }

    Word word() const;

    // "h[i+1,i]" or "h[i,i+1]"; both parse back to the generator.
    std::string render() const;

    friend auto operator<=>(EPrimeGen const&, EPrimeGen const&) = default;
  };

  // Ordered by i, down before up.
  std::vector<EPrimeGen> eprime(degree_type n);

  // A factorization into elements of E'_n. No generators is the empty
  // product, which certifies the identity.
  struct Certificate {
    std::vector<EPrimeGen> generators;

    bool is_empty_product() const noexcept {
      return generators.empty();
    }
    Word word() const;

    friend bool operator==(Certificate const&, Certificate const&) = default;
  };

  // Whitespace separated generators in the word grammar; "1" when empty.
  std::string render(Certificate const& cert);

  // All idempotents of K_n, found by squaring every diagram, as normal forms
  // sorted by number of blocks and then lexicographically.
  std::vector<Jnf> enumerate_idempotents(degree_type n);

  // The same set found on words only: normal forms w with nf(ww) = w.
  std::vector<Jnf> enumerate_idempotents_by_words(degree_type n);

  // Renders runs of consecutive singletons h_a h_{a+1} ... h_b as h[a,b].
  std::string render_compact(Jnf const& j);

  enum class MembershipReason : std::uint8_t {
    identity,
    member,
    chi_negative,
    chi_odd,
    // c^l with l >= 2 even and no blocks: chi is non-negative and even, but
    // every non-empty product of idempotents has a non-identity diagram.
    pure_scalar
  };

  std::string_view to_string(MembershipReason r) noexcept;

  struct MembershipVerdict {
    bool             member = false;
    long             chi    = 0;
    MembershipReason reason = MembershipReason::identity;
    ChiReport        report;
    Jnf              normal_form;
  };

  MembershipVerdict is_member(Word const& w);

  // Splits a word over {'0','1'} with #0 - #1 = k >= 0 into balanced factors
  // and single '0' factors (k of them). Balanced factors are refined at every
  // interior point where the prefix balance returns to zero. Throws
  // std::invalid_argument if k < 0 or the alphabet is wrong.
  std::vector<std::string> factor_balanced(std::string_view u);

  // A certificate for w as a product of E'_n, checked against eval before it
  // is returned. Throws NotAMember, or VerificationFailed on a check failure.
  Certificate decompose(Word const& w, degree_type n);

  // Normal forms of all elements of <E'_n> with exponent <= max_exp, the
  // identity included.
  std::set<Jnf> closure_bfs(degree_type n, std::size_t max_exp);

}  // namespace kauffman

#endif  // KAUFFMAN_IDEMPOTENTS_HPP_
