#ifndef KAUFFMAN_WORDS_HPP_
#define KAUFFMAN_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace kauffman {

  // The degree n of the monoid K_n. Strand indices live in [1, n - 1].
  using degree_type = std::size_t;
  using index_type  = std::uint32_t;

  enum class Color : std::uint8_t { white, blue, red };

  std::string_view to_string(Color c) noexcept;

  // The block h[top, bottom] = h_top h_{top - 1} ... h_bottom, top >= bottom.
  struct Block {
    index_type top    = 1;
    index_type bottom = 1;

    constexpr std::size_t length() const noexcept {
      return top - bottom + 1;
    }

    friend constexpr auto operator<=>(Block const&, Block const&) = default;
  };

  Color color(Block b) noexcept;

  // A letter of the rewriting alphabet: either the scalar c or a block.
  // Inverse blocks are not letters; the parser expands them into singletons.
  class Letter {
   public:
    constexpr Letter() noexcept = default;

    static constexpr Letter c() noexcept {
      return Letter();
    }

    // Throws ParseError unless 1 <= bottom <= top.
    static Letter block(index_type top, index_type bottom);
    static Letter block(Block b) {
      return block(b.top, b.bottom);
    }
    static Letter h(index_type i) {
      return block(i, i);
    }

    constexpr bool is_c() const noexcept {
      return _top == 0;
    }
    constexpr bool is_block() const noexcept {
      return _top != 0;
    }
    // Only meaningful when is_block().
    constexpr Block as_block() const noexcept {
      return Block{_top, _bottom};
    }
    constexpr index_type top() const noexcept {
      return _top;
    }
    constexpr index_type bottom() const noexcept {
      return _bottom;
    }

    friend constexpr auto operator<=>(Letter const&, Letter const&) = default;

   private:
    constexpr Letter(index_type top, index_type bottom) noexcept
        : _top(top), _bottom(bottom) {}

    index_type _top    = 0;  // 0 encodes c
    index_type _bottom = 0;
  };

  // The empty word is the identity.
  using Word = std::vector<Letter>;

  struct ChiReport {
    std::size_t c_count = 0;
    std::size_t blue    = 0;
    std::size_t red     = 0;
    long        chi     = 0;

    friend bool operator==(ChiReport const&, ChiReport const&) = default;
  };

  // c^ell h[b_1, a_1] ... h[b_k, a_k] with a_1 < ... < a_k, b_1 < ... < b_k.
  // Each entry of blocks is (top = b_s, bottom = a_s).
  struct Jnf {
    std::size_t        ell = 0;
    std::vector<Block> blocks;

    Word to_word() const;

    friend auto operator<=>(Jnf const&, Jnf const&) = default;
  };

  // Parses the whitespace separated word grammar
  //
  //   word  := "1" | token+
  //   token := "c" | "h" INT | "h[" INT "," INT "]"
  //
  // An empty (or all whitespace) string is the identity. h[x,y] with x < y is
  // the inverse block h_x h_{x+1} ... h_y and is expanded into singletons.
  Word parse(std::string_view text, degree_type n);

  // Canonical text; the identity renders as "1".
  std::string render(Word const& w);
  std::string render(Jnf const& j);
  std::string render(Block b);

  // Throws ParseError if some block index exceeds n - 1.
  void validate(Word const& w, degree_type n);

  ChiReport chi(Word const& w);
  ChiReport chi(Jnf const& j);

  bool is_jnf(Word const& w);
  // Throws ShapeError with a diagnostic naming the offending position.
  Jnf as_jnf(Word const& w);

  // Calls f on every Jones normal form of degree n with ell <= max_exp, each
  // exactly once.
  void for_each_jnf(degree_type                     n,
                    std::size_t                     max_exp,
                    std::function<void(Jnf const&)> f);
  std::vector<Jnf> enumerate_jnf(degree_type n, std::size_t max_exp);

}  // namespace kauffman

#endif  // KAUFFMAN_WORDS_HPP_
