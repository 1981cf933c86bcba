#include "kauffman/idempotents.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <unordered_set>

#include "kauffman/diagrams.hpp"
#include "kauffman/errors.hpp"
#include "kauffman/rewrite.hpp"

namespace kauffman {

  namespace {

    using Gens = std::vector<EPrimeGen>;

    bool is_odd(index_type x) {
      return (x & 1U) != 0;
    }

    void require(bool ok, std::string const& what) {
      if (!ok) {
        throw VerificationFailed("decompose: " + what);
      }
    }

    // h[j,i] = h[j,j-1] h[j-2,j-3] ... h[i+1,i] for j - i odd.
    void white_block(Block b, Gens& out) {
      require(color(b) == Color::white, "expected a white block " + render(b));
      for (index_type t = b.top; t > b.bottom; t -= 2) {
        out.push_back(EPrimeGen::down(t - 1));
      }
    }

    // h_lo h_{lo+1} ... h_hi = h[lo,lo+1] h[lo+2,lo+3] ... h[hi-1,hi].
    void white_inverse(index_type lo, index_type hi, Gens& out) {
      require(lo < hi && is_odd(lo) != is_odd(hi),
              "expected a white inverse block");
      for (index_type t = lo; t < hi; t += 2) {
        out.push_back(EPrimeGen::up(t));
      }
    }

    // h_k h_l for k, l of opposite parity.
    void parity_pair(index_type k, index_type l, Gens& out) {
      require(is_odd(k) != is_odd(l), "h_k h_l needs opposite parity");
      if (k == l + 1) {
        out.push_back(EPrimeGen::down(l));
      } else if (l == k + 1) {
        out.push_back(EPrimeGen::up(k));
      } else if (k > l) {
        // h_k h_l = h[k,l] h[l+2,k]
        white_block(Block{k, l}, out);
        white_inverse(l + 2, k, out);
      } else {
        // Reverse of the above: h_k h_l = h[l,k+2] h[k,l]
        white_block(Block{l, k + 2}, out);
        white_inverse(k, l, out);
      }
    }

    // c h[j,i] for a blue or red block.
    void scalar_times_block(Block b, Gens& out) {
      require(color(b) != Color::white, "expected a non-white block");
      index_type const j = b.top;
      index_type const i = b.bottom;
      if (i == j) {
        if (i > 1) {
          // h[i,i-1] h[i-1,i] = c h_i
          out.push_back(EPrimeGen::down(i - 1));
          out.push_back(EPrimeGen::up(i - 1));
        } else {
          // h[1,2] h[2,1] = c h_1
          out.push_back(EPrimeGen::up(1));
          out.push_back(EPrimeGen::down(1));
        }
        return;
      }
      // h[j,j-1] h[j-1,j] h[j-1,i] = c h[j,i]
      out.push_back(EPrimeGen::down(j - 1));
      out.push_back(EPrimeGen::up(j - 1));
      white_block(Block{j - 1, i}, out);
    }

    void require_balanced(std::vector<Block> const& blocks) {
      std::size_t blue = 0, red = 0;
      for (Block b : blocks) {
        Color col = color(b);
        blue += col == Color::blue;
        red += col == Color::red;
      }
      require(blue == red, "shaved normal form is not balanced");
    }

    std::optional<Block> shave(Block b) {
      if (b.top > b.bottom) {
        return Block{b.top, b.bottom + 1};
      }
      return std::nullopt;
    }

    void assemble(std::vector<Block> const& blocks,
                  Color                     majority,
                  std::size_t               weight_bound,
                  Gens&                     out);

    // A c-free normal form with equally many blue and red blocks that cannot
    // be split into shorter such normal forms. The stairway prefix of length q
    // has its bottoms moved to the right, leaving a balanced normal form of
    // smaller weight.
    void tightly_balanced(std::vector<Block> const& w,
                          std::size_t               weight_bound,
                          Gens&                     out) {
      std::size_t const r = w.size();
      require(r >= 1 && r < weight_bound, "weight did not decrease");
      if (r == 1) {
        white_block(w[0], out);
        return;
      }
      Color const first = color(w.front());
      Color const last  = color(w.back());
      require(first != Color::white && last != Color::white && first != last,
              "tightly balanced word must start and end with opposite colors");

      std::size_t q = 1;
      while (q < r && w[q].bottom == w[q - 1].bottom + 1) {
        ++q;
      }
      index_type const a1 = w[0].bottom;
      index_type const aq = w[q - 1].bottom;

      if (auto h = shave(w[0])) {
        white_block(*h, out);
      }
      std::vector<Block> inner;
      for (std::size_t s = 1; s < q; ++s) {
        if (auto h = shave(w[s])) {
          inner.push_back(*h);
        }
      }
      if (q % 2 == 1) {
        // w = H[b1,a1+1] (inner) H[br,ar+1] (h_ar h_a1) H[a1+1,aq]
        require(q < r, "odd stairway cannot cover the whole word");
        inner.insert(inner.end(), w.begin() + q, w.end() - 1);
        require_balanced(inner);
        assemble(inner, Color::blue, r, out);
        if (auto h = shave(w[r - 1])) {
          white_block(*h, out);
        }
        parity_pair(w[r - 1].bottom, a1, out);
        if (q > 1) {
          white_inverse(a1 + 1, aq, out);
        }
      } else {
        // w = H[b1,a1+1] (inner) h[a1,aq]
        inner.insert(inner.end(), w.begin() + q, w.end());
        require_balanced(inner);
        assemble(inner, Color::blue, r, out);
        white_inverse(a1, aq, out);
      }
    }

    // A c-free normal form together with #majority - #minority copies of c.
    // Balanced factors of the colour word become tightly balanced segments,
    // leftover majority blocks absorb one c each, and white blocks outside
    // any segment stand alone.
    void assemble(std::vector<Block> const& blocks,
                  Color                     majority,
                  std::size_t               weight_bound,
                  Gens&                     out) {
      std::string              u;
      std::vector<std::size_t> where;
      std::size_t              blue = 0, red = 0;
      for (std::size_t s = 0; s < blocks.size(); ++s) {
        Color col = color(blocks[s]);
        if (col == Color::white) {
          continue;
        }
        (col == Color::blue ? blue : red)++;
        u.push_back(col == majority ? '0' : '1');
        where.push_back(s);
      }
      if (majority == Color::blue) {
        require(blue >= red, "majority colour mismatch");
      } else {
        require(red >= blue, "majority colour mismatch");
      }

      std::size_t next_block = 0;
      std::size_t letter     = 0;
      auto        flush_whites = [&](std::size_t upto) {
        for (; next_block < upto; ++next_block) {
          white_block(blocks[next_block], out);
        }
      };
      for (auto const& factor : factor_balanced(u)) {
        std::size_t const first = where[letter];
        std::size_t const last  = where[letter + factor.size() - 1];
        letter += factor.size();
        flush_whites(first);
        if (factor == "0") {
          scalar_times_block(blocks[first], out);
        } else {
          tightly_balanced(
              std::vector<Block>(blocks.begin() + static_cast<std::ptrdiff_t>(first),
                                 blocks.begin() + static_cast<std::ptrdiff_t>(last) + 1),
              weight_bound,
              out);
        }
        next_block = last + 1;
      }
      flush_whites(blocks.size());
    }

    // c^2 g w' = g g~ g w' for g in E'_n with partner g~.
    void prepend_scalar_square(Gens& gens) {
      require(!gens.empty(), "cannot absorb c^2 into the empty product");
      EPrimeGen g = gens.front();
      gens.insert(gens.begin() + 1, {g.partner(), g});
    }

  }  // namespace

  Word EPrimeGen::word() const {
    if (kind == GenKind::down) {
      return {Letter::block(i + 1, i)};
    }
    return {Letter::h(i), Letter::h(i + 1)};
  }

  std::string EPrimeGen::render() const {
    auto const a = std::to_string(i);
    auto const b = std::to_string(i + 1);
    return kind == GenKind::down ? "h[" + b + "," + a + "]"
                                 : "h[" + a + "," + b + "]";
  }

  std::vector<EPrimeGen> eprime(degree_type n) {
    std::vector<EPrimeGen> out;
    for (index_type i = 1; i + 2 <= n; ++i) {
      out.push_back(EPrimeGen::down(i));
      out.push_back(EPrimeGen::up(i));
    }
    return out;
  }

  Word Certificate::word() const {
    Word w;
    for (auto const& g : generators) {
      auto gw = g.word();
      w.insert(w.end(), gw.begin(), gw.end());
    }
    return w;
  }

  std::string render(Certificate const& cert) {
    if (cert.is_empty_product()) {
      return "1";
    }
    std::string out;
    for (auto const& g : cert.generators) {
      if (!out.empty()) {
        out += ' ';
      }
      out += g.render();
    }
    return out;
  }

  std::string render_compact(Jnf const& j) {
    std::string out;
    auto        emit = [&out](std::string const& tok) {
      if (!out.empty()) {
        out += ' ';
      }
      out += tok;
    };
    for (std::size_t k = 0; k < j.ell; ++k) {
      emit("c");
    }
    auto const& b = j.blocks;
    for (std::size_t s = 0; s < b.size();) {
      std::size_t t = s;
      while (b[t].top == b[t].bottom && t + 1 < b.size()
             && b[t + 1].top == b[t + 1].bottom
             && b[t + 1].bottom == b[t].bottom + 1) {
        ++t;
      }
      if (t > s) {
        emit("h[" + std::to_string(b[s].bottom) + "," + std::to_string(b[t].bottom)
             + "]");
      } else {
        emit(render(b[s]));
      }
      s = t + 1;
    }
    return out.empty() ? "1" : out;
  }

  namespace {
    void sort_by_length(std::vector<Jnf>& v) {
      std::sort(v.begin(), v.end(), [](Jnf const& x, Jnf const& y) {
        if (x.blocks.size() != y.blocks.size()) {
          return x.blocks.size() < y.blocks.size();
        }
        return x < y;
      });
    }
  }  // namespace

  std::vector<Jnf> enumerate_idempotents(degree_type n) {
    NormalFormIndex  index(n);
    std::vector<Jnf> out;
    for (auto const& d : enumerate(n)) {
      auto [square, loops] = multiply(d, d);
      if (loops == 0 && square == d) {
        out.push_back(index.of(d));
      }
    }
    sort_by_length(out);
    return out;
  }

  std::vector<Jnf> enumerate_idempotents_by_words(degree_type n) {
    std::vector<Jnf> out;
    for_each_jnf(n, 0, [&out](Jnf const& j) {
      Word w  = j.to_word();
      Word ww = w;
      ww.insert(ww.end(), w.begin(), w.end());
      if (normal_form(ww) == j) {
        out.push_back(j);
      }
    });
    sort_by_length(out);
    return out;
  }

  std::string_view to_string(MembershipReason r) noexcept {
    switch (r) {
      case MembershipReason::identity:
        return "identity";
      case MembershipReason::member:
        return "member";
      case MembershipReason::chi_negative:
        return "chi-negative";
      case MembershipReason::chi_odd:
        return "chi-odd";
      case MembershipReason::pure_scalar:
        return "pure-scalar";
    }
    return "?";
  }

  MembershipVerdict is_member(Word const& w) {
    MembershipVerdict v;
    v.normal_form = normal_form(w);
    v.report      = chi(v.normal_form);
    v.chi         = v.report.chi;
    if (v.normal_form.blocks.empty() && v.normal_form.ell == 0) {
      v.member = true;
      v.reason = MembershipReason::identity;
    } else if (v.chi < 0) {
      v.reason = MembershipReason::chi_negative;
    } else if (v.chi % 2 != 0) {
      v.reason = MembershipReason::chi_odd;
    } else if (v.normal_form.blocks.empty()) {
      v.reason = MembershipReason::pure_scalar;
    } else {
      v.member = true;
      v.reason = MembershipReason::member;
    }
    return v;
  }

  std::vector<std::string> factor_balanced(std::string_view u) {
    long k = 0;
    for (char x : u) {
      if (x != '0' && x != '1') {
        throw std::invalid_argument("binary word must be over {0,1}");
      }
      k += x == '0' ? 1 : -1;
    }
    if (k < 0) {
      throw std::invalid_argument("binary word has more 1s than 0s");
    }
    std::vector<std::string_view> coarse;
    std::size_t                   pos = 0;
    while (pos < u.size()) {
      if (k == 0) {
        coarse.push_back(u.substr(pos));
        break;
      }
      if (u[pos] == '0') {
        coarse.push_back(u.substr(pos, 1));
        ++pos;
        --k;
        continue;
      }
      long        bal = 0;
      std::size_t end = pos;
      do {
        bal += u[end] == '0' ? 1 : -1;
        ++end;
      } while (bal != 0);
      coarse.push_back(u.substr(pos, end - pos));
      pos = end;
    }
    std::vector<std::string> out;
    for (auto f : coarse) {
      if (f == "0") {
        out.emplace_back(f);
        continue;
      }
      long        bal   = 0;
      std::size_t start = 0;
      for (std::size_t t = 0; t < f.size(); ++t) {
        bal += f[t] == '0' ? 1 : -1;
        if (bal == 0) {
          out.emplace_back(f.substr(start, t + 1 - start));
          start = t + 1;
        }
      }
    }
    return out;
  }

  Certificate decompose(Word const& w, degree_type n) {
    validate(w, n);
    MembershipVerdict const v = is_member(w);
    if (!v.member) {
      throw NotAMember(render(w) + " is not in <E_n>: "
                       + std::string(to_string(v.reason)));
    }
    Certificate cert;
    if (v.reason == MembershipReason::identity) {
      return cert;
    }
    Jnf const&  j        = v.normal_form;
    Color const majority = v.report.blue >= v.report.red ? Color::blue : Color::red;
    assemble(j.blocks, majority, std::numeric_limits<std::size_t>::max(),
             cert.generators);
    for (long s = 0; s < v.chi / 2; ++s) {
      prepend_scalar_square(cert.generators);
    }
    if (eval(cert.word(), n) != eval(w, n)) {
      throw VerificationFailed("certificate " + render(cert)
                               + " does not evaluate to " + render(w));
    }
    return cert;
  }

  std::set<Jnf> closure_bfs(degree_type n, std::size_t max_exp) {
    NormalFormIndex       index(n);
    std::vector<KElement> gens;
    for (auto const& g : eprime(n)) {
      gens.push_back(eval(g.word(), n));
    }
    std::unordered_set<KElement> seen;
    std::deque<KElement>         frontier;
    auto                         visit = [&](KElement x) {
      if (x.exp <= max_exp && seen.insert(x).second) {
        frontier.push_back(std::move(x));
      }
    };
    visit(identity_element(n));
    for (auto const& g : gens) {
      visit(g);
    }
    while (!frontier.empty()) {
      KElement x = std::move(frontier.front());
      frontier.pop_front();
      for (auto const& g : gens) {
        visit(kmul(x, g));
      }
    }
    std::set<Jnf> out;
    for (auto const& x : seen) {
      out.insert(index(x));
    }
    return out;
  }

}  // namespace kauffman
