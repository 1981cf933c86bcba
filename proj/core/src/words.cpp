#include "kauffman/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "kauffman/errors.hpp"

namespace kauffman {

  namespace {

    bool is_odd(index_type x) {
      return (x & 1U) != 0;
    }

    index_type parse_index(std::string_view digits, std::string_view token) {
      index_type value = 0;
      auto const* first = digits.data();
      auto const* last  = digits.data() + digits.size();
      auto [ptr, ec]    = std::from_chars(first, last, value);
      if (digits.empty() || ec != std::errc() || ptr != last) {
        throw ParseError("invalid index in token '" + std::string(token)
                         + "'");
      }
      return value;
    }

    void check_range(index_type i, degree_type n, std::string_view token) {
      if (i < 1 || i + 1 > n) {
        throw ParseError("index " + std::to_string(i) + " in token '"
                         + std::string(token) + "' is outside [1, "
                         + std::to_string(n == 0 ? 0 : n - 1) + "]");
      }
    }

    void append_token(Word& out, std::string_view tok, degree_type n) {
      if (tok == "c") {
        out.push_back(Letter::c());
        return;
      }
      if (tok.size() < 2 || tok[0] != 'h') {
        throw ParseError("unexpected token '" + std::string(tok) + "'");
      }
      if (tok[1] != '[') {
        index_type i = parse_index(tok.substr(1), tok);
        check_range(i, n, tok);
        out.push_back(Letter::h(i));
        return;
      }
      if (tok.back() != ']') {
        throw ParseError("unterminated block token '" + std::string(tok)
                         + "'");
      }
      std::string_view inner = tok.substr(2, tok.size() - 3);
      auto             comma = inner.find(',');
      if (comma == std::string_view::npos) {
        throw ParseError("block token '" + std::string(tok)
                         + "' needs two indices");
      }
      index_type x = parse_index(inner.substr(0, comma), tok);
      index_type y = parse_index(inner.substr(comma + 1), tok);
      check_range(x, n, tok);
      check_range(y, n, tok);
      if (x >= y) {
        out.push_back(Letter::block(x, y));
      } else {
        for (index_type t = x; t <= y; ++t) {
          out.push_back(Letter::h(t));
        }
      }
    }

    void jnf_blocks(degree_type                     n,
                    std::vector<Block>&             acc,
                    Jnf&                            scratch,
                    std::function<void(Jnf const&)> const& f) {
      scratch.blocks = acc;
      f(scratch);
      index_type const lo_a = acc.empty() ? 1 : acc.back().bottom + 1;
      index_type const lo_b = acc.empty() ? 1 : acc.back().top + 1;
      for (index_type a = lo_a; a + 1 <= n; ++a) {
        for (index_type b = std::max(a, lo_b); b + 1 <= n; ++b) {
          acc.push_back(Block{b, a});
          jnf_blocks(n, acc, scratch, f);
          acc.pop_back();
        }
      }
    }

  }  // namespace

  std::string_view to_string(Color c) noexcept {
    switch (c) {
      case Color::white:
        return "white";
      case Color::blue:
        return "blue";
      case Color::red:
        return "red";
    }
    return "?";
  }

  Color color(Block b) noexcept {
    bool const top_odd    = is_odd(b.top);
    bool const bottom_odd = is_odd(b.bottom);
    if (top_odd != bottom_odd) {
      return Color::white;
    }
    return top_odd ? Color::blue : Color::red;
  }

  Letter Letter::block(index_type top, index_type bottom) {
    if (bottom < 1 || top < bottom) {
      throw ParseError("invalid block h[" + std::to_string(top) + ","
                       + std::to_string(bottom) + "]");
    }
    return Letter(top, bottom);
  }

  Word Jnf::to_word() const {
    Word w(ell, Letter::c());
    w.reserve(ell + blocks.size());
    for (Block b : blocks) {
      w.push_back(Letter::block(b));
    }
    return w;
  }

  Word parse(std::string_view text, degree_type n) {
    std::vector<std::string_view> tokens;
    std::size_t                   pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      std::size_t start = pos;
      while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (pos > start) {
        tokens.push_back(text.substr(start, pos - start));
      }
    }
    Word out;
    if (tokens.size() == 1 && tokens[0] == "1") {
      return out;
    }
    for (auto tok : tokens) {
      if (tok == "1") {
        throw ParseError("'1' may only appear on its own");
      }
      append_token(out, tok, n);
    }
    return out;
  }

  std::string render(Block b) {
    return "h[" + std::to_string(b.top) + "," + std::to_string(b.bottom) + "]";
  }

  std::string render(Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (Letter x : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += x.is_c() ? std::string("c") : render(x.as_block());
    }
    return out;
  }

  std::string render(Jnf const& j) {
    return render(j.to_word());
  }

  void validate(Word const& w, degree_type n) {
    for (Letter x : w) {
      if (x.is_block() && x.top() + 1 > n) {
        throw ParseError("block " + render(x.as_block())
                         + " exceeds degree " + std::to_string(n));
      }
    }
  }

  ChiReport chi(Word const& w) {
    ChiReport r;
    for (Letter x : w) {
      if (x.is_c()) {
        ++r.c_count;
        continue;
      }
      switch (color(x.as_block())) {
        case Color::blue:
          ++r.blue;
          break;
        case Color::red:
          ++r.red;
          break;
        case Color::white:
          break;
      }
    }
    long const diff = static_cast<long>(r.blue) - static_cast<long>(r.red);
    r.chi           = static_cast<long>(r.c_count) - std::labs(diff);
    return r;
  }

  ChiReport chi(Jnf const& j) {
    return chi(j.to_word());
  }

  bool is_jnf(Word const& w) {
    std::size_t i = 0;
    while (i < w.size() && w[i].is_c()) {
      ++i;
    }
    for (std::size_t k = i; k < w.size(); ++k) {
      if (w[k].is_c()) {
        return false;
      }
      if (k > i
          && (w[k].bottom() <= w[k - 1].bottom()
              || w[k].top() <= w[k - 1].top())) {
        return false;
      }
    }
    return true;
  }

  Jnf as_jnf(Word const& w) {
    Jnf         out;
    std::size_t i = 0;
    while (i < w.size() && w[i].is_c()) {
      ++i;
    }
    out.ell = i;
    for (std::size_t k = i; k < w.size(); ++k) {
      if (w[k].is_c()) {
        throw ShapeError("not in Jones normal form: c at position "
                         + std::to_string(k) + " follows a block");
      }
      if (k > i) {
        if (w[k].bottom() <= w[k - 1].bottom()) {
          throw ShapeError("not in Jones normal form: lower indices not "
                           "increasing at position "
                           + std::to_string(k));
        }
        if (w[k].top() <= w[k - 1].top()) {
          throw ShapeError("not in Jones normal form: upper indices not "
                           "increasing at position "
                           + std::to_string(k));
        }
      }
      out.blocks.push_back(w[k].as_block());
    }
    return out;
  }

  void for_each_jnf(degree_type                     n,
                    std::size_t                     max_exp,
                    std::function<void(Jnf const&)> f) {
    if (n < 1) {
      return;
    }
    for (std::size_t ell = 0; ell <= max_exp; ++ell) {
      Jnf                scratch;
      std::vector<Block> acc;
      scratch.ell = ell;
      jnf_blocks(n, acc, scratch, f);
    }
  }

  std::vector<Jnf> enumerate_jnf(degree_type n, std::size_t max_exp) {
    std::vector<Jnf> out;
    for_each_jnf(n, max_exp, [&out](Jnf const& j) { out.push_back(j); });
    return out;
  }

}  // namespace kauffman
