#include "kauffman/rewrite.hpp"

#include <algorithm>

#include "kauffman/errors.hpp"

namespace kauffman {

  namespace {

    Letter blk(index_type top, index_type bottom) {
      return Letter::block(top, bottom);
    }

    // Running colour counters so chi can be logged per step without
    // rescanning the word.
    struct Counters {
      long c    = 0;
      long blue = 0;
      long red  = 0;

      explicit Counters(Word const& w) {
        auto r = chi(w);
        c      = static_cast<long>(r.c_count);
        blue   = static_cast<long>(r.blue);
        red    = static_cast<long>(r.red);
      }

      long value() const {
        return c - std::labs(blue - red);
      }

      void add(Word const& snippet, long sign) {
        auto r = chi(snippet);
        c += sign * static_cast<long>(r.c_count);
        blue += sign * static_cast<long>(r.blue);
        red += sign * static_cast<long>(r.red);
      }
    };

    // Replaces w[pos] w[pos + 1] by the right-hand side of m.
    void apply(Word& w, std::size_t pos, RuleMatch const& m) {
      auto it = w.begin() + static_cast<std::ptrdiff_t>(pos);
      it      = w.erase(it, it + 2);
      w.insert(it, m.replacement.begin(), m.replacement.end());
    }

    template <typename ChoosePosition, typename OnStep>
    Jnf run(Word w, ChoosePosition&& choose, OnStep&& on_step) {
      std::size_t const fuel  = fuel_bound(w.size());
      std::size_t       steps = 0;
      while (true) {
        auto chosen = choose(static_cast<Word const&>(w));
        if (!chosen) {
          break;
        }
        auto const& [pos, match] = *chosen;
        if (++steps > fuel) {
          throw FuelExhausted("normalization exceeded " + std::to_string(fuel)
                              + " steps");
        }
        on_step(static_cast<Word const&>(w), pos, match);
        apply(w, pos, match);
      }
      return as_jnf(w);
    }

    // Leftmost strategy; a rewrite at p can only create a new redex at
    // p - 1 or later, so scanning resumes there.
    struct Leftmost {
      std::size_t from = 0;

      std::optional<std::pair<std::size_t, RuleMatch>> operator()(
          Word const& w) {
        for (std::size_t p = from; p + 1 < w.size(); ++p) {
          if (auto m = match_pair(w[p], w[p + 1])) {
            from = p == 0 ? 0 : p - 1;
            return std::make_pair(p, std::move(*m));
          }
        }
        return std::nullopt;
      }
    };

    struct Random {
      std::mt19937_64* rng;

      std::optional<std::pair<std::size_t, RuleMatch>> operator()(
          Word const& w) {
        std::vector<std::pair<std::size_t, RuleMatch>> options;
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
          if (auto m = match_pair(w[p], w[p + 1])) {
            options.emplace_back(p, std::move(*m));
          }
        }
        if (options.empty()) {
          return std::nullopt;
        }
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        return std::move(options[pick(*rng)]);
      }
    };

    struct Logger {
      NormalizationTrace* trace;
      Counters            counters;

      void operator()(Word const& w, std::size_t pos, RuleMatch const& m) {
        RewriteStep s;
        s.rule       = m.rule;
        s.position   = pos;
        s.before     = Word(w.begin() + static_cast<std::ptrdiff_t>(pos),
                        w.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
        s.after      = m.replacement;
        s.chi_before = counters.value();
        counters.add(s.before, -1);
        counters.add(s.after, +1);
        s.chi_after = counters.value();
        trace->steps.push_back(std::move(s));
      }
    };

    Word random_word(degree_type n, std::size_t max_len, std::mt19937_64& rng) {
      std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
      std::uniform_int_distribution<index_type>  letter_dist(
          0, static_cast<index_type>(n - 1));
      std::size_t len = len_dist(rng);
      Word        w;
      w.reserve(len);
      for (std::size_t k = 0; k < len; ++k) {
        index_type x = letter_dist(rng);
        w.push_back(x == 0 ? Letter::c() : Letter::h(x));
      }
      return w;
    }

  }  // namespace

  std::optional<RuleMatch> match_pair(Letter x, Letter y) {
    if (x.is_c()) {
      return std::nullopt;
    }
    index_type const j = x.top();
    index_type const i = x.bottom();
    if (y.is_c()) {
      // (4) h[j,i] c = c h[j,i]
      return RuleMatch{4, {Letter::c(), x}};
    }
    index_type const l = y.top();
    index_type const k = y.bottom();
    // (1) h[j,i] h[l,k] = h[l,k] h[j,i] whenever i >= l + 2
    if (i >= l + 2) {
      return RuleMatch{1, {y, x}};
    }
    // (2) h[j,i] h[l,k] = h[j,k] whenever j >= k and |i - l| = 1
    if (j >= k && (i == l + 1 || l == i + 1)) {
      return RuleMatch{2, {blk(j, k)}};
    }
    // (3) h[j,i] h[i,k] = c h[j,k]
    if (l == i) {
      return RuleMatch{3, {Letter::c(), blk(j, k)}};
    }
    if (i + 2 <= l) {
      // (5) h[j,i] h[l,k] = h[l-2,k] h[j,i+2]  if j >= l and i >= k
      if (j >= l && i >= k) {
        return RuleMatch{5, {blk(l - 2, k), blk(j, i + 2)}};
      }
      // (6) h[j,i] h[l,k] = h[j,k] h[l,i+2]  if j < l and i >= k
      if (j < l && i >= k) {
        return RuleMatch{6, {blk(j, k), blk(l, i + 2)}};
      }
      // (7) h[j,i] h[l,k] = h[l-2,i] h[j,k]  if j >= l and i < k
      if (j >= l && i < k) {
        return RuleMatch{7, {blk(l - 2, i), blk(j, k)}};
      }
    }
    return std::nullopt;
  }

  std::optional<RuleMatch> applicable_rule(Word const& w, std::size_t position) {
    if (position + 1 >= w.size()) {
      return std::nullopt;
    }
    return match_pair(w[position], w[position + 1]);
  }

  std::size_t fuel_bound(std::size_t len) noexcept {
    std::size_t const m = len + 1;
    return 64 * m * m * m;
  }

  NormalizationTrace normalize(Word const& w) {
    NormalizationTrace t;
    t.input  = w;
    t.output = run(w, Leftmost{}, Logger{&t, Counters(w)});
    return t;
  }

  Jnf normal_form(Word const& w) {
    return run(w, Leftmost{}, [](Word const&, std::size_t, RuleMatch const&) {});
  }

  NormalizationTrace normalize_random(Word const& w, std::mt19937_64& rng) {
    NormalizationTrace t;
    t.input  = w;
    t.output = run(w, Random{&rng}, Logger{&t, Counters(w)});
    return t;
  }

  bool replay(NormalizationTrace const& t) {
    Word w = t.input;
    for (auto const& s : t.steps) {
      if (s.position + s.before.size() > w.size()
          || !std::equal(s.before.begin(),
                         s.before.end(),
                         w.begin() + static_cast<std::ptrdiff_t>(s.position))) {
        return false;
      }
      auto m = applicable_rule(w, s.position);
      if (!m || m->rule != s.rule || m->replacement != s.after) {
        return false;
      }
      apply(w, s.position, *m);
    }
    return is_jnf(w) && as_jnf(w) == t.output;
  }

  bool equal_in_kn(Word const& u, Word const& v) {
    return normal_form(u) == normal_form(v);
  }

  bool chi_step_ok(RewriteStep const& s) noexcept {
    long const d = s.chi_after - s.chi_before;
    return d == 0 || d == 2;
  }

  void accumulate(ConfluenceReport&         report,
                  Word const&               input,
                  NormalizationTrace const& leftmost,
                  NormalizationTrace const& random) {
    ++report.trials;
    if (leftmost.output != random.output) {
      report.divergences.push_back(input);
    }
    report.max_steps_leftmost
        = std::max(report.max_steps_leftmost, leftmost.steps.size());
    report.max_steps_random
        = std::max(report.max_steps_random, random.steps.size());
    report.total_steps += leftmost.steps.size() + random.steps.size();
    for (auto const* t : {&leftmost, &random}) {
      report.chi_violations += static_cast<std::size_t>(
          std::count_if(t->steps.begin(), t->steps.end(), [](auto const& s) {
            return !chi_step_ok(s);
          }));
    }
  }

  ConfluenceReport fuzz_confluence(degree_type   n,
                                   std::size_t   trials,
                                   std::size_t   max_len,
                                   std::uint64_t seed) {
    ConfluenceReport report;
    for (std::size_t t = 0; t < trials; ++t) {
      std::seed_seq   seq{seed, static_cast<std::uint64_t>(t)};
      std::mt19937_64 rng(seq);
      Word            w = random_word(n, max_len, rng);
      accumulate(report, w, normalize(w), normalize_random(w, rng));
    }
    return report;
  }

  ConfluenceReport confluence_exhaustive(degree_type   n,
                                         std::size_t   max_len,
                                         std::uint64_t seed) {
    ConfluenceReport report;
    std::mt19937_64  rng(seed);
    // Odometer over the alphabet {c, h_1, ..., h_{n-1}}, digit 0 = c.
    for (std::size_t len = 0; len <= max_len; ++len) {
      std::vector<index_type> digits(len, 0);
      while (true) {
        Word w;
        w.reserve(len);
        for (auto d : digits) {
          w.push_back(d == 0 ? Letter::c() : Letter::h(d));
        }
        accumulate(report, w, normalize(w), normalize_random(w, rng));
        std::size_t k = 0;
        while (k < len && ++digits[k] == n) {
          digits[k++] = 0;
        }
        if (k == len) {
          break;
        }
      }
    }
    return report;
  }

  std::string trace_text(NormalizationTrace const& t) {
    std::string out;
    for (auto const& s : t.steps) {
      out += "rule=" + std::to_string(s.rule) + " pos=" + std::to_string(s.position)
             + " " + render(s.before) + " => " + render(s.after)
             + " chi:" + std::to_string(s.chi_before) + "->"
             + std::to_string(s.chi_after) + "\n";
    }
    return out;
  }

  nlohmann::json to_json(NormalizationTrace const& t) {
    nlohmann::json steps = nlohmann::json::array();
    for (auto const& s : t.steps) {
      steps.push_back({{"rule", s.rule},
                       {"pos", s.position},
                       {"before", render(s.before)},
                       {"after", render(s.after)},
                       {"chi_before", s.chi_before},
                       {"chi_after", s.chi_after}});
    }
    return {{"input", render(t.input)},
            {"output", render(t.output)},
            {"steps", std::move(steps)}};
  }

}  // namespace kauffman
