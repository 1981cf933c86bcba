#include <doctest.h>

#include <random>

#include "kauffman/diagrams.hpp"
#include "kauffman/errors.hpp"
#include "kauffman/rewrite.hpp"

using namespace kauffman;

namespace {

  Word singletons(std::mt19937_64& rng, degree_type n, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<index_type>   pick(0, static_cast<index_type>(n - 1));
    Word                                        w;
    for (std::size_t k = len(rng); k > 0; --k) {
      index_type x = pick(rng);
      w.push_back(x == 0 ? Letter::c() : Letter::h(x));
    }
    return w;
  }

  Word blocks(std::mt19937_64& rng, degree_type n, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<index_type>   top(0, static_cast<index_type>(n - 1));
    Word                                        w;
    for (std::size_t k = len(rng); k > 0; --k) {
      index_type t = top(rng);
      if (t == 0) {
        w.push_back(Letter::c());
      } else {
        std::uniform_int_distribution<index_type> b(1, t);
        w.push_back(Letter::block(t, b(rng)));
      }
    }
    return w;
  }

}  // namespace

TEST_CASE("rule selection on adjacent pairs") {
  auto m = match_pair(Letter::block(5, 4), Letter::block(2, 1));
  REQUIRE(m);
  CHECK(m->rule == 1);
  CHECK(m->replacement == Word{Letter::block(2, 1), Letter::block(5, 4)});

  m = match_pair(Letter::block(3, 2), Letter::block(2, 1));
  REQUIRE(m);
  CHECK(m->rule == 3);
  CHECK(m->replacement == Word{Letter::c(), Letter::block(3, 1)});

  m = match_pair(Letter::h(2), Letter::h(1));
  REQUIRE(m);
  CHECK(m->rule == 2);
  CHECK(m->replacement == Word{Letter::block(2, 1)});

  m = match_pair(Letter::h(1), Letter::c());
  REQUIRE(m);
  CHECK(m->rule == 4);
  CHECK(m->replacement == Word{Letter::c(), Letter::h(1)});

  CHECK_FALSE(match_pair(Letter::c(), Letter::h(1)));
  CHECK_FALSE(match_pair(Letter::h(1), Letter::h(2)));
  CHECK_FALSE(match_pair(Letter::block(2, 1), Letter::block(3, 2)));
}

TEST_CASE("rules 5 to 7 fire on overlapping blocks") {
  auto m = match_pair(Letter::block(6, 2), Letter::block(4, 1));
  REQUIRE(m);
  CHECK(m->rule == 5);
  CHECK(m->replacement == Word{Letter::block(2, 1), Letter::block(6, 4)});

  m = match_pair(Letter::block(3, 2), Letter::block(4, 1));
  REQUIRE(m);
  CHECK(m->rule == 6);
  CHECK(m->replacement == Word{Letter::block(3, 1), Letter::block(4, 4)});

  m = match_pair(Letter::block(5, 1), Letter::block(4, 3));
  REQUIRE(m);
  CHECK(m->rule == 7);
  CHECK(m->replacement == Word{Letter::block(2, 1), Letter::block(5, 3)});

  CHECK_FALSE(match_pair(Letter::block(3, 1), Letter::block(4, 3)));
}

TEST_CASE("every rule preserves the element and moves chi by 0 or 2") {
  for (index_type j = 1; j <= 6; ++j) {
    for (index_type i = 1; i <= j; ++i) {
      for (index_type l = 1; l <= 6; ++l) {
        for (index_type k = 1; k <= l; ++k) {
          Word lhs{Letter::block(j, i), Letter::block(l, k)};
          auto m = match_pair(lhs[0], lhs[1]);
          if (!m) {
            continue;
          }
          CAPTURE(render(lhs));
          CHECK(eval(lhs, 7) == eval(m->replacement, 7));
          long d = chi(m->replacement).chi - chi(lhs).chi;
          CHECK((d == 0 || d == 2));
        }
      }
    }
  }
}

TEST_CASE("normalize examples") {
  CHECK(render(normalize(parse("h1 h2 h1", 3)).output) == "h[1,1]");
  CHECK(render(normalize(parse("h1 h1", 3)).output) == "c h[1,1]");
  auto t = normalize(parse("h1 h2 h1", 3));
  REQUIRE(t.steps.size() == 2);
  CHECK(t.steps[0].rule == 2);
  CHECK(render(t.steps[0].after) == "h[2,1]");
  CHECK(t.steps[1].rule == 2);
  CHECK(render(t.steps[1].before) == "h[1,1] h[2,1]");
}

TEST_CASE("normal forms are fixpoints") {
  for (auto const& j : enumerate_jnf(5, 2)) {
    auto t = normalize(j.to_word());
    CHECK(t.steps.empty());
    CHECK(t.output == j);
  }
}

TEST_CASE("normalize is idempotent and replays") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 300; ++k) {
    Word w = blocks(rng, 6, 12);
    auto t = normalize(w);
    CHECK(replay(t));
    CHECK(normal_form(t.output.to_word()) == t.output);
    CHECK(normal_form(w) == t.output);
    for (auto const& s : t.steps) {
      CHECK(chi_step_ok(s));
    }
  }
}

TEST_CASE("tampered traces fail replay") {
  auto t = normalize(parse("h1 h2 h1", 3));
  auto u = t;
  u.steps[0].rule = 5;
  CHECK_FALSE(replay(u));
  u = t;
  u.output = Jnf{};
  CHECK_FALSE(replay(u));
}

TEST_CASE("equality in K_n") {
  CHECK(equal_in_kn(parse("h1 h2 h1", 3), parse("h1", 3)));
  CHECK(equal_in_kn(parse("h1 c", 3), parse("c h1", 3)));
  CHECK_FALSE(equal_in_kn(parse("h1", 3), parse("h2", 3)));
}

TEST_CASE("normal forms agree with diagrams") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 500; ++k) {
    Word u = singletons(rng, 5, 12), v = singletons(rng, 5, 12);
    CHECK((normal_form(u) == normal_form(v)) == (eval(u, 5) == eval(v, 5)));
    CHECK(eval(u, 5) == eval(normal_form(u).to_word(), 5));
  }
}

TEST_CASE("confluence reports") {
  auto empty = fuzz_confluence(4, 0, 10, 1);
  CHECK(empty.trials == 0);
  CHECK(empty.divergences.empty());
  CHECK(empty.total_steps == 0);

  auto r = fuzz_confluence(4, 1000, 16, 1);
  CHECK(r.trials == 1000);
  CHECK(r.divergences.empty());
  CHECK(r.chi_violations == 0);

  auto e = confluence_exhaustive(3, 6, 1);
  CHECK(e.trials == 1 + 3 + 9 + 27 + 81 + 243 + 729);
  CHECK(e.divergences.empty());
  CHECK(e.chi_violations == 0);
}

TEST_CASE("confluence fuzz is deterministic in the seed") {
  auto a = fuzz_confluence(5, 200, 12, 42);
  auto b = fuzz_confluence(5, 200, 12, 42);
  CHECK(a.total_steps == b.total_steps);
  CHECK(a.max_steps_random == b.max_steps_random);
}

TEST_CASE("random strategy reaches the same normal form") {
  std::mt19937_64 rng(9);
  std::mt19937_64 pick(10);
  for (int k = 0; k < 300; ++k) {
    Word w = blocks(rng, 7, 10);
    CHECK(normalize_random(w, pick).output == normal_form(w));
  }
}

TEST_CASE("trace output formats") {
  auto t = normalize(parse("h1 h1", 3));
  CHECK(trace_text(t) == "rule=3 pos=0 h[1,1] h[1,1] => c h[1,1] chi:-2->0\n");
  auto j = to_json(t);
  CHECK(j["input"] == "h[1,1] h[1,1]");
  CHECK(j["output"] == "c h[1,1]");
  CHECK(j["steps"].size() == 1);
  CHECK(j["steps"][0]["rule"] == 3);
}

TEST_CASE("fuel bound") {
  CHECK(fuel_bound(0) == 64);
  CHECK(fuel_bound(3) == 64 * 64);
}
