#ifndef KAUFFMAN_REWRITE_HPP_
#define KAUFFMAN_REWRITE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kauffman/words.hpp"

namespace kauffman {

  // Rules 1..7 are the defining relations of K_n over the block alphabet,
  // oriented left to right. Every left-hand side is a pair of adjacent
  // letters, so a match is addressed by the position of its first letter.
  struct RuleMatch {
    int  rule = 0;
    Word replacement;
  };

  struct RewriteStep {
    int         rule     = 0;
    std::size_t position = 0;
    Word        before;
    Word        after;
    long        chi_before = 0;
    long        chi_after  = 0;
  };

  struct NormalizationTrace {
    Word                     input;
    std::vector<RewriteStep> steps;
    Jnf                      output;
  };

  // The rule (lowest id first) whose left-hand side is the pair (x, y).
  std::optional<RuleMatch> match_pair(Letter x, Letter y);

  // The rule applying to w[position] w[position + 1], if any.
  std::optional<RuleMatch> applicable_rule(Word const& w, std::size_t position);

  // 64 (len + 1)^3.
  std::size_t fuel_bound(std::size_t len) noexcept;

  // Leftmost-first normalization with a full step log. Throws FuelExhausted.
  NormalizationTrace normalize(Word const& w);

  // Same result as normalize(w).output, without recording steps.
  Jnf normal_form(Word const& w);

  // Applies a uniformly chosen applicable position at every step.
  NormalizationTrace normalize_random(Word const& w, std::mt19937_64& rng);

  // Replays the steps of a trace from its input; true iff every step's
  // recorded snippet matches and the final word is the recorded output.
  bool replay(NormalizationTrace const& t);

  bool equal_in_kn(Word const& u, Word const& v);

  struct ConfluenceReport {
    std::size_t       trials = 0;
    std::vector<Word> divergences;
    std::size_t       max_steps_leftmost = 0;
    std::size_t       max_steps_random   = 0;
    std::size_t       total_steps        = 0;
    // Steps with chi_after - chi_before outside {0, 2}.
    std::size_t chi_violations = 0;
  };

  // Each trial draws a word of length <= max_len over {c, h_1, ..., h_{n-1}}
  // and normalizes it with both strategies. Trial t uses its own generator
  // seeded from (seed, t).
  ConfluenceReport fuzz_confluence(degree_type   n,
                                   std::size_t   trials,
                                   std::size_t   max_len,
                                   std::uint64_t seed);

  // Every word of length <= max_len over {c, h_1, ..., h_{n-1}}.
  ConfluenceReport confluence_exhaustive(degree_type   n,
                                         std::size_t   max_len,
                                         std::uint64_t seed);

  // Adds the outcome of one input to a report.
  void accumulate(ConfluenceReport&         report,
                  Word const&               input,
                  NormalizationTrace const& leftmost,
                  NormalizationTrace const& random);

  bool chi_step_ok(RewriteStep const& s) noexcept;

  // One line per step:
  //   rule=<id> pos=<p> <before> => <after> chi:<x>-><y>
  std::string trace_text(NormalizationTrace const& t);

  nlohmann::json to_json(NormalizationTrace const& t);

}  // namespace kauffman

#endif  // KAUFFMAN_REWRITE_HPP_
