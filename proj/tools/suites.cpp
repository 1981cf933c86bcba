#include "suites.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kauffman/diagrams.hpp"
#include "kauffman/errors.hpp"
#include "kauffman/idempotents.hpp"
#include "kauffman/rewrite.hpp"

namespace kauffman::cli {

  namespace {

    SuiteOutcome skipped(std::string name, std::string why) {
      return {std::move(name), SuiteStatus::skip, std::move(why), {}};
    }

    SuiteOutcome confluence(SuiteOptions const& opt) {
      auto r = fuzz_confluence(opt.n, opt.trials, opt.max_len, opt.seed);
      SuiteOutcome o{"confluence", SuiteStatus::pass, {}, {}};
      if (!r.divergences.empty() || r.chi_violations != 0) {
        o.status = SuiteStatus::fail;
      }
      std::ostringstream d;
      d << r.trials << " words, " << r.divergences.size() << " divergences, "
        << r.chi_violations << " chi violations, max steps "
        << r.max_steps_leftmost;
      o.detail = d.str();
      o.data   = {{"trials", r.trials},
                  {"divergences", r.divergences.size()},
                  {"chi_violations", r.chi_violations},
                  {"max_steps_leftmost", r.max_steps_leftmost},
                  {"max_steps_random", r.max_steps_random},
                  {"total_steps", r.total_steps}};
      if (!r.divergences.empty()) {
        o.data["first_divergence"] = render(r.divergences.front());
      }
      return o;
    }

    bool is_even_scalar(Jnf const& j) {
      return j.blocks.empty() && j.ell >= 2 && j.ell % 2 == 0;
    }

    SuiteOutcome membership(SuiteOptions const& opt) {
      if (opt.n > opt.max_membership_degree) {
        return skipped("membership", "n above membership budget "
                                         + std::to_string(opt.max_membership_degree));
      }
      auto const  closure = closure_bfs(opt.n, opt.max_exp);
      std::size_t checked = 0, members = 0, disagreements = 0, cert_failures = 0;
      std::vector<std::string> literal_divergences;
      for (auto const& j : enumerate_jnf(opt.n, opt.max_exp)) {
        ++checked;
        Word const w        = j.to_word();
        auto const verdict  = is_member(w);
        bool const in_closure = closure.contains(j);
        if (verdict.member != in_closure) {
          ++disagreements;
        }
        // The bare chi criterion admits every c^l with l even.
        bool const literal = verdict.chi >= 0 && verdict.chi % 2 == 0;
        if (literal != in_closure) {
          literal_divergences.push_back(render(j));
          if (!is_even_scalar(j)) {
            ++disagreements;
          }
        }
        if (verdict.member) {
          ++members;
          try {
            auto cert = decompose(w, opt.n);
            if (eval(cert.word(), opt.n) != eval(w, opt.n)) {
              ++cert_failures;
            }
          } catch (Error const&) {
            ++cert_failures;
          }
        }
      }
      SuiteOutcome o{"membership", SuiteStatus::pass, {}, {}};
      if (disagreements != 0 || cert_failures != 0) {
        o.status = SuiteStatus::fail;
      }
      std::ostringstream d;
      d << checked << " normal forms, " << members << " members, "
        << disagreements << " disagreements, " << cert_failures
        << " certificate failures; bare chi test differs only on";
      for (auto const& s : literal_divergences) {
        d << ' ' << s << ',';
      }
      std::string detail = d.str();
      detail.pop_back();
      o.detail = detail;
      o.data   = {{"normal_forms", checked},
                  {"members", members},
                  {"closure_size", closure.size()},
                  {"disagreements", disagreements},
                  {"certificate_failures", cert_failures},
                  {"literal_divergences", literal_divergences}};
      return o;
    }

    SuiteOutcome idempotents(SuiteOptions const& opt) {
      if (opt.n > opt.max_idempotent_degree) {
        return skipped("idempotents", "n above idempotent budget "
                                          + std::to_string(opt.max_idempotent_degree));
      }
      auto const  by_diagram = enumerate_idempotents(opt.n);
      auto const  by_word    = enumerate_idempotents_by_words(opt.n);
      std::size_t bad        = 0;
      for (auto const& e : by_diagram) {
        auto r = chi(e);
        bad += r.c_count != 0 || r.blue != r.red;
      }
      bool const same = std::set<Jnf>(by_diagram.begin(), by_diagram.end())
                        == std::set<Jnf>(by_word.begin(), by_word.end());
      SuiteOutcome o{"idempotents", SuiteStatus::pass, {}, {}};
      if (bad != 0 || !same) {
        o.status = SuiteStatus::fail;
      }
      o.detail = std::to_string(by_diagram.size()) + " idempotents, "
                 + std::to_string(bad) + " with c or blue != red, methods "
                 + (same ? "agree" : "disagree");
      o.data = {{"idempotents", by_diagram.size()},
                {"unbalanced", bad},
                {"methods_agree", same}};
      return o;
    }

    SuiteOutcome incomparable(SuiteOptions const& opt) {
      IncomparabilityReport r;
      try {
        r = verify_incomparable(opt.n, opt.limits);
      } catch (BudgetExceeded const& e) {
        return skipped("incomparable", e.what());
      }
      SuiteOutcome o{"incomparable", SuiteStatus::pass, {}, to_json(r)};
      bool const forcing = opt.n < 4 || r.forcing_ok();
      if (!r.ok() || !forcing) {
        o.status = SuiteStatus::fail;
      }
      o.detail = std::to_string(r.members_scanned) + " members, witnesses "
                 + std::to_string(r.witnesses_d1_below_d2) + "/"
                 + std::to_string(r.witnesses_d2_below_d1) + ", forcing "
                 + std::to_string(r.equal_to_h22) + "/"
                 + std::to_string(r.factorizations) + " equal h[2,2]";
      return o;
    }

    SuiteOutcome main2(SuiteOptions const& opt) {
      RankReport r;
      try {
        r = verify_main2(opt.n, opt.limits);
      } catch (BudgetExceeded const& e) {
        return skipped("main2", e.what());
      }
      SuiteOutcome o{"main2", r.ok() ? SuiteStatus::pass : SuiteStatus::fail, {}, to_json(r)};
      o.detail = "rank " + std::to_string(r.rank_total) + " (expected "
                 + std::to_string(r.expected_rank()) + "), idrank "
                 + std::to_string(r.idrank_total) + " (expected "
                 + std::to_string(r.expected_idrank()) + ")";
      return o;
    }

  }  // namespace

  std::string_view to_string(SuiteStatus s) noexcept {
    switch (s) {
      case SuiteStatus::pass: return "PASS";
      case SuiteStatus::fail: return "FAIL";
      case SuiteStatus::skip: return "SKIP";
    }
    return "?";
  }

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names{
        "confluence", "membership", "idempotents", "incomparable", "main2"};
    return names;
  }

  SuiteOutcome run_suite(std::string const& name, SuiteOptions const& opt) {
    if (name == "confluence") {
      return confluence(opt);
    }
    if (name == "membership") {
      return membership(opt);
    }
    if (name == "idempotents") {
      return idempotents(opt);
    }
    if (name == "incomparable") {
      return incomparable(opt);
    }
    if (name == "main2") {
      return main2(opt);
    }
    throw std::invalid_argument("unknown suite " + name);
  }

}  // namespace kauffman::cli
