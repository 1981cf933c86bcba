#include "cli.hpp"

#include <CLI11.hpp>

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kauffman/diagrams.hpp"
#include "kauffman/errors.hpp"
#include "kauffman/idempotents.hpp"
#include "kauffman/rewrite.hpp"
#include "kauffman/structure.hpp"
#include "kauffman/words.hpp"
#include "suites.hpp"

namespace kauffman::cli {

  namespace {

    using json = nlohmann::json;

    struct Globals {
      degree_type   n    = 0;
      bool          json = false;
      std::uint64_t seed = 1;
    };

    // What a command produced: text lines or a JSON document, plus notes
    // that go to the diagnostic stream in text mode.
    struct Output {
      int                      code = exit_ok;
      std::vector<std::string> lines;
      json                     doc = json::object();
      std::vector<std::string> diagnostics;
    };

    json schema(std::string_view command) {
      return {{"schema", "kauffman." + std::string(command) + ".v1"}};
    }

    json chi_json(ChiReport const& r) {
      return {{"c", r.c_count}, {"blue", r.blue}, {"red", r.red}, {"chi", r.chi}};
    }

    std::string chi_text(ChiReport const& r) {
      return "c=" + std::to_string(r.c_count) + " blue=" + std::to_string(r.blue)
             + " red=" + std::to_string(r.red) + " chi=" + std::to_string(r.chi);
    }

    Output cmd_normalize(Globals const& g, std::string const& text, bool trace) {
      Output o;
      auto   t    = normalize(parse(text, g.n));
      o.doc       = schema("normalize");
      o.doc["normal_form"] = render(t.output);
      if (trace) {
        o.doc["trace"] = to_json(t);
        std::string log = trace_text(t);
        std::size_t start = 0;
        while (start < log.size()) {
          auto end = log.find('\n', start);
          if (end == std::string::npos) {
            end = log.size();
          }
          o.lines.push_back(log.substr(start, end - start));
          start = end + 1;
        }
      }
      o.lines.push_back(render(t.output));
      return o;
    }

    Output cmd_mul(Globals const& g, std::string const& a, std::string const& b) {
      Word u = parse(a, g.n);
      Word v = parse(b, g.n);
      u.insert(u.end(), v.begin(), v.end());
      Jnf const      nf = normal_form(u);
      KElement const x  = eval(u, g.n);
      Output         o;
      o.doc                = schema("mul");
      o.doc["normal_form"] = render(nf);
      o.doc["element"]     = to_json(x);
      o.lines              = {render(nf), to_json(x).dump()};
      return o;
    }

    Output cmd_eval(Globals const& g, std::string const& text) {
      KElement const x = eval(parse(text, g.n), g.n);
      Output         o;
      o.doc            = schema("eval");
      o.doc["element"] = to_json(x);
      o.lines          = {to_json(x).dump()};
      return o;
    }

    Output cmd_chi(Globals const& g, std::string const& text) {
      Word const w = parse(text, g.n);
      Output     o;
      o.doc               = schema("chi");
      o.doc["word"]       = chi_json(chi(w));
      o.doc["normal_form"] = chi_json(chi(normal_form(w)));
      o.lines = {"word: " + chi_text(chi(w)),
                 "normal form: " + chi_text(chi(normal_form(w)))};
      return o;
    }

    std::string pure_scalar_note() {
      return "c^l with l even satisfies the chi condition, but no product of "
             "idempotents equals a pure power of c: every non-empty product has "
             "a non-identity diagram";
    }

    Output cmd_member(Globals const& g, std::string const& text, bool want_cert) {
      Word const w = parse(text, g.n);
      auto const v = is_member(w);
      Output     o;
      o.doc                = schema("member");
      o.doc["member"]      = v.member;
      o.doc["reason"]      = to_string(v.reason);
      o.doc["chi"]         = chi_json(v.report);
      o.doc["normal_form"] = render(v.normal_form);
      std::string verdict  = v.member ? "yes" : "no";
      if (!v.member) {
        verdict += v.reason == MembershipReason::chi_odd        ? " (chi odd)"
                   : v.reason == MembershipReason::chi_negative ? " (chi negative)"
                                                                : " (pure scalar)";
      }
      o.lines = {verdict, "normal form: " + render(v.normal_form),
                 "chi: " + chi_text(v.report)};
      if (v.reason == MembershipReason::pure_scalar) {
        o.diagnostics.push_back(pure_scalar_note());
      }
      if (want_cert && v.member) {
        auto cert              = decompose(w, g.n);
        o.doc["certificate"]   = render(cert);
        o.lines.push_back("certificate: " + render(cert));
      }
      o.doc["diagnostics"] = o.diagnostics;
      return o;
    }

    Output cmd_decompose(Globals const& g, std::string const& text) {
      auto   cert = decompose(parse(text, g.n), g.n);
      Output o;
      o.doc = schema("decompose");
      json gens = json::array();
      for (auto const& x : cert.generators) {
        gens.push_back(x.render());
      }
      o.doc["certificate"] = render(cert);
      o.doc["generators"]  = gens;
      o.lines              = {render(cert)};
      return o;
    }

    Output cmd_idempotents(Globals const& g) {
      Output o;
      o.doc      = schema("idempotents");
      json items = json::array();
      for (auto const& e : enumerate_idempotents(g.n)) {
        o.lines.push_back(render_compact(e));
        items.push_back(render(e));
      }
      o.doc["count"]       = items.size();
      o.doc["idempotents"] = items;
      return o;
    }

    Output cmd_eggbox(Globals const& g) {
      Output o;
      o.doc = schema("eggbox");
      for (DClass which : {DClass::d1, DClass::d2}) {
        auto view = eggbox(which, g.n);
        o.doc[std::string(to_string(which))] = to_json(view);
        std::string text = render(view);
        std::size_t start = 0;
        while (start < text.size()) {
          auto end = text.find('\n', start);
          if (end == std::string::npos) {
            end = text.size();
          }
          o.lines.push_back(text.substr(start, end - start));
          start = end + 1;
        }
        if (which == DClass::d1) {
          o.lines.emplace_back();
        }
      }
      return o;
    }

    Output cmd_verify(Globals const& g, std::vector<std::string> suites, SuiteOptions opt) {
      opt.n    = g.n;
      opt.seed = g.seed;
      if (suites.empty()) {
        suites = suite_names();
      }
      Output o;
      o.doc             = schema("verify");
      o.doc["n"]        = g.n;
      o.doc["seed"]     = g.seed;
      json results      = json::array();
      std::size_t width = 0;
      for (auto const& s : suites) {
        width = std::max(width, s.size());
      }
      for (auto const& s : suites) {
        auto r = run_suite(s, opt);
        if (r.status == SuiteStatus::fail) {
          o.code = exit_verification;
        }
        results.push_back({{"suite", r.name},
                           {"status", to_string(r.status)},
                           {"detail", r.detail},
                           {"data", r.data}});
        o.lines.push_back(r.name + std::string(width - r.name.size() + 2, ' ')
                          + std::string(to_string(r.status)) + "  " + r.detail);
      }
      o.doc["suites"] = results;
      o.doc["ok"]     = o.code == exit_ok;
      return o;
    }

    int emit(Output const& o, Globals const& g, std::ostream& out, std::ostream& err) {
      if (g.json) {
        out << o.doc.dump(2) << '\n';
      } else {
        for (auto const& line : o.lines) {
          out << line << '\n';
        }
        for (auto const& d : o.diagnostics) {
          err << "note: " << d << '\n';
        }
      }
      return o.code;
    }

    int fail(std::ostream& err, Globals const& g, std::ostream& out,
             std::string_view kind, std::string const& what, int code) {
      if (g.json) {
        json doc = schema("error");
        doc["error"]   = kind;
        doc["message"] = what;
        out << doc.dump(2) << '\n';
      }
      err << "error: " << what << '\n';
      return code;
    }

  }  // namespace

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computations in the Kauffman monoid K_n", "kauffman"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--n", g.n, "Degree of the monoid (>= 3)")
        ->required()
        ->check(CLI::Range(degree_type(3), degree_type(127)));
    app.add_flag("--json", g.json, "Machine readable output");
    app.add_option("--seed", g.seed, "Seed for randomized checks");

    std::string word, word2;
    bool        trace = false, certificate = false;

    auto* normalize_cmd = app.add_subcommand("normalize", "Jones normal form of a word");
    normalize_cmd->add_option("word", word, "Word")->required();
    normalize_cmd->add_flag("--trace", trace, "Print every rewrite step");

    auto* mul_cmd = app.add_subcommand("mul", "Product of two words");
    mul_cmd->add_option("left", word, "Left factor")->required();
    mul_cmd->add_option("right", word2, "Right factor")->required();

    auto* eval_cmd = app.add_subcommand("eval", "Diagram of a word");
    eval_cmd->add_option("word", word, "Word")->required();

    auto* chi_cmd = app.add_subcommand("chi", "Color counts and chi of a word");
    chi_cmd->add_option("word", word, "Word")->required();

    auto* member_cmd = app.add_subcommand("member", "Membership in the idempotent generated part");
    member_cmd->add_option("word", word, "Word")->required();
    member_cmd->add_flag("--certificate", certificate, "Print a factorization into idempotents");

    auto* decompose_cmd = app.add_subcommand("decompose", "Factorization into idempotents");
    decompose_cmd->add_option("word", word, "Word")->required();

    auto* idempotents_cmd = app.add_subcommand("idempotents", "List every idempotent");
    auto* eggbox_cmd      = app.add_subcommand("eggbox", "Eggbox pictures of D1 and D2");

    std::vector<std::string> suites;
    SuiteOptions             opt;
    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    verify_cmd->add_option("--suite", suites, "Suites to run (default all)")
        ->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--trials", opt.trials, "Random words in the confluence suite");
    verify_cmd->add_option("--max-len", opt.max_len, "Longest random word");
    verify_cmd->add_option("--max-exp", opt.max_exp, "Exponent bound in the membership suite");

    for (auto* sub : app.get_subcommands({})) {
      sub->fallthrough();
    }

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_usage;
    }

    try {
      Output o;
      if (normalize_cmd->parsed()) {
        o = cmd_normalize(g, word, trace);
      } else if (mul_cmd->parsed()) {
        o = cmd_mul(g, word, word2);
      } else if (eval_cmd->parsed()) {
        o = cmd_eval(g, word);
      } else if (chi_cmd->parsed()) {
        o = cmd_chi(g, word);
      } else if (member_cmd->parsed()) {
        o = cmd_member(g, word, certificate);
      } else if (decompose_cmd->parsed()) {
        o = cmd_decompose(g, word);
      } else if (idempotents_cmd->parsed()) {
        o = cmd_idempotents(g);
      } else if (eggbox_cmd->parsed()) {
        o = cmd_eggbox(g);
      } else if (verify_cmd->parsed()) {
        o = cmd_verify(g, suites, opt);
      }
      return emit(o, g, out, err);
    } catch (ParseError const& e) {
      return fail(err, g, out, "parse", e.what(), exit_usage);
    } catch (ShapeError const& e) {
      return fail(err, g, out, "shape", e.what(), exit_usage);
    } catch (DiagramError const& e) {
      return fail(err, g, out, "diagram", e.what(), exit_usage);
    } catch (NotAMember const& e) {
      return fail(err, g, out, "not_a_member", e.what(), exit_verification);
    } catch (VerificationFailed const& e) {
      return fail(err, g, out, "verification", e.what(), exit_verification);
    } catch (FuelExhausted const& e) {
      return fail(err, g, out, "fuel", e.what(), exit_guard);
    } catch (BudgetExceeded const& e) {
      return fail(err, g, out, "budget", e.what(), exit_guard);
    }
  }

}  // namespace kauffman::cli
