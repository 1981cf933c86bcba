#ifndef KAUFFMAN_TOOLS_SUITES_HPP_
#define KAUFFMAN_TOOLS_SUITES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kauffman/structure.hpp"
#include "kauffman/words.hpp"

namespace kauffman::cli {

  enum class SuiteStatus { pass, fail, skip };

  std::string_view to_string(SuiteStatus s) noexcept;

  struct SuiteOutcome {
    std::string    name;
    SuiteStatus    status = SuiteStatus::pass;
    std::string    detail;
    nlohmann::json data = nlohmann::json::object();
  };

  struct SuiteOptions {
    degree_type   n       = 3;
    std::uint64_t seed    = 1;
    std::size_t   trials  = 2000;
    std::size_t   max_len = 20;
    std::size_t   max_exp = 5;
    // Largest degree for the closure comparison and the idempotent scan.
    degree_type  max_membership_degree = 6;
    degree_type  max_idempotent_degree = 10;
    SearchLimits limits;
  };

  std::vector<std::string> const& suite_names();

  // Throws std::invalid_argument on an unknown name. A suite whose degree is
  // beyond its budget reports skip instead of running.
  SuiteOutcome run_suite(std::string const& name, SuiteOptions const& opt);

}  // namespace kauffman::cli

#endif  // KAUFFMAN_TOOLS_SUITES_HPP_
