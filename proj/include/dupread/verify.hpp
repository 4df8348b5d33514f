// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dupread {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Named verification suites exposed by the CLI. Each suite bundles the
/// exhaustive and randomized checks for one structural fact of the channel
/// or of the code constructions.
const std::vector<std::string>& suite_names();

/// Runs a named suite; throws std::invalid_argument for unknown names.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   std::uint64_t seed);

// Individual checks (also used by the acceptance harness).
CheckResult check_zero_run_invariance(std::uint64_t seed, int cases);   // lemma2
CheckResult check_common_descendants();                                // lemma3
CheckResult check_periodic_window_criterion();                         // lemma4
CheckResult check_fine_monotonicity();                                 // lemma6
CheckResult check_context_bounds();                                    // lemma7
CheckResult check_del_rem_commutation(std::uint64_t seed, int cases);  // eq-commute
CheckResult check_depth_zero_sets();                                   // thm7
CheckResult check_reference_rate_table();                              // table2
CheckResult check_decoder_exhaustive();                                // decoder
CheckResult check_decoder_randomized(std::uint64_t seed, int trials);  // decoder
CheckResult check_lambda_grid();
CheckResult check_envelope_grid();
CheckResult check_counting_oracles();
CheckResult check_rate_convergence();
CheckResult check_inversion_negative_control();

}  // namespace dupread
