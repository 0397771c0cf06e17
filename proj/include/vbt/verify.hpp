#pragma once

#include <string>
#include <vector>

#include "vbt/presentation.hpp"
#include "vbt/surface.hpp"
#include "vbt/twist_context.hpp"

namespace vbt {

enum class CheckStatus { Pass, Fail, Skipped };

const char* check_status_name(CheckStatus status); // "pass" / "fail" / "skipped"

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  // Failed equality: the two reduced image tables. Skipped: the reason.
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::string surface; // spec JSON, single line
  std::vector<CheckResult> checks;

  int count(CheckStatus status) const;
  bool all_passed() const { return count(CheckStatus::Fail) == 0; }
};

// Reduced generator images, e.g. "g1 -> g1 g2 g1' | g2 -> g1".
std::string image_table(const MappingClass& cls);

// Evaluate one relator word over named classes (eval tokens, e.g.
// "t1 x t1 x' t1' x'") and test that it reduces to the identity.
bool verify_relator(const TwistContext& ctx, const std::string& word);

// Exact digon identities around obstacle r: the corrected commutation
// B_e1 B_e2 Lq2 = B_e2 B_e1 Lq1 and the derived commutator form
// [tau_r, tau_{r-1}] = (Lq2 Lq1^-1)^(tau_r^-1 tau_{r-1}^-1).
bool verify_vortex_relation(const TwistContext& ctx, int r);

// Commutator membership hypothesis for [eps_s, eps_r] (s < r) against the
// displayed braid word with the working guess a = sigma_1, b = sigma_2.
// False means the guess is refuted, which callers report, not fail.
bool verify_lemma_tech(const TwistContext& ctx, int s, int r);

// Conjugation rules for corridor moves, every index instance.
SuiteReport verify_conjugation_formulas(const TwistContext& ctx);

// Case-by-case chain computations behind the linking-word argument.
// Handle-dependent branches are reported skipped, never failed.
SuiteReport verify_appendix(const TwistContext& ctx);

// Relator-by-relator engine evaluation of every presentation emitted for
// the spec, including the corrected forms of the quotient-only relators.
SuiteReport verify_presentation_suite(const MarkedSurfaceSpec& spec);

// Digon and point-push identity suite over all obstacles, with negative
// controls.
SuiteReport verify_vortex_suite(const MarkedSurfaceSpec& spec);

SuiteReport verify_conjugation_suite(const MarkedSurfaceSpec& spec);
SuiteReport verify_appendix_suite(const MarkedSurfaceSpec& spec);

// Dual-arc realization of the cluster braid relators of the fan
// triangulation of the once-vortexed square: every relator verifies
// exactly under t_i -> B_i^-1 except the digon pair, which verifies
// modulo the squared pocket twists.
SuiteReport verify_dual_realization();

// which: "presentation", "conjugation", "appendix", "vortex", or "all".
std::vector<SuiteReport> verify_suites(const MarkedSurfaceSpec& spec,
                                       const std::string& which);

std::string reports_to_json(const std::vector<SuiteReport>& reports);

} // namespace vbt
