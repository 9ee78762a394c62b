#pragma once

// Permissible-blowup driver. Charts are processed in index order; inside a
// chart with q not in E_i any center is blown up, otherwise the centers of
// maximal Omega are blown up until Omega vanishes, then those of maximal omega.

#include <cstddef>
#include <string>

#include "toroidal/scenario.hpp"

namespace toroidal {

/// Identity of a presentation up to permutation of its toroidal variables.
/// Presentations of one chart with equal keys lie on the same centers and are
/// transformed together.
std::string canonical_key(const MonomialPresentation& p);

/// Performs one blowup. Throws NoCenterError when the locus is already empty.
Scenario step(const Scenario& s);

/// In-place variant used by `run`.
void apply_step(Scenario& s);

struct RunResult {
  Scenario scenario;
  Trace trace;
};

/// Steps until the non-principal locus is empty. Throws StepBudgetExceeded when
/// more than `max_steps` blowups would be needed.
RunResult run(const Scenario& s, std::size_t max_steps);

/// 16 (omega_max + Omega_max + 1)(#presentations + 1), capped at kBudgetCap.
std::size_t default_step_budget(const Scenario& s);
inline constexpr std::size_t kBudgetCap = 10'000'000;

}  // namespace toroidal
