#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toroidal/forms.hpp"
#include "toroidal/invariants.hpp"
#include "toroidal/transform.hpp"

namespace toroidal {

/// Branches of the global target divisor E' through q, in the common
/// regular parameters (u, v) at q.
struct BaseBranches {
  bool u = false;  // {u = 0}
  bool v = false;  // {v = 0}

  int count() const noexcept { return int(u) + int(v); }
  BaseBranches merged(const BaseBranches& o) const noexcept { return {u || o.u, v || o.v}; }
  friend bool operator==(const BaseBranches&, const BaseBranches&) = default;
};

/// How many branches of E_i pass through q, read off the form family of a presentation.
/// F1..F3: {u = 0}; F4, F5: {uv = 0}; F6..F8: q is not on E_i.
BaseBranches chart_divisor_branches(FormTag form);

enum class Phase { NotInE, BigOmega, SmallOmega };
std::string_view to_string(Phase phase);

struct InvariantSnapshot {
  Exponent bigomega_max = 0;
  Exponent omega_max = 0;

  friend bool operator==(const InvariantSnapshot&, const InvariantSnapshot&) = default;
};

struct DescendantRecord {
  PresentationId id = 0;
  PresentationId parent = 0;
  ChartLabel label = ChartLabel::ChartA_alpha0;
  MonomialPresentation presentation;
  bool principal = false;
  std::optional<std::size_t> exceptional_slot;
};

struct TraceStep {
  std::size_t index = 0;
  std::size_t chart = 1;
  Phase phase = Phase::NotInE;
  PresentationId target = 0;
  Center center;
  Exponent target_value = 0;
  /// Chart-level maxima before and after the step.
  InvariantSnapshot before;
  InvariantSnapshot after;
  /// Every presentation transformed by this step (the target and its matches).
  std::vector<PresentationId> parents;
  std::vector<DescendantRecord> descendants;
};

struct Trace {
  std::vector<TraceStep> steps;
  LocusReport terminal_report;
};

/// Symbolic state of one principalization run over a base point q.
struct Scenario {
  std::size_t n = 2;
  std::size_t m_charts = 1;
  std::vector<bool> q_in_E;
  /// Branches of E' at q (declared ones merged with those implied by the charts).
  BaseBranches e_branches;
  /// Active worklist: presentations that are not yet principal, ordered by id.
  std::vector<ScenarioEntry> presentations;
  /// Principal presentations; never transformed again.
  std::vector<ScenarioEntry> leaves;
  PresentationId next_id = 1;
  Trace history;

  ChartContext context(std::size_t chart) const;
};

/// Validates and splits the presentations into the worklist and the leaves.
/// Ids are assigned 1, 2, ... in input order unless `ids` is given.
Scenario make_scenario(std::size_t n, std::size_t m_charts, std::vector<bool> q_in_E,
                       BaseBranches declared_branches,
                       const std::vector<MonomialPresentation>& presentations,
                       const std::vector<PresentationId>& ids = {});

}  // namespace toroidal
