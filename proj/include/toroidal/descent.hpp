#pragma once

// Lifting a principalized morphism through the blowup Y_1 -> Y of the base
// point q, and classifying the lifted local forms against the global divisor.
//
// Charts on Y_1 over q:
//   U-chart  u = u_1,       v = u_1 v_1   (origin: strict transform of {v = 0})
//   V-chart  u = u_1 v_1,   v = v_1       (origin: strict transform of {u = 0})
// The exceptional curve is always a component of the target divisor E.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toroidal/forms.hpp"
#include "toroidal/scenario.hpp"

namespace toroidal {

enum class TargetPoint { UChartOrigin, VChartOrigin, ExceptionalGeneric };
std::string_view to_string(TargetPoint point);
std::optional<TargetPoint> parse_target_point(std::string_view text);

enum class LiftKind { Toroidal, Smooth };

struct LiftedPresentation {
  PresentationId source = 0;
  std::size_t chart = 1;
  FormTag source_form = FormTag::F1;
  LiftKind kind = LiftKind::Toroidal;
  /// Form with respect to pi^{-1}(E_i); empty for smooth points.
  std::optional<ToroidalTemplate> local_template;
  TargetPoint point = TargetPoint::ExceptionalGeneric;
  /// Branches of pi^{-1}(E_i) through the image point.
  int chart_divisor_branches = 0;
  std::string note;
};

/// Rewrites a principal presentation in regular parameters (u_1, v_1) at its image.
/// Throws NotPrincipalError before principalization has finished.
LiftedPresentation lift(const MonomialPresentation& p, PresentationId source = 0);

/// Branch count of E = pi^{-1}(E') at the image point.
EBranchData branch_data(const LiftedPresentation& l, const BaseBranches& e_prime);

/// Form with respect to the global divisor E. A 1-branch form at a point where E
/// has a second branch gains that branch as a new toroidal variable.
ToroidalTemplate classify_global(const LiftedPresentation& l, const EBranchData& e);

/// Inverse of `match_template`: the presentation a template gives at the next base point.
MonomialPresentation template_to_presentation(const ToroidalTemplate& t, std::size_t n,
                                              std::size_t chart);

struct ClassifiedLeaf {
  PresentationId id = 0;
  MonomialPresentation presentation;
  LiftedPresentation lifted;
  EBranchData branches;
  ToroidalTemplate global;
};

struct RoundResult {
  std::size_t round = 1;
  /// Point of the previous exceptional curve blown up in this round; empty for q.
  std::optional<TargetPoint> base_point;
  Scenario initial;
  Trace trace;
  std::vector<ClassifiedLeaf> leaves;
};

/// Principalizes, then lifts and classifies every leaf.
RoundResult run_round(const Scenario& s, std::size_t round, std::optional<TargetPoint> base_point,
                      std::optional<std::size_t> max_steps);

/// Initial data over `point` of the exceptional curve produced by `r`.
Scenario next_round_scenario(const RoundResult& r, TargetPoint point);

/// Round 1 at q, then one round per entry of `y_blowups`.
std::vector<RoundResult> run_rounds(const Scenario& initial, const std::vector<TargetPoint>& y_blowups,
                                    std::optional<std::size_t> max_steps);

}  // namespace toroidal
