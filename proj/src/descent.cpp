#include "toroidal/descent.hpp"

#include "toroidal/error.hpp"
#include "toroidal/principalize.hpp"

namespace toroidal {

std::string_view to_string(TargetPoint point) {
  switch (point) {
    case TargetPoint::UChartOrigin:
      return "u_origin";
    case TargetPoint::VChartOrigin:
      return "v_origin";
    case TargetPoint::ExceptionalGeneric:
      return "generic";
  }
  return "?";
}

std::optional<TargetPoint> parse_target_point(std::string_view text) {
  if (text == "u_origin") return TargetPoint::UChartOrigin;
  if (text == "v_origin") return TargetPoint::VChartOrigin;
  if (text == "generic") return TargetPoint::ExceptionalGeneric;
  return std::nullopt;
}

namespace {

std::vector<Exponent> scaled(const ExponentRow& row, const Exponent& factor) {
  std::vector<Exponent> out;
  out.reserve(row.size());
  for (const auto& e : row) out.push_back(e * factor);
  return out;
}

LiftedPresentation toroidal_lift(const MonomialPresentation& p, PresentationId id,
                                 ToroidalTemplate t, TargetPoint point) {
  LiftedPresentation l;
  l.source = id;
  l.chart = p.context().chart_index;
  l.source_form = p.form();
  l.kind = LiftKind::Toroidal;
  l.local_template = std::move(t);
  l.point = point;
  const int own = chart_divisor_branches(p.form()).count();
  // Off the two origins only the exceptional curve survives from pi^{-1}(E_i).
  if (point == TargetPoint::ExceptionalGeneric) {
    l.chart_divisor_branches = 1;
  } else if (point == TargetPoint::VChartOrigin) {
    l.chart_divisor_branches = 2;
  } else {
    l.chart_divisor_branches = own == 2 ? 2 : 1;
  }
  return l;
}

LiftedPresentation smooth_lift(const MonomialPresentation& p, PresentationId id, TargetPoint point) {
  LiftedPresentation l;
  l.source = id;
  l.chart = p.context().chart_index;
  l.source_form = p.form();
  l.kind = LiftKind::Smooth;
  l.point = point;
  l.chart_divisor_branches = 0;
  return l;
}

}  // namespace

LiftedPresentation lift(const MonomialPresentation& p, PresentationId source) {
  if (!is_principal(p)) {
    throw NotPrincipalError("cannot lift non-principal " + describe(p));
  }
  const auto& a = p.u_row();
  const auto& b = p.v_row();
  switch (p.form()) {
    case FormTag::F1:
      // a = b: u = u_1, v = u_1 v_1 with u_1 = x^a, v_1 = x_{k+1}.
      return toroidal_lift(p, source, ToroidalTemplate::t1(a), TargetPoint::UChartOrigin);
    case FormTag::F2: {
      // u = u_1 v_1, v = v_1 with u_1 = x^{a-b}, v_1 = x^b.
      ExponentRow diff = difference(a, b);
      if (pair_rank(diff, b) != 2) {
        throw NoTemplateMatch("F2 leaf " + std::to_string(source) + " has rank [a-b; b] < 2");
      }
      return toroidal_lift(p, source, ToroidalTemplate::t3(std::move(diff), b),
                           TargetPoint::VChartOrigin);
    }
    case FormTag::F3: {
      // u_1 = x^{a-b} (x_{k+1} + alpha)^{-1}, v_1 = x^b (x_{k+1} + alpha).
      ExponentRow diff = difference(a, b);
      if (diff.is_zero()) {
        // u_1 is a unit: the image is a generic point of the exceptional curve,
        // where v_1 cuts E and u_1 - 1/alpha completes the parameters.
        LiftedPresentation l =
            toroidal_lift(p, source, ToroidalTemplate::t1(b), TargetPoint::ExceptionalGeneric);
        l.note = "F3 with a = b: u_1 is a unit, so the rank-deficient case is T1";
        return l;
      }
      if (pair_rank(diff, b) == 2) {
        return toroidal_lift(p, source, ToroidalTemplate::t3(std::move(diff), b),
                             TargetPoint::VChartOrigin);
      }
      PrimitiveSplit split = primitive_split(diff, b);
      return toroidal_lift(p, source, ToroidalTemplate::t2(std::move(split.g), split.m, split.t),
                           TargetPoint::VChartOrigin);
    }
    case FormTag::F4: {
      const auto& m = p.m();
      const auto& t = p.t();
      if (m < t) {
        return toroidal_lift(p, source, ToroidalTemplate::t2(p.g_row(), m, t - m),
                             TargetPoint::UChartOrigin);
      }
      if (m == t) {
        // v_1 = alpha + x_{k+1} - beta with beta = alpha: a free parameter.
        return toroidal_lift(p, source, ToroidalTemplate::t1(ExponentRow(scaled(p.g_row(), m))),
                             TargetPoint::ExceptionalGeneric);
      }
      return toroidal_lift(p, source, ToroidalTemplate::t2(p.g_row(), m - t, t),
                           TargetPoint::VChartOrigin);
    }
    case FormTag::F5: {
      LiftedPresentation l;
      if (dominated_by(a, b)) {
        l = toroidal_lift(p, source, ToroidalTemplate::t3(a, difference(b, a)),
                          TargetPoint::UChartOrigin);
      } else {
        l = toroidal_lift(p, source, ToroidalTemplate::t3(difference(a, b), b),
                          TargetPoint::VChartOrigin);
      }
      l.note = "F5 lifts to a rank-2 monomial pair; classified structurally as T3";
      return l;
    }
    case FormTag::F7:
      return smooth_lift(p, source,
                         p.alpha_nonzero() ? TargetPoint::ExceptionalGeneric : TargetPoint::UChartOrigin);
    case FormTag::F8:
      return smooth_lift(p, source, TargetPoint::VChartOrigin);
    case FormTag::F6:
      break;
  }
  throw NotPrincipalError("cannot lift " + describe(p));
}

EBranchData branch_data(const LiftedPresentation& l, const BaseBranches& e_prime) {
  int count = 1;
  if (l.point == TargetPoint::UChartOrigin && e_prime.v) ++count;
  if (l.point == TargetPoint::VChartOrigin && e_prime.u) ++count;
  return {count, l.chart_divisor_branches};
}

ToroidalTemplate classify_global(const LiftedPresentation& l, const EBranchData& e) {
  if (e.branch_count < 1 || e.branch_count > 2 || e.chart_divisor_branches > e.branch_count) {
    throw NoTemplateMatch("leaf " + std::to_string(l.source) + ": inconsistent branch data");
  }
  if (l.kind == LiftKind::Smooth) {
    // u_1 = x_1, v_1 = x_2.
    return e.branch_count == 1 ? ToroidalTemplate::t1(ExponentRow{1})
                               : ToroidalTemplate::t3(ExponentRow{1, 0}, ExponentRow{0, 1});
  }
  const ToroidalTemplate& t = *l.local_template;
  if (t.tag() == TemplateTag::T1) {
    if (e.branch_count == 1) return t;
    if (e.chart_divisor_branches == 1) {
      // The second branch of E cuts out the free variable x_{k+1}.
      std::vector<Exponent> a = t.u_row().entries();
      std::vector<Exponent> b(a.size(), Exponent(0));
      a.emplace_back(0);
      b.emplace_back(1);
      return ToroidalTemplate::t3(ExponentRow(std::move(a)), ExponentRow(std::move(b)));
    }
  } else if (e.branch_count == 2) {
    return t;
  }
  throw NoTemplateMatch("leaf " + std::to_string(l.source) + ": " + describe(t) + " with " +
                        std::to_string(e.branch_count) + " branch(es) of E");
}

MonomialPresentation template_to_presentation(const ToroidalTemplate& t, std::size_t n,
                                              std::size_t chart) {
  const ChartContext ctx{chart, true};
  switch (t.tag()) {
    case TemplateTag::T1:
      return MonomialPresentation::f1(n, t.u_row(),
                                      ExponentRow(std::vector<Exponent>(t.u_row().size(), 0)), ctx);
    case TemplateTag::T2:
      return MonomialPresentation::f4(n, t.u_row(), t.m(), t.t(), ctx);
    case TemplateTag::T3:
      return MonomialPresentation::f5(n, t.u_row(), t.v_row(), ctx);
  }
  throw DomainError("unknown template");
}

RoundResult run_round(const Scenario& s, std::size_t round, std::optional<TargetPoint> base_point,
                      std::optional<std::size_t> max_steps) {
  RoundResult result;
  result.round = round;
  result.base_point = base_point;
  result.initial = s;
  RunResult ran = run(s, max_steps.value_or(default_step_budget(s)));
  result.trace = std::move(ran.trace);
  for (const auto& entry : ran.scenario.leaves) {
    LiftedPresentation lifted = lift(entry.presentation, entry.id);
    EBranchData branches = branch_data(lifted, s.e_branches);
    ToroidalTemplate global = classify_global(lifted, branches);
    result.leaves.push_back({entry.id, entry.presentation, std::move(lifted), branches, std::move(global)});
  }
  return result;
}

Scenario next_round_scenario(const RoundResult& r, TargetPoint point) {
  if (point == TargetPoint::ExceptionalGeneric) {
    throw DomainError("only the two chart origins of the exceptional curve can be blown up");
  }
  const Scenario& prev = r.initial;
  std::vector<MonomialPresentation> presentations;
  std::vector<PresentationId> ids;
  PresentationId next_id = prev.next_id;
  for (const auto& id_step : r.trace.steps) {
    for (const auto& d : id_step.descendants) next_id = std::max(next_id, d.id + 1);
  }
  for (const auto& leaf : r.leaves) {
    if (leaf.lifted.point != point) continue;
    presentations.push_back(template_to_presentation(leaf.global, prev.n, leaf.lifted.chart));
    ids.push_back(leaf.id);
  }
  // E at the new point: the exceptional curve, plus the strict transform of one
  // branch of E' when it passes through this origin.
  LiftedPresentation probe;
  probe.point = point;
  const int branches = branch_data(probe, prev.e_branches).branch_count;
  BaseBranches declared{true, branches == 2};
  Scenario next = make_scenario(prev.n, prev.m_charts, std::vector<bool>(prev.m_charts, true),
                                declared, presentations, ids);
  next.next_id = std::max(next.next_id, next_id);
  return next;
}

std::vector<RoundResult> run_rounds(const Scenario& initial, const std::vector<TargetPoint>& y_blowups,
                                    std::optional<std::size_t> max_steps) {
  std::vector<RoundResult> rounds;
  rounds.push_back(run_round(initial, 1, std::nullopt, max_steps));
  for (TargetPoint point : y_blowups) {
    Scenario next = next_round_scenario(rounds.back(), point);
    rounds.push_back(run_round(next, rounds.size() + 1, point, max_steps));
  }
  return rounds;
}

}  // namespace toroidal
