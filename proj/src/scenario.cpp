#include "toroidal/scenario.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "toroidal/error.hpp"

namespace toroidal {

BaseBranches chart_divisor_branches(FormTag form) {
  switch (form) {
    case FormTag::F1:
    case FormTag::F2:
    case FormTag::F3:
      return {true, false};
    case FormTag::F4:
    case FormTag::F5:
      return {true, true};
    default:
      return {};
  }
}

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::NotInE:
      return "not_in_E";
    case Phase::BigOmega:
      return "big_omega";
    case Phase::SmallOmega:
      return "small_omega";
  }
  return "?";
}

ChartContext Scenario::context(std::size_t chart) const {
  if (chart == 0 || chart > m_charts) {
    throw ValidationError("chart index " + std::to_string(chart) + " outside 1.." +
                          std::to_string(m_charts));
  }
  return {chart, q_in_E[chart - 1]};
}

Scenario make_scenario(std::size_t n, std::size_t m_charts, std::vector<bool> q_in_E,
                       BaseBranches declared_branches,
                       const std::vector<MonomialPresentation>& presentations,
                       const std::vector<PresentationId>& ids) {
  if (m_charts == 0) throw ValidationError("m_charts must be at least 1", "m_charts");
  if (q_in_E.size() != m_charts) {
    throw ValidationError("expected one entry per chart", "q_in_E");
  }
  if (n < 2) throw ValidationError("n must be at least 2", "n");
  if (!ids.empty() && ids.size() != presentations.size()) {
    throw ValidationError("one id per presentation required", "presentations");
  }

  Scenario s;
  s.n = n;
  s.m_charts = m_charts;
  s.q_in_E = std::move(q_in_E);
  s.e_branches = declared_branches;

  // The branch structure of E_i at q is a property of the chart.
  std::vector<std::optional<BaseBranches>> family(m_charts);
  std::set<PresentationId> seen;
  for (std::size_t idx = 0; idx < presentations.size(); ++idx) {
    const auto& p = presentations[idx];
    const std::string field = "presentations[" + std::to_string(idx) + "]";
    const std::size_t chart = p.context().chart_index;
    if (chart == 0 || chart > m_charts) {
      throw ValidationError("chart index outside 1..m_charts", field + ".chart");
    }
    if (p.context().q_in_E != s.q_in_E[chart - 1]) {
      throw ValidationError(std::string(to_string(p.form())) + " does not fit chart " +
                                std::to_string(chart) + " (q_in_E mismatch)",
                            field + ".form");
    }
    if (p.n() != n) throw ValidationError("presentation dimension differs from n", field);
    const BaseBranches b = chart_divisor_branches(p.form());
    if (family[chart - 1] && *family[chart - 1] != b) {
      throw ValidationError("chart " + std::to_string(chart) +
                                " mixes 1-point and 2-point forms of E_i at q",
                            field + ".form");
    }
    family[chart - 1] = b;
    s.e_branches = s.e_branches.merged(b);

    const PresentationId id = ids.empty() ? PresentationId(idx + 1) : ids[idx];
    if (!seen.insert(id).second) throw ValidationError("duplicate presentation id", field + ".id");
    ScenarioEntry entry{id, p};
    (is_principal(p) ? s.leaves : s.presentations).push_back(std::move(entry));
  }
  s.next_id = seen.empty() ? 1 : *seen.rbegin() + 1;
  auto by_id = [](const ScenarioEntry& x, const ScenarioEntry& y) { return x.id < y.id; };
  std::sort(s.presentations.begin(), s.presentations.end(), by_id);
  std::sort(s.leaves.begin(), s.leaves.end(), by_id);
  s.history.terminal_report = locus_report(s);
  return s;
}

}  // namespace toroidal
