#include "toroidal/principalize.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "toroidal/error.hpp"

namespace toroidal {

namespace {

using Column = std::pair<Exponent, Exponent>;

std::vector<Column> columns_of(const MonomialPresentation& p) {
  std::vector<Column> cols;
  for (std::size_t i = 0; i < p.columns(); ++i) cols.emplace_back(p.u_row()[i], p.v_row()[i]);
  return cols;
}

// Column index in `q` holding the same data as column `idx` of `p`, avoiding `taken`.
std::size_t matching_column(const std::vector<Column>& p_cols, std::size_t idx,
                            const std::vector<Column>& q_cols, std::size_t taken) {
  for (std::size_t j = 0; j < q_cols.size(); ++j) {
    if (j + 1 != taken && q_cols[j] == p_cols[idx]) return j + 1;
  }
  throw Error("internal: matched presentations disagree on a center column");
}

Center map_center(const MonomialPresentation& from, const Center& c, const MonomialPresentation& to) {
  if (from.form() == FormTag::F6) return c;
  const auto fc = columns_of(from);
  const auto tc = columns_of(to);
  if (c.kind == CenterKind::VarFree) return Center::var_free(matching_column(fc, c.i - 1, tc, 0));
  const std::size_t i = matching_column(fc, c.i - 1, tc, 0);
  const std::size_t j = matching_column(fc, c.j - 1, tc, i);
  return Center::var_var(i, j);
}

InvariantSnapshot snapshot(const LocusReport& report, std::size_t chart) {
  auto it = report.per_chart.find(chart);
  if (it == report.per_chart.end()) return {};
  return {it->second.bigomega_max, it->second.omega_max};
}

}  // namespace

std::string canonical_key(const MonomialPresentation& p) {
  std::ostringstream os;
  os << to_string(p.form()) << '|' << p.context().chart_index << '|';
  switch (p.form()) {
    case FormTag::F1:
    case FormTag::F3:
    case FormTag::F5: {
      auto cols = columns_of(p);
      std::sort(cols.begin(), cols.end());
      for (const auto& [a, b] : cols) os << a << ':' << b << ';';
      break;
    }
    case FormTag::F2: {
      auto cols = columns_of(p);
      std::sort(cols.begin(), cols.end() - 1);
      for (const auto& [a, b] : cols) os << a << ':' << b << ';';
      break;
    }
    case FormTag::F4: {
      std::vector<Exponent> g = p.g_row().entries();
      std::sort(g.begin(), g.end());
      for (const auto& e : g) os << e << ';';
      os << "m" << p.m() << "t" << p.t();
      break;
    }
    case FormTag::F7:
      os << (p.alpha_nonzero() ? "alpha" : "zero");
      break;
    default:
      break;
  }
  return os.str();
}

void apply_step(Scenario& s) {
  const LocusReport report = locus_report(s);
  if (report.empty()) throw NoCenterError("the non-principal locus is already empty");

  std::size_t chart = 0;
  for (const auto& [idx, maxima] : report.per_chart) {
    if (maxima.center_count > 0) {
      chart = idx;
      break;
    }
  }

  Phase phase = Phase::NotInE;
  const LocatedCenter* target = nullptr;
  if (!s.q_in_E[chart - 1]) {
    for (const auto& lc : report.centers) {
      if (lc.chart == chart) {
        target = &lc;
        break;
      }
    }
  } else {
    const ChartMaxima& maxima = report.per_chart.at(chart);
    const bool omega_phase = maxima.bigomega_max == 0;
    phase = omega_phase ? Phase::SmallOmega : Phase::BigOmega;
    const InvariantKind kind = omega_phase ? InvariantKind::SmallOmega : InvariantKind::BigOmega;
    const Exponent& best = omega_phase ? maxima.omega_max : maxima.bigomega_max;
    for (const auto& lc : report.centers) {
      if (lc.chart == chart && lc.kind == kind && lc.value == best) {
        target = &lc;
        break;
      }
    }
  }
  if (target == nullptr) throw Error("internal: no center selected in chart " + std::to_string(chart));

  auto target_it = std::find_if(s.presentations.begin(), s.presentations.end(),
                                [&](const ScenarioEntry& e) { return e.id == target->id; });
  const MonomialPresentation target_p = target_it->presentation;
  const std::string key = canonical_key(target_p);

  TraceStep record;
  record.index = s.history.steps.size() + 1;
  record.chart = chart;
  record.phase = phase;
  record.target = target->id;
  record.center = target->center;
  record.target_value = target->value;
  record.before = snapshot(report, chart);

  std::vector<ScenarioEntry> kept;
  std::vector<ScenarioEntry> spawned;
  for (auto& entry : s.presentations) {
    if (canonical_key(entry.presentation) != key) {
      kept.push_back(std::move(entry));
      continue;
    }
    const Center c = map_center(target_p, target->center, entry.presentation);
    record.parents.push_back(entry.id);
    for (auto& d : blowup(entry.presentation, c).descendants) {
      DescendantRecord dr{s.next_id++, entry.id, d.label, d.presentation,
                          is_principal(d.presentation), d.exceptional_slot};
      (dr.principal ? s.leaves : spawned).push_back(ScenarioEntry{dr.id, d.presentation});
      record.descendants.push_back(std::move(dr));
    }
  }
  kept.insert(kept.end(), std::make_move_iterator(spawned.begin()),
              std::make_move_iterator(spawned.end()));
  s.presentations = std::move(kept);

  LocusReport after = locus_report(s);
  record.after = snapshot(after, chart);
  s.history.steps.push_back(std::move(record));
  s.history.terminal_report = std::move(after);
}

Scenario step(const Scenario& s) {
  Scenario next = s;
  apply_step(next);
  return next;
}

RunResult run(const Scenario& s, std::size_t max_steps) {
  if (max_steps == 0) throw DomainError("max_steps must be positive");
  Scenario current = s;
  std::size_t taken = 0;
  while (!locus_report(current).empty()) {
    if (taken == max_steps) {
      throw StepBudgetExceeded("non-principal locus still present after " +
                               std::to_string(max_steps) + " steps");
    }
    apply_step(current);
    ++taken;
  }
  current.history.terminal_report = locus_report(current);
  Trace trace = current.history;
  return {std::move(current), std::move(trace)};
}

std::size_t default_step_budget(const Scenario& s) {
  const LocusReport report = locus_report(s);
  const Exponent count = s.presentations.size() + s.leaves.size() + 1;
  const Exponent budget = Exponent(16) * (report.omega_max + report.bigomega_max + 1) * count;
  return budget > kBudgetCap ? kBudgetCap : budget.convert_to<std::size_t>();
}

}  // namespace toroidal
