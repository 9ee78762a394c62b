#include "toroidal/invariants.hpp"

#include "toroidal/error.hpp"
#include "toroidal/scenario.hpp"

namespace toroidal {

std::vector<Center> enumerate_centers(const MonomialPresentation& p) {
  std::vector<Center> out;
  switch (p.form()) {
    case FormTag::F1:
      for (std::size_t i = 1; i <= p.k(); ++i) {
        if (p.v_row().at(i) < p.u_row().at(i)) out.push_back(Center::var_free(i));
      }
      break;
    case FormTag::F5:
      for (std::size_t i = 1; i <= p.k(); ++i) {
        for (std::size_t j = i + 1; j <= p.k(); ++j) {
          Center c = Center::var_var(i, j);
          if (is_permissible(p, c)) out.push_back(c);
        }
      }
      break;
    case FormTag::F6:
      out.push_back(Center::var_free(1));
      break;
    default:
      break;
  }
  return out;
}

Exponent big_omega(const MonomialPresentation& p) {
  if (p.form() != FormTag::F1 || p.k() != 1) {
    throw DomainError("Omega is defined on 1-point F1 presentations, got " + describe(p));
  }
  if (p.u_row()[0] <= p.v_row()[0]) throw DomainError("Omega needs a > b, got " + describe(p));
  return p.u_row()[0] - p.v_row()[0];
}

Exponent small_omega(const MonomialPresentation& p) {
  if (p.form() != FormTag::F5 || p.k() != 2) {
    throw DomainError("omega is defined on 2-point F5 presentations, got " + describe(p));
  }
  const Center c = Center::var_var(1, 2);
  if (!is_permissible(p, c)) throw DomainError("omega is undefined at principal " + describe(p));
  return center_value(p, c);
}

InvariantKind invariant_kind(const MonomialPresentation& p) {
  switch (p.form()) {
    case FormTag::F1:
      return InvariantKind::BigOmega;
    case FormTag::F5:
      return InvariantKind::SmallOmega;
    default:
      return InvariantKind::None;
  }
}

Exponent center_value(const MonomialPresentation& p, const Center& c) {
  if (!is_permissible(p, c)) {
    throw PermissibilityError(describe(c) + " is not a center on " + describe(p));
  }
  const auto& a = p.u_row();
  const auto& b = p.v_row();
  switch (p.form()) {
    case FormTag::F1:
      return a.at(c.i) - b.at(c.i);
    case FormTag::F5: {
      // The product is positive; take absolute factors to stay non-negative.
      const Exponent di = a.at(c.i) > b.at(c.i) ? a.at(c.i) - b.at(c.i) : b.at(c.i) - a.at(c.i);
      const Exponent dj = a.at(c.j) > b.at(c.j) ? a.at(c.j) - b.at(c.j) : b.at(c.j) - a.at(c.j);
      return di * dj;
    }
    default:
      return 0;
  }
}

LocusReport locus_report(const std::vector<ScenarioEntry>& active, std::size_t m_charts) {
  LocusReport report;
  for (std::size_t chart = 1; chart <= m_charts; ++chart) report.per_chart[chart] = {};
  for (const auto& entry : active) {
    const auto& p = entry.presentation;
    const std::size_t chart = p.context().chart_index;
    auto& maxima = report.per_chart[chart];
    for (const Center& c : enumerate_centers(p)) {
      LocatedCenter lc{entry.id, chart, c, invariant_kind(p), center_value(p, c)};
      ++maxima.center_count;
      if (lc.kind == InvariantKind::BigOmega) {
        if (lc.value > maxima.bigomega_max) maxima.bigomega_max = lc.value;
        if (lc.value > report.bigomega_max) report.bigomega_max = lc.value;
      } else if (lc.kind == InvariantKind::SmallOmega) {
        if (lc.value > maxima.omega_max) maxima.omega_max = lc.value;
        if (lc.value > report.omega_max) report.omega_max = lc.value;
      }
      report.centers.push_back(std::move(lc));
    }
  }
  return report;
}

LocusReport locus_report(const Scenario& s) { return locus_report(s.presentations, s.m_charts); }

}  // namespace toroidal
