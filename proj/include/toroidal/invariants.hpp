#pragma once

// The non-principal locus W_q as a finite set of centers, and the descent
// invariants attached to them:
//   Omega(Z) = a_i - b_i                   for Z = {x_i = x_{k+1} = 0} on F1
//   omega(Z) = (a_i - b_i)(b_j - a_j)      for Z = {x_i = x_j = 0} on F5
// Both are read at the generic point of Z, so only the two center columns matter.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "toroidal/forms.hpp"
#include "toroidal/transform.hpp"

namespace toroidal {

using PresentationId = std::uint64_t;

struct ScenarioEntry {
  PresentationId id = 0;
  MonomialPresentation presentation;
};

struct Scenario;

enum class InvariantKind { None, BigOmega, SmallOmega };

/// Centers through p in canonical order; empty iff p is principal.
std::vector<Center> enumerate_centers(const MonomialPresentation& p);

/// a - b for a 1-point F1 presentation u = x^a, v = x^b x_2 with a > b.
Exponent big_omega(const MonomialPresentation& p);

/// (a_1 - b_1)(b_2 - a_2) for a non-principal 2-point F5 presentation.
Exponent small_omega(const MonomialPresentation& p);

InvariantKind invariant_kind(const MonomialPresentation& p);

/// Invariant of the subvariety cut out by `c` (0 for centers off E_i).
Exponent center_value(const MonomialPresentation& p, const Center& c);

struct LocatedCenter {
  PresentationId id = 0;
  std::size_t chart = 1;
  Center center;
  InvariantKind kind = InvariantKind::None;
  Exponent value = 0;
};

struct ChartMaxima {
  Exponent bigomega_max = 0;
  Exponent omega_max = 0;
  std::size_t center_count = 0;

  friend bool operator==(const ChartMaxima&, const ChartMaxima&) = default;
};

struct LocusReport {
  std::vector<LocatedCenter> centers;
  Exponent omega_max = 0;
  Exponent bigomega_max = 0;
  std::map<std::size_t, ChartMaxima> per_chart;

  bool empty() const noexcept { return centers.empty(); }
};

LocusReport locus_report(const std::vector<ScenarioEntry>& active, std::size_t m_charts);
LocusReport locus_report(const Scenario& s);

}  // namespace toroidal
