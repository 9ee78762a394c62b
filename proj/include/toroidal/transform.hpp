#pragma once

// Chart-level effect of blowing up a permissible codimension-2 center.
//
// A center x_s = x_t = 0 is covered by two charts:
//   (a)  x_t = x_s (x_t' + alpha)   -- alpha = 0 or a generic alpha != 0
//   (b)  x_s = x_t x_s'
// Only the three combinatorial types of points over the center are produced.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toroidal/forms.hpp"

namespace toroidal {

enum class CenterKind { VarVar, VarFree };

/// Local equations of a permissible center. Indices are 1-based variable numbers.
///   VarVar(i, j):  x_i = x_j = 0, i < j, both toroidal
///   VarFree(i):    x_i = x_{k+1} = 0 (F1), or x_1 = x_2 = 0 for F6 (i = 1)
struct Center {
  CenterKind kind = CenterKind::VarFree;
  std::size_t i = 1;
  std::size_t j = 0;

  static Center var_var(std::size_t i, std::size_t j);
  static Center var_free(std::size_t i);

  friend auto operator<=>(const Center&, const Center&) = default;
};

std::string describe(const Center& c);

enum class ChartLabel { ChartA_alpha0, ChartA_alphaNonzero, ChartB };
std::string_view to_string(ChartLabel label);
std::optional<ChartLabel> parse_chart_label(std::string_view text);

struct Descendant {
  ChartLabel label;
  MonomialPresentation presentation;
  /// 1-based column holding the exceptional divisor, when it is a toroidal variable.
  std::optional<std::size_t> exceptional_slot;
};

struct DescendantSet {
  std::vector<Descendant> descendants;
};

/// Whether `c` is a component of the non-principal locus through `p`.
bool is_permissible(const MonomialPresentation& p, const Center& c);

DescendantSet blowup_F1(const MonomialPresentation& p, const Center& c);
DescendantSet blowup_F5(const MonomialPresentation& p, const Center& c);
/// Same substitution as blowup_F5, restricted to presentations with k >= 3.
DescendantSet blowup_F5_3pt(const MonomialPresentation& p, const Center& c);
DescendantSet blowup_F6(const MonomialPresentation& p, const Center& c);

/// Dispatches on the form. F2, F3, F4, F7 and F8 never carry a center.
DescendantSet blowup(const MonomialPresentation& p, const Center& c);

}  // namespace toroidal
