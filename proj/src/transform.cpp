#include "toroidal/transform.hpp"

#include <sstream>

#include "toroidal/error.hpp"

namespace toroidal {

Center Center::var_var(std::size_t i, std::size_t j) {
  if (i == 0 || j == 0 || i == j) throw DomainError("VarVar needs two distinct 1-based indices");
  if (i > j) std::swap(i, j);
  return Center{CenterKind::VarVar, i, j};
}

Center Center::var_free(std::size_t i) {
  if (i == 0) throw DomainError("VarFree index is 1-based");
  return Center{CenterKind::VarFree, i, 0};
}

std::string describe(const Center& c) {
  std::ostringstream os;
  if (c.kind == CenterKind::VarVar) {
    os << "VarVar(" << c.i << ',' << c.j << ')';
  } else {
    os << "VarFree(" << c.i << ')';
  }
  return os.str();
}

std::string_view to_string(ChartLabel label) {
  switch (label) {
    case ChartLabel::ChartA_alpha0:
      return "A0";
    case ChartLabel::ChartA_alphaNonzero:
      return "A*";
    case ChartLabel::ChartB:
      return "B";
  }
  return "?";
}

std::optional<ChartLabel> parse_chart_label(std::string_view text) {
  if (text == "A0") return ChartLabel::ChartA_alpha0;
  if (text == "A*") return ChartLabel::ChartA_alphaNonzero;
  if (text == "B") return ChartLabel::ChartB;
  return std::nullopt;
}

namespace {

// (a_i - b_i)(b_j - a_j) > 0, computed without leaving the non-negative integers.
bool crosses(const Exponent& ai, const Exponent& bi, const Exponent& aj, const Exponent& bj) {
  return (ai > bi && bj > aj) || (ai < bi && bj < aj);
}

[[noreturn]] void not_permissible(const MonomialPresentation& p, const Center& c) {
  throw PermissibilityError(describe(c) + " is not a permissible center on " + describe(p));
}

std::vector<Exponent> with_entry(const ExponentRow& row, std::size_t idx, Exponent value) {
  std::vector<Exponent> out = row.entries();
  out[idx] = std::move(value);
  return out;
}

}  // namespace

bool is_permissible(const MonomialPresentation& p, const Center& c) {
  switch (p.form()) {
    case FormTag::F1:
      return c.kind == CenterKind::VarFree && c.i >= 1 && c.i <= p.k() &&
             p.v_row().at(c.i) < p.u_row().at(c.i);
    case FormTag::F5:
      return c.kind == CenterKind::VarVar && c.i >= 1 && c.i < c.j && c.j <= p.k() &&
             crosses(p.u_row().at(c.i), p.v_row().at(c.i), p.u_row().at(c.j), p.v_row().at(c.j));
    case FormTag::F6:
      return c.kind == CenterKind::VarFree && c.i == 1;
    default:
      return false;
  }
}

DescendantSet blowup_F1(const MonomialPresentation& p, const Center& c) {
  if (p.form() != FormTag::F1 || !is_permissible(p, c)) not_permissible(p, c);
  const std::size_t n = p.n();
  const std::size_t k = p.k();
  const std::size_t idx = c.i - 1;
  const auto& a = p.u_row();
  const auto& b = p.v_row();
  const ChartContext ctx = p.context();

  // Chart (a): x_{k+1} = x_i (x' + alpha), so v picks up one more factor of x_i.
  ExponentRow b_raised(with_entry(b, idx, b[idx] + 1));

  // Chart (b): x_i = x_i' x_{k+1}; x_{k+1} becomes the exceptional divisor variable
  // with exponents a_i in u and b_i + 1 in v.
  std::vector<Exponent> u_b = a.entries();
  u_b.push_back(a[idx]);
  std::vector<Exponent> v_b = b.entries();
  v_b.push_back(b[idx] + 1);

  DescendantSet out;
  out.descendants.push_back({ChartLabel::ChartA_alpha0,
                             MonomialPresentation::f1(n, a, b_raised, ctx), c.i});
  out.descendants.push_back({ChartLabel::ChartA_alphaNonzero,
                             MonomialPresentation::f3(n, a, b_raised, ctx), c.i});
  out.descendants.push_back({ChartLabel::ChartB,
                             MonomialPresentation::f2(n, ExponentRow(std::move(u_b)),
                                                      ExponentRow(std::move(v_b)), ctx),
                             k + 1});
  return out;
}

DescendantSet blowup_F5(const MonomialPresentation& p, const Center& c) {
  if (p.form() != FormTag::F5 || !is_permissible(p, c)) not_permissible(p, c);
  const std::size_t n = p.n();
  const std::size_t ii = c.i - 1;
  const std::size_t jj = c.j - 1;
  const auto& a = p.u_row();
  const auto& b = p.v_row();
  const ChartContext ctx = p.context();
  const Exponent sum_a = a[ii] + a[jj];
  const Exponent sum_b = b[ii] + b[jj];

  DescendantSet out;

  // Chart (a), alpha = 0: x_i = x_j x_i', column j absorbs column i.
  out.descendants.push_back(
      {ChartLabel::ChartA_alpha0,
       MonomialPresentation::f5(n, ExponentRow(with_entry(a, jj, sum_a)),
                                ExponentRow(with_entry(b, jj, sum_b)), ctx),
       c.j});

  // Chart (a), alpha != 0: x_i' + alpha is a unit, so column i disappears.
  std::vector<Exponent> ra;
  std::vector<Exponent> rb;
  std::size_t merged_slot = 0;
  for (std::size_t col = 0; col < a.size(); ++col) {
    if (col == ii) continue;
    if (col == jj) {
      ra.push_back(sum_a);
      rb.push_back(sum_b);
      merged_slot = ra.size();
    } else {
      ra.push_back(a[col]);
      rb.push_back(b[col]);
    }
  }
  ExponentRow reduced_a(std::move(ra));
  ExponentRow reduced_b(std::move(rb));
  if (pair_rank(reduced_a, reduced_b) == 2) {
    out.descendants.push_back({ChartLabel::ChartA_alphaNonzero,
                               MonomialPresentation::f5(n, reduced_a, reduced_b, ctx),
                               merged_slot});
  } else {
    PrimitiveSplit split = primitive_split(reduced_a, reduced_b);
    out.descendants.push_back(
        {ChartLabel::ChartA_alphaNonzero,
         MonomialPresentation::f4(n, std::move(split.g), std::move(split.m), std::move(split.t), ctx),
         merged_slot});
  }

  // Chart (b): x_j = x_i x_j', column i absorbs column j.
  out.descendants.push_back(
      {ChartLabel::ChartB,
       MonomialPresentation::f5(n, ExponentRow(with_entry(a, ii, sum_a)),
                                ExponentRow(with_entry(b, ii, sum_b)), ctx),
       c.i});
  return out;
}

DescendantSet blowup_F5_3pt(const MonomialPresentation& p, const Center& c) {
  if (p.form() == FormTag::F5 && p.k() < 3) {
    throw PermissibilityError("3-point blowup needs k >= 3, got " + describe(p));
  }
  return blowup_F5(p, c);
}

DescendantSet blowup_F6(const MonomialPresentation& p, const Center& c) {
  if (p.form() != FormTag::F6 || !is_permissible(p, c)) not_permissible(p, c);
  const std::size_t n = p.n();
  const ChartContext ctx = p.context();
  DescendantSet out;
  // x_2 = x_1 (x_2' + alpha): u = x_1, v = x_1 (x_2' + alpha).
  out.descendants.push_back({ChartLabel::ChartA_alpha0, MonomialPresentation::f7(n, false, ctx), 1});
  out.descendants.push_back({ChartLabel::ChartA_alphaNonzero, MonomialPresentation::f7(n, true, ctx), 1});
  // x_1 = x_1' x_2: u = x_1' x_2, v = x_2.
  out.descendants.push_back({ChartLabel::ChartB, MonomialPresentation::f8(n, ctx), 2});
  return out;
}

DescendantSet blowup(const MonomialPresentation& p, const Center& c) {
  switch (p.form()) {
    case FormTag::F1:
      return blowup_F1(p, c);
    case FormTag::F5:
      return blowup_F5(p, c);
    case FormTag::F6:
      return blowup_F6(p, c);
    default:
      not_permissible(p, c);
  }
}

}  // namespace toroidal
