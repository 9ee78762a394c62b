#pragma once

// Local monomial presentations of a locally toroidal morphism X -> Y at a
// point p over the base point q, and the toroidal target templates.
//
// Conventions: u, v are the regular parameters at q; x_1..x_n are formal
// parameters at p. The toroidal variables are x_1..x_k, and x_{k+1} is the
// free (or unit-shifted) variable where a form has one.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "toroidal/exponent.hpp"

namespace toroidal {

/// The eight local forms a point over q can take after a permissible sequence.
///   F1  u = x^a,            v = x^b x_{k+1},            b <= a
///   F2  u = x^a,            v = x^b   (k+1 divisor variables, b <= a)
///   F3  u = x^a,            v = x^b (x_{k+1} + alpha),  b <= a, alpha != 0
///   F4  u = (x^g)^m,        v = (x^g)^t (alpha + x_{k+1}), g primitive
///   F5  u = x^a,            v = x^b,  a_i + b_i > 0, rank [a; b] = 2
///   F6  u = x_1,            v = x_2
///   F7  u = x_1,            v = x_1 (x_2 + alpha)
///   F8  u = x_1 x_2,        v = x_2
/// F1..F5 occur in charts with q in E_i, F6..F8 in charts with q not in E_i.
enum class FormTag { F1 = 1, F2, F3, F4, F5, F6, F7, F8 };

std::string_view to_string(FormTag tag);
std::optional<FormTag> parse_form_tag(std::string_view text);

/// Which base chart V_i a presentation lives in, and whether q lies on E_i there.
struct ChartContext {
  std::size_t chart_index = 1;
  bool q_in_E = true;

  friend bool operator==(const ChartContext&, const ChartContext&) = default;
};

class MonomialPresentation {
 public:
  static MonomialPresentation f1(std::size_t n, ExponentRow u, ExponentRow v,
                                 ChartContext ctx = {1, true});
  /// Rows have length k+1; the last entry belongs to x_{k+1}.
  static MonomialPresentation f2(std::size_t n, ExponentRow u, ExponentRow v,
                                 ChartContext ctx = {1, true});
  static MonomialPresentation f3(std::size_t n, ExponentRow u, ExponentRow v,
                                 ChartContext ctx = {1, true});
  static MonomialPresentation f4(std::size_t n, ExponentRow g, Exponent m, Exponent t,
                                 ChartContext ctx = {1, true});
  static MonomialPresentation f5(std::size_t n, ExponentRow u, ExponentRow v,
                                 ChartContext ctx = {1, true});
  static MonomialPresentation f6(std::size_t n, ChartContext ctx = {1, false});
  static MonomialPresentation f7(std::size_t n, bool alpha_nonzero, ChartContext ctx = {1, false});
  static MonomialPresentation f8(std::size_t n, ChartContext ctx = {1, false});

  FormTag form() const noexcept { return form_; }
  std::size_t n() const noexcept { return n_; }
  /// Toroidal variable count. For F2 the rows have k+1 entries; F6..F8 report 2.
  std::size_t k() const noexcept;
  /// Number of exponent columns stored (k+1 for F2).
  std::size_t columns() const noexcept { return u_.size(); }

  const ExponentRow& u_row() const noexcept { return u_; }
  const ExponentRow& v_row() const noexcept { return v_; }
  /// F4 only: the primitive base row and the powers of u and v.
  const ExponentRow& g_row() const noexcept { return u_; }
  const Exponent& m() const noexcept { return m_; }
  const Exponent& t() const noexcept { return t_; }

  /// F1: v carries the free factor x_{k+1}.
  bool has_free_factor() const noexcept { return form_ == FormTag::F1; }
  /// F3, F4: a unit factor (x_{k+1} + alpha) with alpha != 0.
  bool has_unit_factor() const noexcept { return form_ == FormTag::F3 || form_ == FormTag::F4; }
  /// F7 only: whether the translation alpha is nonzero.
  bool alpha_nonzero() const noexcept { return alpha_nonzero_; }

  const ChartContext& context() const noexcept { return ctx_; }
  MonomialPresentation with_context(ChartContext ctx) const;

  friend bool operator==(const MonomialPresentation&, const MonomialPresentation&) = default;

  /// Placeholder value (F6 with n = 0); not a valid presentation.
  MonomialPresentation() = default;

 private:
  void validate() const;

  FormTag form_ = FormTag::F6;
  std::size_t n_ = 0;
  ExponentRow u_;
  ExponentRow v_;
  Exponent m_ = 0;
  Exponent t_ = 0;
  bool alpha_nonzero_ = false;
  ChartContext ctx_;
};

std::string describe(const MonomialPresentation& p);

/// Rank of the 2 x k matrix [u; v], decided by its 2x2 minors.
std::size_t pair_rank(const ExponentRow& u, const ExponentRow& v);

/// Splits a rank-1 pair u = m g, v = t g with g primitive. Both rows must be nonzero
/// with identical support.
struct PrimitiveSplit {
  ExponentRow g;
  Exponent m;
  Exponent t;
};
PrimitiveSplit primitive_split(const ExponentRow& u, const ExponentRow& v);

/// Number of divisor components through the point (0 for F6..F8, which lie off D_i).
std::size_t classify_point(const MonomialPresentation& p);

/// Whether (u, v) generates a principal ideal at the point.
bool is_principal(const MonomialPresentation& p);

enum class TemplateTag { T1 = 1, T2, T3 };
std::string_view to_string(TemplateTag tag);

/// Toroidal forms with respect to the divisor on the target:
///   T1  u = x^a, v = x_{k+1},                       a_i > 0
///   T2  u = (x^g)^m, v = (x^g)^t (alpha + x_{k+1}),  g primitive, m, t > 0
///   T3  u = x^a, v = x^b,                            a_i + b_i > 0, rank 2
class ToroidalTemplate {
 public:
  static ToroidalTemplate t1(ExponentRow a);
  static ToroidalTemplate t2(ExponentRow g, Exponent m, Exponent t);
  static ToroidalTemplate t3(ExponentRow a, ExponentRow b);

  TemplateTag tag() const noexcept { return tag_; }
  /// T1: a. T2: g. T3: a.
  const ExponentRow& u_row() const noexcept { return u_; }
  /// T3 only.
  const ExponentRow& v_row() const noexcept { return v_; }
  const Exponent& m() const noexcept { return m_; }
  const Exponent& t() const noexcept { return t_; }

  friend bool operator==(const ToroidalTemplate&, const ToroidalTemplate&) = default;

  ToroidalTemplate() = default;

 private:
  TemplateTag tag_ = TemplateTag::T1;
  ExponentRow u_;
  ExponentRow v_;
  Exponent m_ = 0;
  Exponent t_ = 0;
};

std::string describe(const ToroidalTemplate& t);

/// How the target divisor looks at the image point: the number of branches of
/// the global divisor E, and how many of them come from the chart's own divisor.
struct EBranchData {
  int branch_count = 1;
  int chart_divisor_branches = 1;

  friend bool operator==(const EBranchData&, const EBranchData&) = default;
};

/// Structural match of a presentation against (t1)-(t3). F1 with b = 0 is T1,
/// F4 is T2, F5 is T3 and F6 is T1/T3 depending on the branch count.
ToroidalTemplate match_template(const MonomialPresentation& p, const EBranchData& e_local);

}  // namespace toroidal
