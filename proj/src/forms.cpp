#include "toroidal/forms.hpp"

#include <array>
#include <sstream>

#include "toroidal/error.hpp"

namespace toroidal {

namespace {

constexpr std::array<std::string_view, 8> kFormNames = {"F1", "F2", "F3", "F4",
                                                        "F5", "F6", "F7", "F8"};

void require(bool cond, const std::string& msg) {
  if (!cond) throw ValidationError(msg);
}

void require_positive(const ExponentRow& row, const char* what) {
  for (const auto& e : row) require(e > 0, std::string(what) + " entries must be positive");
}

}  // namespace

std::string_view to_string(FormTag tag) { return kFormNames[static_cast<int>(tag) - 1]; }

std::optional<FormTag> parse_form_tag(std::string_view text) {
  for (std::size_t i = 0; i < kFormNames.size(); ++i) {
    if (kFormNames[i] == text) return static_cast<FormTag>(i + 1);
  }
  return std::nullopt;
}

MonomialPresentation MonomialPresentation::f1(std::size_t n, ExponentRow u, ExponentRow v,
                                              ChartContext ctx) {
  MonomialPresentation p;
  p.form_ = FormTag::F1;
  p.n_ = n;
  p.u_ = std::move(u);
  p.v_ = std::move(v);
  p.ctx_ = ctx;
  p.validate();
  return p;
}

MonomialPresentation MonomialPresentation::f2(std::size_t n, ExponentRow u, ExponentRow v,
                                              ChartContext ctx) {
  MonomialPresentation p;
  p.form_ = FormTag::F2;
  p.n_ = n;
  p.u_ = std::move(u);
  p.v_ = std::move(v);
  p.ctx_ = ctx;
  p.validate();
  return p;
}

MonomialPresentation MonomialPresentation::f3(std::size_t n, ExponentRow u, ExponentRow v,
                                              ChartContext ctx) {
  MonomialPresentation p;
  p.form_ = FormTag::F3;
  p.n_ = n;
  p.u_ = std::move(u);
  p.v_ = std::move(v);
  p.ctx_ = ctx;
  p.validate();
  return p;
}

MonomialPresentation MonomialPresentation::f4(std::size_t n, ExponentRow g, Exponent m,
                                              Exponent t, ChartContext ctx) {
  MonomialPresentation p;
  p.form_ = FormTag::F4;
  p.n_ = n;
  p.u_ = std::move(g);
  p.m_ = std::move(m);
  p.t_ = std::move(t);
  p.ctx_ = ctx;
  p.validate();
  return p;
}

MonomialPresentation MonomialPresentation::f5(std::size_t n, ExponentRow u, ExponentRow v,
                                              ChartContext ctx) {
  MonomialPresentation p;
  p.form_ = FormTag::F5;
  p.n_ = n;
  p.u_ = std::move(u);
  p.v_ = std::move(v);
  p.ctx_ = ctx;
  p.validate();
  return p;
}

MonomialPresentation MonomialPresentation::f6(std::size_t n, ChartContext ctx) {
  MonomialPresentation p;
  p.form_ = FormTag::F6;
  p.n_ = n;
  p.ctx_ = ctx;
  p.validate();
  return p;
}

MonomialPresentation MonomialPresentation::f7(std::size_t n, bool alpha_nonzero, ChartContext ctx) {
  MonomialPresentation p;
  p.form_ = FormTag::F7;
  p.n_ = n;
  p.alpha_nonzero_ = alpha_nonzero;
  p.ctx_ = ctx;
  p.validate();
  return p;
}

MonomialPresentation MonomialPresentation::f8(std::size_t n, ChartContext ctx) {
  MonomialPresentation p;
  p.form_ = FormTag::F8;
  p.n_ = n;
  p.ctx_ = ctx;
  p.validate();
  return p;
}

MonomialPresentation MonomialPresentation::with_context(ChartContext ctx) const {
  MonomialPresentation p = *this;
  p.ctx_ = ctx;
  p.validate();
  return p;
}

std::size_t MonomialPresentation::k() const noexcept {
  switch (form_) {
    case FormTag::F2:
      return u_.size() - 1;
    case FormTag::F6:
    case FormTag::F7:
    case FormTag::F8:
      return 2;
    default:
      return u_.size();
  }
}

void MonomialPresentation::validate() const {
  require(ctx_.chart_index >= 1, "chart index must be at least 1");
  const bool toroidal_chart = form_ <= FormTag::F5;
  if (toroidal_chart) {
    require(ctx_.q_in_E, std::string(to_string(form_)) + " only occurs in charts with q in E_i");
  } else {
    require(!ctx_.q_in_E, std::string(to_string(form_)) + " only occurs in charts with q not in E_i");
  }

  switch (form_) {
    case FormTag::F1:
    case FormTag::F3: {
      require(!u_.empty(), "k must be at least 1");
      require(u_.size() == v_.size(), "u and v rows must have equal length");
      require(u_.size() + 1 <= n_, "k + 1 must not exceed n");
      require_positive(u_, "u");
      require(dominated_by(v_, u_), "b_i <= a_i must hold for all i");
      if (form_ == FormTag::F3) require(!v_.is_zero(), "v must vanish at the point");
      break;
    }
    case FormTag::F2: {
      require(u_.size() >= 2, "F2 rows need k+1 >= 2 entries");
      require(u_.size() == v_.size(), "u and v rows must have equal length");
      require(u_.size() <= n_, "k + 1 must not exceed n");
      require_positive(u_, "u");
      require(dominated_by(v_, u_), "b_i <= a_i must hold for all i");
      require(!v_.is_zero(), "v must vanish at the point");
      break;
    }
    case FormTag::F4: {
      require(!u_.empty(), "k must be at least 1");
      require(u_.size() + 1 <= n_, "k + 1 must not exceed n");
      require_positive(u_, "g");
      require(gcd_of(u_) == 1, "g must be primitive");
      require(m_ > 0 && t_ > 0, "m and t must be positive");
      break;
    }
    case FormTag::F5: {
      require(u_.size() >= 2, "k must be at least 2");
      require(u_.size() == v_.size(), "u and v rows must have equal length");
      require(u_.size() <= n_, "k must not exceed n");
      for (std::size_t i = 0; i < u_.size(); ++i) {
        require(u_[i] + v_[i] > 0, "a_i + b_i > 0 must hold for all i");
      }
      require(pair_rank(u_, v_) == 2, "rank [a; b] must be 2");
      break;
    }
    case FormTag::F6:
    case FormTag::F7:
    case FormTag::F8:
      require(n_ >= 2, "n must be at least 2");
      break;
  }
}

std::string describe(const MonomialPresentation& p) {
  std::ostringstream os;
  os << to_string(p.form()) << '[';
  switch (p.form()) {
    case FormTag::F1:
      os << "u=" << p.u_row() << " v=" << p.v_row() << "*x" << p.k() + 1;
      break;
    case FormTag::F3:
      os << "u=" << p.u_row() << " v=" << p.v_row() << "*(x" << p.k() + 1 << "+a)";
      break;
    case FormTag::F2:
    case FormTag::F5:
      os << "u=" << p.u_row() << " v=" << p.v_row();
      break;
    case FormTag::F4:
      os << "g=" << p.g_row() << " m=" << p.m() << " t=" << p.t();
      break;
    case FormTag::F6:
      os << "u=x1 v=x2";
      break;
    case FormTag::F7:
      os << "u=x1 v=x1*(x2" << (p.alpha_nonzero() ? "+a" : "") << ')';
      break;
    case FormTag::F8:
      os << "u=x1*x2 v=x2";
      break;
  }
  os << " chart=" << p.context().chart_index << ']';
  return os.str();
}

std::size_t pair_rank(const ExponentRow& u, const ExponentRow& v) {
  if (u.size() != v.size()) throw DomainError("row length mismatch");
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (u[i] * v[j] != u[j] * v[i]) return 2;
    }
  }
  return (u.is_zero() && v.is_zero()) ? 0 : 1;
}

PrimitiveSplit primitive_split(const ExponentRow& u, const ExponentRow& v) {
  if (pair_rank(u, v) != 1 || u.is_zero() || v.is_zero()) {
    throw DomainError("primitive split needs two nonzero proportional rows");
  }
  const Exponent gu = gcd_of(u);
  std::vector<Exponent> g;
  g.reserve(u.size());
  for (const auto& e : u) g.push_back(e / gu);
  // v = t g: read t off any column where g is nonzero.
  Exponent t = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] != 0) {
      t = v[i] / g[i];
      break;
    }
  }
  return {ExponentRow(std::move(g)), gu, t};
}

std::size_t classify_point(const MonomialPresentation& p) {
  std::size_t count = 0;
  switch (p.form()) {
    case FormTag::F4:
      for (const auto& e : p.g_row()) count += (e > 0);
      return count;
    case FormTag::F6:
    case FormTag::F7:
    case FormTag::F8:
      return 0;
    default:
      for (std::size_t i = 0; i < p.columns(); ++i) count += (p.u_row()[i] + p.v_row()[i] > 0);
      return count;
  }
}

bool is_principal(const MonomialPresentation& p) {
  switch (p.form()) {
    case FormTag::F1:
      // (x^a, x^b x_{k+1}) is principal iff x^a divides x^b x_{k+1}.
      return dominated_by(p.u_row(), p.v_row());
    case FormTag::F2:
    case FormTag::F3:
    case FormTag::F4:
      return true;
    case FormTag::F5:
      return dominated_by(p.u_row(), p.v_row()) || dominated_by(p.v_row(), p.u_row());
    case FormTag::F6:
      return false;
    case FormTag::F7:
    case FormTag::F8:
      return true;
  }
  return false;
}

std::string_view to_string(TemplateTag tag) {
  switch (tag) {
    case TemplateTag::T1:
      return "T1";
    case TemplateTag::T2:
      return "T2";
    case TemplateTag::T3:
      return "T3";
  }
  return "?";
}

ToroidalTemplate ToroidalTemplate::t1(ExponentRow a) {
  if (a.empty()) throw NoTemplateMatch("T1 needs k >= 1");
  for (const auto& e : a) {
    if (e <= 0) throw NoTemplateMatch("T1 exponents must be positive");
  }
  ToroidalTemplate t;
  t.tag_ = TemplateTag::T1;
  t.u_ = std::move(a);
  return t;
}

ToroidalTemplate ToroidalTemplate::t2(ExponentRow g, Exponent m, Exponent tpow) {
  if (g.empty()) throw NoTemplateMatch("T2 needs k >= 1");
  for (const auto& e : g) {
    if (e <= 0) throw NoTemplateMatch("T2 base exponents must be positive");
  }
  if (gcd_of(g) != 1) throw NoTemplateMatch("T2 base row must be primitive");
  if (m <= 0 || tpow <= 0) throw NoTemplateMatch("T2 powers must be positive");
  ToroidalTemplate t;
  t.tag_ = TemplateTag::T2;
  t.u_ = std::move(g);
  t.m_ = std::move(m);
  t.t_ = std::move(tpow);
  return t;
}

ToroidalTemplate ToroidalTemplate::t3(ExponentRow a, ExponentRow b) {
  if (a.size() < 2 || a.size() != b.size()) throw NoTemplateMatch("T3 needs two rows with k >= 2");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] + b[i] <= 0) throw NoTemplateMatch("T3 needs a_i + b_i > 0 for all i");
  }
  if (pair_rank(a, b) != 2) throw NoTemplateMatch("T3 needs rank 2");
  ToroidalTemplate t;
  t.tag_ = TemplateTag::T3;
  t.u_ = std::move(a);
  t.v_ = std::move(b);
  return t;
}

std::string describe(const ToroidalTemplate& t) {
  std::ostringstream os;
  os << to_string(t.tag()) << '[';
  switch (t.tag()) {
    case TemplateTag::T1:
      os << "a=" << t.u_row();
      break;
    case TemplateTag::T2:
      os << "g=" << t.u_row() << " m=" << t.m() << " t=" << t.t();
      break;
    case TemplateTag::T3:
      os << "a=" << t.u_row() << " b=" << t.v_row();
      break;
  }
  os << ']';
  return os.str();
}

ToroidalTemplate match_template(const MonomialPresentation& p, const EBranchData& e_local) {
  if (e_local.branch_count < 1 || e_local.branch_count > 2) {
    throw NoTemplateMatch("branch count must be 1 or 2");
  }
  const bool one = e_local.branch_count == 1;
  switch (p.form()) {
    case FormTag::F1:
      if (one && p.v_row().is_zero()) return ToroidalTemplate::t1(p.u_row());
      break;
    case FormTag::F4:
      if (!one) return ToroidalTemplate::t2(p.g_row(), p.m(), p.t());
      break;
    case FormTag::F5:
      if (!one) return ToroidalTemplate::t3(p.u_row(), p.v_row());
      break;
    case FormTag::F6:
      return one ? ToroidalTemplate::t1(ExponentRow{1})
                 : ToroidalTemplate::t3(ExponentRow{1, 0}, ExponentRow{0, 1});
    default:
      break;
  }
  throw NoTemplateMatch(describe(p) + " with " + std::to_string(e_local.branch_count) +
                        " target branch(es) is not toroidal");
}

}  // namespace toroidal
