#include <doctest.h>

#include "helpers.hpp"
#include "toroidal/error.hpp"
#include "toroidal/forms.hpp"
#include "toroidal/oracle.hpp"

using namespace toroidal;
using testing::for_each_row;
using testing::to_row;

namespace {
const ChartContext off_E{1, false};
}

TEST_SUITE("forms") {

TEST_CASE("construction validates each form") {
  CHECK_NOTHROW(MonomialPresentation::f1(2, {3}, {1}));
  CHECK_THROWS_AS(MonomialPresentation::f1(2, {1}, {2}), ValidationError);      // b > a
  CHECK_THROWS_AS(MonomialPresentation::f1(2, {0}, {0}), ValidationError);      // x_1 not on D
  CHECK_THROWS_AS(MonomialPresentation::f1(1, {3}, {1}), ValidationError);      // no room for x_2
  CHECK_THROWS_AS(MonomialPresentation::f2(3, {2, 2}, {0, 0}), ValidationError);  // v a unit
  CHECK_THROWS_AS(MonomialPresentation::f3(2, {2}, {3}), ValidationError);
  CHECK_THROWS_AS(MonomialPresentation::f4(2, {2}, 1, 1), ValidationError);     // g not primitive
  CHECK_THROWS_AS(MonomialPresentation::f4(3, {1, 1}, 0, 1), ValidationError);
  CHECK_THROWS_AS(MonomialPresentation::f5(2, {2, 4}, {1, 2}), ValidationError);  // rank 1
  CHECK_THROWS_AS(MonomialPresentation::f5(3, {1, 0, 2}, {1, 0, 1}), ValidationError);  // zero column
  CHECK_THROWS_AS(MonomialPresentation::f5(2, {2}, {1}), ValidationError);
  CHECK_THROWS_AS(MonomialPresentation::f5(2, {1, 0, 1}, {0, 1, 1}), ValidationError);  // k > n
  CHECK_NOTHROW(MonomialPresentation::f6(2, off_E));
  CHECK_THROWS_AS(MonomialPresentation::f6(2, {1, true}), ValidationError);     // F6 lies off E_i
  CHECK_THROWS_AS(MonomialPresentation::f5(2, {2, 0}, {0, 3}, off_E), ValidationError);
}

TEST_CASE("rank-deficient F5 attempts are all rejected") {
  std::size_t rejected = 0;
  for_each_row(3, 0, 3, [&](const std::vector<long>& a) {
    for_each_row(3, 0, 3, [&](const std::vector<long>& b) {
      const ExponentRow u = to_row(a);
      const ExponentRow v = to_row(b);
      bool zero_col = false;
      for (std::size_t i = 0; i < 3; ++i) zero_col = zero_col || (a[i] + b[i] == 0);
      if (zero_col || oracle::oracle_rank(u, v) == 2) return;
      CHECK_THROWS_AS(MonomialPresentation::f5(3, u, v), ValidationError);
      ++rejected;
    });
  });
  CHECK(rejected > 0);
}

TEST_CASE("classify_point examples") {
  CHECK(classify_point(MonomialPresentation::f5(2, {2, 0}, {0, 3})) == 2);
  CHECK(classify_point(MonomialPresentation::f1(2, {3}, {1})) == 1);
  CHECK(classify_point(MonomialPresentation::f5(3, {1, 2, 0}, {0, 1, 1})) == 3);
  CHECK(classify_point(MonomialPresentation::f2(3, {3, 3}, {1, 2})) == 2);
  CHECK(classify_point(MonomialPresentation::f6(2, off_E)) == 0);
}

TEST_CASE("classify_point stays within 1..k") {
  for_each_row(2, 1, 3, [&](const std::vector<long>& a) {
    for_each_row(2, 0, 3, [&](const std::vector<long>& b) {
      if (b[0] > a[0] || b[1] > a[1]) return;
      const auto p = MonomialPresentation::f1(3, to_row(a), to_row(b));
      CHECK(classify_point(p) >= 1);
      CHECK(classify_point(p) <= p.k());
    });
  });
}

TEST_CASE("is_principal examples") {
  CHECK_FALSE(is_principal(MonomialPresentation::f5(2, {2, 0}, {0, 3})));
  CHECK(is_principal(MonomialPresentation::f5(2, {1, 1}, {2, 3})));
  // (x^3, x y): the oracle decides by divisibility.
  const bool oracle_says = oracle::oracle_principal({3}, {1}, true);
  CHECK(is_principal(MonomialPresentation::f1(2, {3}, {1})) == oracle_says);
  CHECK_FALSE(oracle_says);
  CHECK(is_principal(MonomialPresentation::f2(3, {2, 2}, {1, 1})));
  CHECK(is_principal(MonomialPresentation::f1(2, {2}, {2})));
  CHECK_FALSE(is_principal(MonomialPresentation::f6(2, off_E)));
  CHECK(is_principal(MonomialPresentation::f7(2, false, off_E)));
  CHECK(is_principal(MonomialPresentation::f8(2, off_E)));
  CHECK(is_principal(MonomialPresentation::f4(3, {1, 2}, 5, 2)));
}

TEST_CASE("pair_rank agrees with the minor oracle") {
  for_each_row(3, 0, 3, [&](const std::vector<long>& a) {
    for_each_row(3, 0, 3, [&](const std::vector<long>& b) {
      CHECK(pair_rank(to_row(a), to_row(b)) == oracle::oracle_rank(to_row(a), to_row(b)));
    });
  });
}

TEST_CASE("primitive_split") {
  const auto s = primitive_split({2, 4}, {3, 6});
  CHECK(s.g == ExponentRow{1, 2});
  CHECK(s.m == 2);
  CHECK(s.t == 3);
  CHECK_THROWS_AS(primitive_split({1, 0}, {0, 1}), DomainError);
}

TEST_CASE("match_template examples") {
  CHECK(match_template(MonomialPresentation::f1(3, {2, 1}, {0, 0}), {1, 1}) == ToroidalTemplate::t1({2, 1}));
  CHECK(match_template(MonomialPresentation::f5(2, {1, 1}, {1, 2}), {2, 2}) ==
        ToroidalTemplate::t3({1, 1}, {1, 2}));
  CHECK(match_template(MonomialPresentation::f4(3, {1, 1}, 2, 3), {2, 2}) == ToroidalTemplate::t2({1, 1}, 2, 3));
  CHECK_THROWS_AS(match_template(MonomialPresentation::f5(2, {2, 0}, {0, 3}), {1, 1}), NoTemplateMatch);
  CHECK_THROWS_AS(match_template(MonomialPresentation::f1(2, {3}, {1}), {1, 1}), NoTemplateMatch);
}

TEST_CASE("templates enforce their invariants") {
  CHECK_THROWS_AS(ToroidalTemplate::t1({0, 1}), NoTemplateMatch);
  CHECK_THROWS_AS(ToroidalTemplate::t2({2, 4}, 1, 1), NoTemplateMatch);
  CHECK_THROWS_AS(ToroidalTemplate::t2({1}, 0, 1), NoTemplateMatch);
  CHECK_THROWS_AS(ToroidalTemplate::t3({1, 2}, {2, 4}), NoTemplateMatch);
  CHECK_THROWS_AS(ToroidalTemplate::t3({1, 0}, {1, 0}), NoTemplateMatch);
}

}
