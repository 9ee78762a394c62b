#include <doctest.h>

#include <algorithm>

#include "toroidal/error.hpp"
#include "toroidal/oracle.hpp"
#include "toroidal/principalize.hpp"
#include "toroidal/scenario.hpp"

using namespace toroidal;
using namespace toroidal::oracle;

TEST_SUITE("oracle") {

TEST_CASE("oracle_principal examples") {
  CHECK_FALSE(oracle_principal({2, 0}, {0, 3}));
  CHECK(oracle_principal({1, 1}, {2, 3}));
  CHECK_FALSE(oracle_principal({3}, {1}, true));
  CHECK(oracle_principal({1}, {1}, true));
  CHECK(oracle_principal({2, 2}, {1, 1}));
}

TEST_CASE("oracle_rank examples") {
  CHECK(oracle_rank({2, 0}, {0, 3}) == 2);
  CHECK(oracle_rank({2, 4}, {1, 2}) == 1);
  CHECK(oracle_rank({0, 0}, {0, 0}) == 0);
  CHECK(oracle_rank({0, 0, 5}, {0, 0, 1}) == 1);
}

TEST_CASE("column model of the forms") {
  CHECK(point_of(MonomialPresentation::f1(2, {3}, {1})) == Point{{0, 1}, {3, 1}});
  CHECK(point_of(MonomialPresentation::f4(3, {1, 2}, 2, 3)) == Point{{2, 3}, {4, 6}});
  CHECK(point_of(MonomialPresentation::f6(2, {1, false})) == Point{{0, 1}, {1, 0}});
  CHECK(principal(point_of(MonomialPresentation::f8(2, {1, false}))));
  CHECK_FALSE(principal(point_of(MonomialPresentation::f6(2, {1, false}))));
}

TEST_CASE("children of a crossing pair") {
  const Point p{{2, 0}, {0, 3}};
  REQUIRE(centers(p).size() == 1);
  CHECK(crossing_value(p[0], p[1]) == 6);
  const auto kids = children(p, 0, 1);
  CHECK(kids[0] == Point{{2, 3}, {0, 3}});
  CHECK(kids[1] == Point{{2, 0}, {2, 3}});
  CHECK(kids[2] == Point{{2, 3}});
}

TEST_CASE("exhaustive search on the (2,0),(0,3) pair") {
  const auto r = exhaustive_search(Point{{2, 0}, {0, 3}}, 32);
  CHECK(r.all_terminate);
  CHECK(r.min_depth == 3);
  CHECK(r.max_depth == 3);
  CHECK(r.longest_path.size() == 3);
}

TEST_CASE("exhaustive search on F6 stops after one blowup") {
  const Scenario s = make_scenario(2, 1, {false}, {}, {MonomialPresentation::f6(2, {1, false})});
  const auto r = exhaustive_search(s, SearchBound{4, 4, 2});
  CHECK(r.min_depth == 1);
  CHECK(r.max_depth == 1);
}

TEST_CASE("a 1-point (k),(0) needs exactly k blowups on every path") {
  for (int k = 1; k <= 6; ++k) {
    const auto p = MonomialPresentation::f1(2, ExponentRow{k}, ExponentRow{0});
    const auto r = exhaustive_search(point_of(p), std::size_t(k) + 1);
    CHECK(r.min_depth == std::size_t(k));
    CHECK(r.max_depth == std::size_t(k));
  }
}

TEST_CASE("bound exceeded carries the offending path") {
  try {
    exhaustive_search(Point{{2, 0}, {0, 3}}, 1);
    FAIL("expected BoundExceeded");
  } catch (const BoundExceeded& e) {
    CHECK(e.path().size() >= 1);
    CHECK(e.path().front().point == canonical({{2, 0}, {0, 3}}));
  }
}

TEST_CASE("scenario search respects its bounds") {
  const Scenario s = make_scenario(2, 1, {true}, {}, {MonomialPresentation::f5(2, {9, 0}, {0, 3})});
  CHECK_THROWS_AS(exhaustive_search(s, SearchBound{8, 4, 32}), DomainError);
  CHECK_NOTHROW(exhaustive_search(s, SearchBound{9, 4, 32}));
  CHECK_THROWS_AS(exhaustive_search(s, SearchBound{9, 4, 0}), DomainError);
}

TEST_CASE("parallel root search is deterministic") {
  const Scenario s = make_scenario(3, 2, {true, true}, {},
                                   {MonomialPresentation::f5(3, {5, 0}, {0, 3}, {1, true}),
                                    MonomialPresentation::f5(3, {2, 0}, {0, 3}, {2, true}),
                                    MonomialPresentation::f5(3, {3, 1}, {1, 2}, {2, true})});
  const auto a = exhaustive_search(s, SearchBound{8, 4, 64});
  const auto b = exhaustive_search(s, SearchBound{8, 4, 64});
  REQUIRE(a.roots.size() == 3);
  CHECK(a.max_depth == b.max_depth);
  CHECK(a.min_depth == b.min_depth);
  for (std::size_t i = 0; i < a.roots.size(); ++i) CHECK(a.roots[i].point == b.roots[i].point);
  CHECK(std::is_sorted(a.roots.begin(), a.roots.end(),
                       [](const RootResult& x, const RootResult& y) { return x.point < y.point; }));
}

TEST_CASE("free center choice can loop at a 3-point") {
  const auto p = MonomialPresentation::f5(3, {0, 0, 2}, {1, 2, 0});
  try {
    exhaustive_search(point_of(p), 40);
    FAIL("expected an unbounded chain");
  } catch (const BoundExceeded& e) {
    REQUIRE(e.path().size() == 40);
    CHECK(e.path().front().point == point_of(p));
    for (std::size_t i = 0; i + 1 < e.path().size(); ++i) {
      const PathStep& st = e.path()[i];
      CHECK(crossing_value(st.point[st.s], st.point[st.t]) > 0);
      CHECK(canonical(children(st.point, st.s, st.t)[st.child]) == e.path()[i + 1].point);
    }
  }
  const Scenario s = make_scenario(3, 1, {true}, {}, {p});
  CHECK(run(s, default_step_budget(s)).scenario.presentations.empty());
}

}
