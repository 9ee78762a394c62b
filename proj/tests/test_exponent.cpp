#include <doctest.h>

#include "toroidal/error.hpp"
#include "toroidal/exponent.hpp"

using namespace toroidal;

TEST_SUITE("exponent") {

TEST_CASE("rows reject negative entries") {
  CHECK_THROWS_AS(ExponentRow({1, -1}), ValidationError);
  CHECK_THROWS_AS(ExponentRow(std::vector<Exponent>{Exponent(-3)}), ValidationError);
  CHECK_NOTHROW(ExponentRow({0, 0, 7}));
}

TEST_CASE("1-based access") {
  const ExponentRow r{4, 0, 9};
  CHECK(r.at(1) == 4);
  CHECK(r.at(3) == 9);
  CHECK_THROWS_AS(r.at(0), DomainError);
  CHECK_THROWS_AS(r.at(4), DomainError);
}

TEST_CASE("dominance and difference") {
  CHECK(dominated_by({1, 2}, {1, 3}));
  CHECK_FALSE(dominated_by({2, 0}, {0, 3}));
  CHECK(difference({5, 3}, {2, 3}) == ExponentRow{3, 0});
  CHECK_THROWS_AS(difference({1, 0}, {0, 1}), DomainError);
}

TEST_CASE("gcd of a row") {
  CHECK(gcd_of({4, 6, 10}) == 2);
  CHECK(gcd_of({0, 0}) == 0);
  CHECK(gcd_of({0, 9}) == 9);
}

TEST_CASE("exponents beyond 64 bits stay exact") {
  const Exponent big("100000000000000000000000000");
  const ExponentRow a(std::vector<Exponent>{big + 1, big});
  const ExponentRow b(std::vector<Exponent>{big, big});
  CHECK(difference(a, b) == ExponentRow{1, 0});
  CHECK(to_string(a) == "(100000000000000000000000001,100000000000000000000000000)");
}

}
