// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "eulertower/error.hpp"
#include "eulertower/fincat/fincat.hpp"
#include "generators.hpp"
#include "printing.hpp"

using namespace eulertower;
using namespace eulertower::fincat;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(ET_DATA_DIR) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Face poset of the boundary of a triangle: vertices 0..2, edges 3..5.
HomCountMatrix hollowTriangleFaces() {
  return HomCountMatrix{{1, 0, 0, 1, 0, 1}, {0, 1, 0, 1, 1, 0}, {0, 0, 1, 0, 1, 1},
                        {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}};
}

} // namespace

TEST_CASE("small categories") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(chiSeries(HomCountMatrix::discrete(n)) == Rational(n));
  CHECK(chiSeries(HomCountMatrix{{2}}) == Rational(1, 2));
  auto f = seriesFunction(HomCountMatrix{{2}});
  CHECK(f.denominator() == RatPoly::fromDense({Rational(-1), Rational(1)}));
  CHECK(f.numerator() == RatPoly(Rational(-1)));
  auto arrow = parseHomCounts(slurp("arrow.mat"));
  CHECK(chiSeries(arrow) == Rational(1));
  CHECK(chainCounts(arrow, 3) == std::vector<Integer>{2, 1, 0, 0});
  CHECK(chiSeries(parseHomCounts(slurp("one-object.mat"))) == Rational(1, 2));
  CHECK(chiSeries(hollowTriangleFaces()) == Rational(0));
}

TEST_CASE("a pole at minus one") {
  auto a = parseHomCounts(slurp("two-object-pole.mat"));
  CHECK(!chiSeries(a).has_value());
  CHECK(!inverseEntrySum(a).has_value());
  auto l = chiLaurent(a, 1);
  CHECK(l.minDegree == -1);
  CHECK(l.at(-1) == Rational(-1, 4));
  CHECK(l.at(0) == Rational(9, 16));
  CHECK(l.at(1) == Rational(27, 64));
}

TEST_CASE("chain counts are the series coefficients at zero") {
  gen::Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    auto a = gen::homCounts(rng, 4, 3);
    auto counts = chainCounts(a, 6);
    auto taylor = laurentExpand(seriesFunction(a), Rational(0), 6);
    CHECK(taylor.minDegree >= 0);
    for (unsigned k = 0; k <= 6; ++k) CHECK(taylor.at(k) == Rational(counts[k]));
  }
}

TEST_CASE("disjoint unions add") {
  gen::Rng rng(32);
  for (int i = 0; i < 60; ++i) {
    auto a = gen::homCounts(rng, 3, 3), b = gen::homCounts(rng, 3, 3);
    auto ab = HomCountMatrix::blockDiagonal(a, b);
    CHECK(ab.size() == a.size() + b.size());
    CHECK(seriesFunction(ab) == seriesFunction(a) + seriesFunction(b));
    auto ca = chiSeries(a), cb = chiSeries(b), cab = chiSeries(ab);
    if (ca && cb) CHECK(cab == Rational(*ca + *cb));
    auto la = chiLaurent(a, 3), lb = chiLaurent(b, 3), lab = chiLaurent(ab, 3);
    for (long j = -4; j <= 3; ++j) CHECK(lab.at(j) == Rational(la.at(j) + lb.at(j)));
  }
}

TEST_CASE("invertible hom matrices") {
  gen::Rng rng(33);
  int invertible = 0;
  for (int i = 0; i < 100; ++i) {
    auto a = gen::homCounts(rng, 5, 3);
    auto inv = inverseEntrySum(a);
    if (!inv) continue;
    ++invertible;
    CHECK(chiSeries(a) == inv);
    CHECK(chiLaurent(a, 2).minDegree >= 0);
  }
  CHECK(invertible > 20);
}

TEST_CASE("determinants") {
  auto t = RatPoly::monomial(1, Rational(1));
  RatPoly one(Rational(1));
  CHECK(bareissDeterminant({{one, t}, {t, one}}) == one - t * t);
  CHECK(bareissDeterminant({{RatPoly(), one}, {one, RatPoly()}}) == -one);
  CHECK(bareissDeterminant({}) == one);
  CHECK(bareissDeterminant({{one, t}, {one, t}}).isZero());
  CHECK(bareissDeterminant({{RatPoly(), one, t}, {one, RatPoly(), one}, {t, one, RatPoly()}}) ==
        RatPoly(Rational(2)) * t);
}

TEST_CASE("hom count files") {
  auto a = parseHomCounts("# c\n2\n1 3\n0 1\n");
  CHECK(a.at(0, 1) == 3);
  CHECK(serializeHomCounts(a) == "2\n1 3\n0 1\n");
  CHECK(parseHomCounts(serializeHomCounts(a)) == a);
  CHECK_THROWS_WITH(parseHomCounts("2\n1 3\n0 0\n"), doctest::Contains("line 3"));
  CHECK_THROWS_WITH(parseHomCounts("2\n1 3\n0 -1\n"), doctest::Contains("line 3"));
  CHECK_THROWS_WITH(parseHomCounts("2\n1 3 4\n0 1\n"), doctest::Contains("line 2"));
  CHECK_THROWS_AS(parseHomCounts("2\n1 3\n"), ParseError);
  CHECK_THROWS_AS(parseHomCounts("0\n"), ParseError);
  CHECK_THROWS_AS(HomCountMatrix({{1, 2}}), InputError);
  gen::Rng rng(34);
  for (int i = 0; i < 50; ++i) {
    auto m = gen::homCounts(rng, 6, 9);
    CHECK(parseHomCounts(serializeHomCounts(m)) == m);
  }
}
