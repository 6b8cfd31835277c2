// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulertower/chain/io.hpp"
#include "eulertower/error.hpp"
#include "eulertower/motivic/variety.hpp"
#include "eulertower/report.hpp"

using namespace eulertower;
using namespace eulertower::report;

TEST_CASE("chi report") {
  auto r = chiReport(spaces::BettiVector{1, 0, 0, 1}, 2, false);
  CHECK(r.text == "chi_0 = 0, chi_1 = 3, chi_2 = -3\n");
  CHECK(r.data["chi"] == nlohmann::json({"0", "3", "-3"}));
  CHECK(r.data["command"] == "chi");
  auto alt = chiReport(spaces::BettiVector{1, 1}, 2, true);
  CHECK(alt.text == "altchi_0 = 0, altchi_1 = 1, altchi_2 = -1\n");
  CHECK(alt.data["definition"] == "power");
}

TEST_CASE("structured output is canonical") {
  auto r = chiReport(spaces::BettiVector{1, 1}, 1, false);
  CHECK(r.structured() ==
        "{\n  \"betti\": [\n    \"1\",\n    \"1\"\n  ],\n  \"chi\": [\n    \"0\",\n    \"1\"\n"
        "  ],\n  \"command\": \"chi\",\n  \"definition\": \"binomial\",\n  \"max_j\": 1\n}\n");
  CHECK(nlohmann::json::parse(r.structured()) == r.data);
}

TEST_CASE("complex report") {
  auto f = chain::parseComplex("range 0 1\nranks 1 1\nd 1\n2\n");
  auto r = complexReport(f);
  CHECK(r.text ==
        "grading = homological\n"
        "H_0: rank 1, betti 0, torsion [2]\n"
        "H_1: rank 1, betti 0\n"
        "P = 1 + t\n"
        "P^h = 0\n"
        "chi_0 = 0, chi_1 = 1\n"
        "chih_0 = 0, chih_1 = 0\n"
        "acyclic = no\n"
        "tau = 0\n");
}

TEST_CASE("other reports") {
  CHECK(adamsReport(3, 5).text == "psi = 3 (expected rank 3: OK)\n");
  CHECK(motivicReport(motivic::parseVarietyExpr("C(1)"), "hodge-higher").text ==
        "chiH_0 = 1 + 2*u + u^2, chiH_1 = 1 + u\n");
  CHECK(fincatReport(fincat::HomCountMatrix{{1, 1}, {0, 1}}, 1).text ==
        "f = 2 + t\nchi = 1\nchi_0 = 1, chi_1 = 1\n");
  auto space = spaceReport(spaces::parseSpaceExpr("S(3) * T(2)"), std::nullopt, true);
  CHECK(space.text.find("torus order = 3\n") != std::string::npos);
  CHECK(space.text.find("chi_3 = 3") != std::string::npos);
  auto sym = symReport(spaces::BettiVector{1, 0, 1}, 3, true);
  CHECK(sym.text.find("euler check: OK\n") != std::string::npos);
  auto k = k0Report(k0::K0Complex({{0, k0::K0Element::generator("g")}, {1, k0::K0Element::generator("g")}}),
                    k0::RankMap{{"g", 2}});
  CHECK(k.text == "P = g + g*t\nchi_0 = 0, chi_1 = g\nrank P = 2 + 2*t\nrank chi_0 = 0, chi_1 = 2\n");
  CHECK_THROWS_AS(motivicReport(motivic::parseVarietyExpr("C(1)"), "count"), InputError);
  CHECK_THROWS_AS(motivicReport(motivic::parseVarietyExpr("pt"), "volume"), InputError);
}

TEST_CASE("reports are deterministic") {
  auto a = simplicialReport(spaces::parseFacets("1 2\n2 3\n3 1\n"));
  auto b = simplicialReport(spaces::parseFacets("3 1\n1 2\n2 3\n"));
  CHECK(a.text == b.text);
  CHECK(a.structured() == b.structured());
  CHECK(selfcheckReport(false).text == selfcheckReport(false).text);
  CHECK_THROWS_AS(selfcheckReport(true), InvariantViolation);
}
