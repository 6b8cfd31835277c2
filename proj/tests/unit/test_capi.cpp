// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>
#include <thread>

#include "eulertower/eulertower.h"

namespace {

std::string render(et_report* r, et_format f = ET_FORMAT_TEXT) {
  std::string s = et_report_render(r, f);
  et_report_free(r);
  return s;
}

std::string take(char* s) {
  std::string out = s;
  et_string_free(s);
  return out;
}

} // namespace

TEST_CASE("scalar entry points") {
  int64_t b[] = {1, 0, 0, 1};
  int64_t out = 0;
  CHECK(et_chi_from_betti(b, 4, 1, &out) == ET_OK);
  CHECK(out == 3);
  CHECK(et_adams_grayson(3, 5, &out) == ET_OK);
  CHECK(out == 3);
  int64_t neg[] = {1, -1};
  CHECK(et_chi_from_betti(neg, 2, 0, &out) == ET_INPUT_ERROR);
  CHECK(std::string(et_last_error()).find("negative") != std::string::npos);
  int64_t big[] = {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                   0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                   0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, INT64_MAX};
  CHECK(et_chi_from_betti(big, sizeof big / sizeof big[0], 30, &out) == ET_INPUT_ERROR);
}

TEST_CASE("complex handles") {
  et_complex* c = nullptr;
  REQUIRE(et_complex_parse("range 0 1\nranks 1 1\nd 1\n2\n", &c) == ET_OK);
  char* text = nullptr;
  REQUIRE(et_complex_serialize(c, &text) == ET_OK);
  std::string canonical = take(text);
  et_complex* again = nullptr;
  REQUIRE(et_complex_parse(canonical.c_str(), &again) == ET_OK);
  REQUIRE(et_complex_serialize(again, &text) == ET_OK);
  CHECK(take(text) == canonical);
  et_report* r = nullptr;
  REQUIRE(et_complex_report(c, -1, &r) == ET_OK);
  CHECK(render(r).find("torsion [2]") != std::string::npos);
  et_complex_free(c);
  et_complex_free(again);
  et_complex_free(nullptr);

  et_complex* bad = nullptr;
  CHECK(et_complex_parse("range 0 1\nranks 1\n", &bad) == ET_INPUT_ERROR);
  CHECK(bad == nullptr);
  CHECK(std::string(et_last_error()).find("line 2") != std::string::npos);
}

TEST_CASE("other handles") {
  et_simplicial* k = nullptr;
  REQUIRE(et_simplicial_parse("1 2\n2 3\n3 1\n", &k) == ET_OK);
  et_report* r = nullptr;
  REQUIRE(et_simplicial_report(k, &r) == ET_OK);
  CHECK(render(r).find("betti = [1, 1]") != std::string::npos);
  et_simplicial_free(k);

  et_space* s = nullptr;
  REQUIRE(et_space_parse("S(3) * T(2)", &s) == ET_OK);
  REQUIRE(et_space_report(s, -1, 1, &r) == ET_OK);
  CHECK(render(r).find("torus order = 3") != std::string::npos);
  et_space_free(s);
  CHECK(et_space_parse("S(3) * Q", &s) == ET_INPUT_ERROR);

  et_k0_complex* m = nullptr;
  REQUIRE(et_k0_parse("0: g\n1: g\n", &m) == ET_OK);
  REQUIRE(et_k0_report(m, "g=2", -1, &r) == ET_OK);
  CHECK(render(r).find("rank chi_0 = 0, chi_1 = 2") != std::string::npos);
  CHECK(et_k0_report(m, "h=2", -1, &r) == ET_INPUT_ERROR);
  CHECK(std::string(et_last_error()).find("'g'") != std::string::npos);
  et_k0_free(m);

  et_variety* v = nullptr;
  REQUIRE(et_variety_parse("C(1)", &v) == ET_OK);
  REQUIRE(et_variety_report(v, "chi_c", &r) == ET_OK);
  render(r);
  CHECK(et_variety_report(v, "count", &r) == ET_INPUT_ERROR);
  et_variety_free(v);

  et_category* c = nullptr;
  REQUIRE(et_category_parse("2\n2 1\n4 2\n", &c) == ET_OK);
  REQUIRE(et_category_report(c, 1, &r) == ET_OK);
  CHECK(render(r).find("chi_{-1} = -1/4") != std::string::npos);
  et_category_free(c);
}

TEST_CASE("reports render both formats") {
  int64_t b[] = {1, 0, 1};
  et_report* r = nullptr;
  REQUIRE(et_chi_report(b, 3, 1, 0, &r) == ET_OK);
  CHECK(std::string(et_report_render(r, ET_FORMAT_TEXT)) == "chi_0 = 2, chi_1 = -2\n");
  CHECK(std::string(et_report_render(r, ET_FORMAT_STRUCTURED)).front() == '{');
  et_report_free(r);
  REQUIRE(et_sym_report(b, 3, 3, 1, &r) == ET_OK);
  CHECK(render(r).find("euler check: OK") != std::string::npos);
  REQUIRE(et_adams_report(3, 5, &r) == ET_OK);
  CHECK(render(r) == "psi = 3 (expected rank 3: OK)\n");
  REQUIRE(et_selfcheck_report(0, &r) == ET_OK);
  render(r);
  CHECK(et_selfcheck_report(1, &r) == ET_INTERNAL_ERROR);
}

TEST_CASE("last error is per thread") {
  et_space* s = nullptr;
  CHECK(et_space_parse("X(1)", &s) == ET_INPUT_ERROR);
  std::string here = et_last_error();
  std::thread([] {
    et_space* t = nullptr;
    CHECK(et_space_parse("pt", &t) == ET_OK);
    et_space_free(t);
    CHECK(std::string(et_last_error()).empty());
  }).join();
  CHECK(std::string(et_last_error()) == here);
}
