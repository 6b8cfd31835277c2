// SPDX-License-Identifier: Apache-2.0
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eulertower/eulertower.h"

namespace {

constexpr int kUsageError = 1;

struct Failure {
  int code;
  std::string message;
};

void check(et_status status) {
  if (status != ET_OK) throw Failure{static_cast<int>(status), et_last_error()};
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsageError, "cannot read '" + path + "'"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<int64_t> parseBetti(const std::string& text) {
  std::vector<int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 0)
      throw Failure{kUsageError, "--betti expects comma-separated nonnegative integers, got '" + text + "'"};
    out.push_back(v);
  }
  if (out.empty()) throw Failure{kUsageError, "--betti needs at least one value"};
  return out;
}

std::string takeReport(et_report* r, et_format format) {
  std::string out = et_report_render(r, format);
  et_report_free(r);
  return out;
}

std::string takeString(char* s) {
  std::string out = s;
  et_string_free(s);
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher Euler characteristics of spaces, complexes, K0 classes, varieties and finite categories"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));

  std::string betti;
  unsigned maxJ = 1;
  bool alternate = false;
  auto* chi = app.add_subcommand("chi", "Higher Euler characteristics of a Betti vector");
  chi->add_option("--betti", betti, "Comma-separated Betti numbers")->required();
  chi->add_option("--max-j", maxJ, "Largest index");
  chi->add_flag("--alt", alternate, "Use sum (-1)^(i-j) i^j b_i");

  std::string file;
  int fileMaxJ = -1;
  bool canonical = false;
  auto* complex = app.add_subcommand("complex", "Homology and Euler characteristics of a chain complex file");
  complex->add_option("FILE", file)->required();
  complex->add_option("--max-j", fileMaxJ, "Largest index")->check(CLI::NonNegativeNumber);
  complex->add_flag("--canonical", canonical, "Print the canonical form of the input");

  auto* simplicial = app.add_subcommand("simplicial", "Homology of a simplicial complex given by facets");
  simplicial->add_option("FILE", file)->required();
  simplicial->add_flag("--canonical", canonical, "Print the canonical form of the input");

  std::string expr;
  long kervaireDim = -1;
  bool torusOrder = false;
  auto* space = app.add_subcommand("space", "Betti numbers of a space expression");
  space->add_option("EXPR", expr)->required();
  space->add_option("--kervaire", kervaireDim, "Odd dimension for the semi-characteristic")
      ->check(CLI::NonNegativeNumber);
  space->add_flag("--torus-order", torusOrder, "Order of vanishing at t = -1");

  unsigned order = 0;
  bool verifyEuler = false;
  auto* sym = app.add_subcommand("sym", "Symmetric powers from a Betti vector");
  sym->add_option("--betti", betti, "Comma-separated Betti numbers")->required();
  sym->add_option("--order", order, "Largest symmetric power")->required();
  sym->add_flag("--verify-euler", verifyEuler, "Compare with (1-t)^(-chi)");

  std::string rankMap;
  auto* k0 = app.add_subcommand("k0", "Euler characteristics of a K0 complex file");
  k0->add_option("FILE", file)->required();
  k0->add_option("--rank", rankMap, "Ranks such as g=1,h=2");
  k0->add_option("--max-j", fileMaxJ, "Largest index")->check(CLI::NonNegativeNumber);
  k0->add_flag("--canonical", canonical, "Print the canonical form of the input");

  uint64_t n = 0, k = 1;
  auto* adams = app.add_subcommand("adams", "chi' of the graded symmetric power of a cone");
  adams->add_option("--n", n, "Rank")->required();
  adams->add_option("--k", k, "Power")->required()->check(CLI::PositiveNumber);

  std::string measure;
  auto* motivic = app.add_subcommand("motivic", "Motivic measures of a variety expression");
  motivic->add_option("EXPR", expr)->required();
  motivic->add_option("--measure", measure, "Measure")
      ->required()
      ->check(CLI::IsMember({"chi_c", "poincare", "hodge", "hodge-higher", "count"}));

  auto* fincat = app.add_subcommand("fincat", "Series Euler characteristic of a hom-count matrix");
  fincat->add_option("FILE", file)->required();
  fincat->add_option("--order", order, "Largest Laurent index")->required();
  fincat->add_flag("--canonical", canonical, "Print the canonical form of the input");

  bool injectFault = false;
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the built-in consistency checks");
  selfcheck->add_flag("--inject-fault", injectFault, "Corrupt one expected value (exits with 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  const et_format fmt = format == "structured" ? ET_FORMAT_STRUCTURED : ET_FORMAT_TEXT;
  std::string output;
  try {
    et_report* r = nullptr;
    if (chi->parsed()) {
      auto b = parseBetti(betti);
      check(et_chi_report(b.data(), b.size(), maxJ, alternate, &r));
      output = takeReport(r, fmt);
    } else if (complex->parsed()) {
      et_complex* c = nullptr;
      check(et_complex_parse(readFile(file).c_str(), &c));
      char* s = nullptr;
      et_status status = canonical ? et_complex_serialize(c, &s) : et_complex_report(c, fileMaxJ, &r);
      et_complex_free(c);
      check(status);
      output = canonical ? takeString(s) : takeReport(r, fmt);
    } else if (simplicial->parsed()) {
      et_simplicial* sc = nullptr;
      check(et_simplicial_parse(readFile(file).c_str(), &sc));
      char* s = nullptr;
      et_status status = canonical ? et_simplicial_serialize(sc, &s) : et_simplicial_report(sc, &r);
      et_simplicial_free(sc);
      check(status);
      output = canonical ? takeString(s) : takeReport(r, fmt);
    } else if (space->parsed()) {
      et_space* sp = nullptr;
      check(et_space_parse(expr.c_str(), &sp));
      et_status status = et_space_report(sp, kervaireDim, torusOrder, &r);
      et_space_free(sp);
      check(status);
      output = takeReport(r, fmt);
    } else if (sym->parsed()) {
      auto b = parseBetti(betti);
      check(et_sym_report(b.data(), b.size(), order, verifyEuler, &r));
      output = takeReport(r, fmt);
    } else if (k0->parsed()) {
      et_k0_complex* m = nullptr;
      check(et_k0_parse(readFile(file).c_str(), &m));
      char* s = nullptr;
      et_status status = canonical ? et_k0_serialize(m, &s)
                                   : et_k0_report(m, k0->count("--rank") ? rankMap.c_str() : nullptr,
                                                  fileMaxJ, &r);
      et_k0_free(m);
      check(status);
      output = canonical ? takeString(s) : takeReport(r, fmt);
    } else if (adams->parsed()) {
      check(et_adams_report(n, k, &r));
      output = takeReport(r, fmt);
    } else if (motivic->parsed()) {
      et_variety* v = nullptr;
      check(et_variety_parse(expr.c_str(), &v));
      et_status status = et_variety_report(v, measure.c_str(), &r);
      et_variety_free(v);
      check(status);
      output = takeReport(r, fmt);
    } else if (fincat->parsed()) {
      et_category* c = nullptr;
      check(et_category_parse(readFile(file).c_str(), &c));
      char* s = nullptr;
      et_status status = canonical ? et_category_serialize(c, &s) : et_category_report(c, order, &r);
      et_category_free(c);
      check(status);
      output = canonical ? takeString(s) : takeReport(r, fmt);
    } else if (selfcheck->parsed()) {
      check(et_selfcheck_report(injectFault, &r));
      output = takeReport(r, fmt);
    }
  } catch (const Failure& f) {
    std::cerr << "euler-tower: " << f.message << "\n";
    return f.code;
  }
  std::fwrite(output.data(), 1, output.size(), stdout);
  return std::fflush(stdout) == 0 ? 0 : kUsageError;
}
