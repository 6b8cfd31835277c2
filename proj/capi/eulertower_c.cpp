// SPDX-License-Identifier: Apache-2.0
#include "eulertower/eulertower.h"

#include <cstring>
#include <new>
#include <string>

#include "eulertower/chain/io.hpp"
#include "eulertower/error.hpp"
#include "eulertower/fincat/fincat.hpp"
#include "eulertower/k0/io.hpp"
#include "eulertower/motivic/variety.hpp"
#include "eulertower/polycore/taylor.hpp"
#include "eulertower/report.hpp"
#include "eulertower/spaces/simplicial.hpp"
#include "eulertower/spaces/space_expr.hpp"

using namespace eulertower;

struct et_complex {
  chain::ComplexFile value;
};
struct et_simplicial {
  spaces::SimplicialComplex value;
};
struct et_space {
  spaces::SpaceExpr value;
};
struct et_k0_complex {
  k0::K0Complex value;
};
struct et_variety {
  motivic::VarietyExpr value;
};
struct et_category {
  fincat::HomCountMatrix value;
};
struct et_report {
  std::string text;
  std::string structured;
};

namespace {

thread_local std::string lastError;

template <class F>
et_status guarded(F&& body) {
  try {
    lastError.clear();
    body();
    return ET_OK;
  } catch (const InputError& e) {
    lastError = e.what();
    return ET_INPUT_ERROR;
  } catch (const InvariantViolation& e) {
    lastError = std::string("internal invariant violated: ") + e.what();
    return ET_INTERNAL_ERROR;
  } catch (const std::bad_alloc&) {
    lastError = "out of memory";
    return ET_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    lastError = std::string("internal error: ") + e.what();
    return ET_INTERNAL_ERROR;
  }
}

void needed(const void* p, const char* what) {
  if (p == nullptr) throw InputError(std::string(what) + " is null");
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

et_report* wrap(const report::Report& r) { return new et_report{r.text, r.structured()}; }

std::optional<unsigned> optionalJ(int maxJ) {
  if (maxJ < 0) return std::nullopt;
  return static_cast<unsigned>(maxJ);
}

spaces::BettiVector bettiFrom(const int64_t* betti, size_t count) {
  if (count > 0) needed(betti, "betti");
  std::vector<Integer> values;
  for (size_t i = 0; i < count; ++i) {
    if (betti[i] < 0) throw InputError("Betti numbers must be nonnegative");
    values.emplace_back(static_cast<long>(betti[i]));
  }
  return spaces::BettiVector(std::move(values));
}

et_status toInt64(const Integer& v, int64_t* out) {
  if (!v.fits_slong_p()) {
    lastError = "result " + v.get_str() + " does not fit in 64 bits";
    return ET_INPUT_ERROR;
  }
  *out = v.get_si();
  return ET_OK;
}

template <class Handle, class Parse>
et_status parseInto(const char* text, Handle** out, Parse&& parse) {
  return guarded([&] {
    needed(text, "text");
    needed(out, "out");
    *out = new Handle{parse(std::string_view(text))};
  });
}

template <class Build>
et_status reportInto(et_report** out, Build&& build) {
  return guarded([&] {
    needed(out, "out");
    *out = wrap(build());
  });
}

} // namespace

extern "C" {

const char* et_last_error(void) { return lastError.c_str(); }

void et_string_free(char* s) { delete[] s; }

const char* et_report_render(const et_report* r, et_format format) {
  if (r == nullptr) return "";
  return format == ET_FORMAT_STRUCTURED ? r->structured.c_str() : r->text.c_str();
}

void et_report_free(et_report* r) { delete r; }

et_status et_complex_parse(const char* text, et_complex** out) {
  return parseInto(text, out, chain::parseComplex);
}

et_status et_complex_serialize(const et_complex* c, char** out) {
  return guarded([&] {
    needed(c, "complex");
    needed(out, "out");
    *out = duplicate(chain::serializeComplex(c->value));
  });
}

et_status et_complex_report(const et_complex* c, int max_j, et_report** out) {
  return reportInto(out, [&] {
    needed(c, "complex");
    return report::complexReport(c->value, optionalJ(max_j));
  });
}

void et_complex_free(et_complex* c) { delete c; }

et_status et_simplicial_parse(const char* text, et_simplicial** out) {
  return parseInto(text, out, spaces::parseFacets);
}

et_status et_simplicial_serialize(const et_simplicial* k, char** out) {
  return guarded([&] {
    needed(k, "complex");
    needed(out, "out");
    *out = duplicate(spaces::serializeFacets(k->value));
  });
}

et_status et_simplicial_report(const et_simplicial* k, et_report** out) {
  return reportInto(out, [&] {
    needed(k, "complex");
    return report::simplicialReport(k->value);
  });
}

void et_simplicial_free(et_simplicial* k) { delete k; }

et_status et_space_parse(const char* text, et_space** out) {
  return parseInto(text, out, spaces::parseSpaceExpr);
}

et_status et_space_report(const et_space* s, long kervaire_dim, int torus_order, et_report** out) {
  return reportInto(out, [&] {
    needed(s, "space");
    std::optional<long> dim;
    if (kervaire_dim >= 0) dim = kervaire_dim;
    return report::spaceReport(s->value, dim, torus_order != 0);
  });
}

void et_space_free(et_space* s) { delete s; }

et_status et_k0_parse(const char* text, et_k0_complex** out) {
  return parseInto(text, out, k0::parseK0Complex);
}

et_status et_k0_serialize(const et_k0_complex* m, char** out) {
  return guarded([&] {
    needed(m, "complex");
    needed(out, "out");
    *out = duplicate(k0::serializeK0Complex(m->value));
  });
}

et_status et_k0_report(const et_k0_complex* m, const char* rank_map, int max_j, et_report** out) {
  return reportInto(out, [&] {
    needed(m, "complex");
    std::optional<k0::RankMap> ranks;
    if (rank_map != nullptr) ranks = k0::parseRankMap(rank_map);
    return report::k0Report(m->value, ranks, optionalJ(max_j));
  });
}

void et_k0_free(et_k0_complex* m) { delete m; }

et_status et_variety_parse(const char* text, et_variety** out) {
  return parseInto(text, out, motivic::parseVarietyExpr);
}

et_status et_variety_report(const et_variety* v, const char* measure, et_report** out) {
  return reportInto(out, [&] {
    needed(v, "variety");
    needed(measure, "measure");
    return report::motivicReport(v->value, measure);
  });
}

void et_variety_free(et_variety* v) { delete v; }

et_status et_category_parse(const char* text, et_category** out) {
  return parseInto(text, out, fincat::parseHomCounts);
}

et_status et_category_serialize(const et_category* c, char** out) {
  return guarded([&] {
    needed(c, "category");
    needed(out, "out");
    *out = duplicate(fincat::serializeHomCounts(c->value));
  });
}

et_status et_category_report(const et_category* c, unsigned order, et_report** out) {
  return reportInto(out, [&] {
    needed(c, "category");
    return report::fincatReport(c->value, order);
  });
}

void et_category_free(et_category* c) { delete c; }

et_status et_chi_report(const int64_t* betti, size_t count, unsigned max_j, int alternate,
                        et_report** out) {
  return reportInto(out, [&] { return report::chiReport(bettiFrom(betti, count), max_j, alternate != 0); });
}

et_status et_sym_report(const int64_t* betti, size_t count, unsigned order, int verify_euler,
                        et_report** out) {
  return reportInto(out, [&] {
    return report::symReport(bettiFrom(betti, count), order, verify_euler != 0);
  });
}

et_status et_adams_report(uint64_t n, uint64_t k, et_report** out) {
  return reportInto(out, [&] { return report::adamsReport(n, k); });
}

et_status et_selfcheck_report(int inject_fault, et_report** out) {
  return reportInto(out, [&] { return report::selfcheckReport(inject_fault != 0); });
}

et_status et_chi_from_betti(const int64_t* betti, size_t count, unsigned j, int64_t* out) {
  Integer value;
  et_status s = guarded([&] {
    needed(out, "out");
    value = chiFromBetti(bettiFrom(betti, count).values(), j);
  });
  return s == ET_OK ? toInt64(value, out) : s;
}

et_status et_adams_grayson(uint64_t n, uint64_t k, int64_t* out) {
  Integer value;
  et_status s = guarded([&] {
    needed(out, "out");
    if (k < 1) throw InputError("power k must be at least 1");
    value = k0::adamsGrayson(n, k);
  });
  return s == ET_OK ? toInt64(value, out) : s;
}

} // extern "C"
