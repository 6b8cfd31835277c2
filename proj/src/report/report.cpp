// SPDX-License-Identifier: Apache-2.0
#include "eulertower/report.hpp"

#include <algorithm>
#include <functional>

#include "eulertower/chain/complex.hpp"
#include "eulertower/error.hpp"
#include "eulertower/k0/io.hpp"
#include "eulertower/motivic/measures.hpp"
#include "eulertower/polycore/format.hpp"
#include "eulertower/polycore/taylor.hpp"
#include "eulertower/spaces/macdonald.hpp"

namespace eulertower::report {

using nlohmann::json;

namespace {

std::string str(std::size_t v) { return std::to_string(v); }
template <CoefficientRing R>
std::string str(const R& v) { return eulertower::ringToString(v); }

template <class T>
json stringList(const std::vector<T>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(eulertower::ringToString(v));
  return out;
}

template <class T>
std::string bracketList(const std::vector<T>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i)
    out += (i ? ", " : "") + str(values[i]);
  return out + "]";
}

std::string joined(const std::vector<Integer>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].get_str();
  return out;
}

json tauJson(const chain::TauLevel& tau) {
  switch (tau.kind) {
  case chain::TauLevel::Kind::None: return nullptr;
  case chain::TauLevel::Kind::Infinite: return "infinite";
  case chain::TauLevel::Kind::Finite: return tau.value;
  }
  return nullptr;
}

std::string tauText(const chain::TauLevel& tau) {
  switch (tau.kind) {
  case chain::TauLevel::Kind::None: return "none";
  case chain::TauLevel::Kind::Infinite: return "infinite";
  case chain::TauLevel::Kind::Finite: return std::to_string(tau.value);
  }
  return "";
}

unsigned defaultSpan(long low, long high) {
  long span = high - std::min(low, 0L);
  return static_cast<unsigned>(std::max(span, 1L));
}

} // namespace

std::string Report::structured() const { return data.dump(2) + "\n"; }

Report chiReport(const spaces::BettiVector& b, unsigned maxJ, bool alternate) {
  Report r;
  std::vector<Integer> values;
  for (unsigned j = 0; j <= maxJ; ++j)
    values.push_back(alternate ? altChi(b.values(), j) : spaces::chi(b, j));
  r.text = formatIndexed(alternate ? "altchi" : "chi", 0, values) + "\n";
  r.data = {{"command", "chi"},
            {"betti", stringList(b.values())},
            {"definition", alternate ? "power" : "binomial"},
            {"max_j", maxJ},
            {alternate ? "altchi" : "chi", stringList(values)}};
  return r;
}

Report complexReport(const chain::ComplexFile& file, std::optional<unsigned> maxJ) {
  const auto& c = file.complex;
  const bool cohomological = file.grading == chain::Grading::Cohomological;
  auto h = chain::homology(c);
  std::vector<const chain::DegreeHomology*> byLabel;
  for (const auto& d : h.degrees) byLabel.push_back(&d);
  std::sort(byLabel.begin(), byLabel.end(), [&](auto* a, auto* b) {
    return file.label(a->degree) < file.label(b->degree);
  });

  IntPoly p, ph;
  Report r;
  json degrees = json::array();
  for (const auto* d : byLabel) {
    long label = file.label(d->degree);
    p.set(label, Integer(static_cast<unsigned long>(c.rank(d->degree))));
    ph.set(label, Integer(static_cast<unsigned long>(d->betti)));
    std::string name = (cohomological ? "H^" : "H_") + std::to_string(label);
    r.text += name + ": rank " + std::to_string(c.rank(d->degree)) + ", betti " +
              std::to_string(d->betti);
    if (!d->torsion.empty()) r.text += ", torsion " + bracketList(d->torsion);
    r.text += "\n";
    degrees.push_back({{"degree", label},
                       {"rank", c.rank(d->degree)},
                       {"betti", d->betti},
                       {"torsion", stringList(d->torsion)}});
  }
  long lowLabel = file.label(cohomological ? c.highDegree() : c.lowDegree());
  long highLabel = file.label(cohomological ? c.lowDegree() : c.highDegree());
  unsigned j = maxJ.value_or(defaultSpan(lowLabel, highLabel));
  auto chis = chain::chiOfPoincare(p, j);
  auto chihs = chain::chiOfPoincare(ph, j);
  require(chis[0] == chihs[0], "chi_0 differs from its homological version");
  auto tau = chain::tauLevelOf(p);
  bool acyclic = chain::isAcyclic(c);

  r.text = std::string("grading = ") + (cohomological ? "cohomological" : "homological") + "\n" +
           r.text;
  r.text += "P = " + formatPolynomial(p) + "\n";
  r.text += "P^h = " + formatPolynomial(ph) + "\n";
  r.text += formatIndexed("chi", 0, chis) + "\n";
  r.text += formatIndexed("chih", 0, chihs) + "\n";
  r.text += std::string("acyclic = ") + (acyclic ? "yes" : "no") + "\n";
  r.text += "tau = " + tauText(tau) + "\n";
  r.data = {{"command", "complex"},
            {"grading", cohomological ? "cohomological" : "homological"},
            {"homology", degrees},
            {"poincare", polynomialToJson(p)},
            {"homological_poincare", polynomialToJson(ph)},
            {"max_j", j},
            {"chi", stringList(chis)},
            {"chih", stringList(chihs)},
            {"acyclic", acyclic},
            {"tau", tauJson(tau)},
            {"canonical", chain::serializeComplex(file)}};
  return r;
}

Report simplicialReport(const spaces::SimplicialComplex& k) {
  auto h = spaces::homologyOfComplex(k);
  auto faces = k.faces();
  std::vector<std::size_t> fvector;
  for (const auto& f : faces) fvector.push_back(f.size());
  spaces::BettiVector b = spaces::bettiOfComplex(k);
  unsigned j = static_cast<unsigned>(std::max(k.dimension(), 1L));
  auto chis = spaces::chiSequence(b, j);

  Report r;
  r.text += "vertices = " + std::to_string(k.vertices().size()) + "\n";
  r.text += "dimension = " + std::to_string(k.dimension()) + "\n";
  r.text += "f-vector = " + bracketList(fvector) + "\n";
  r.text += "betti = " + b.toString() + "\n";
  json torsion = json::object();
  for (const auto& d : h.degrees)
    if (!d.torsion.empty()) {
      r.text += "torsion H_" + std::to_string(d.degree) + " = " + bracketList(d.torsion) + "\n";
      torsion[std::to_string(d.degree)] = stringList(d.torsion);
    }
  if (!h.hasTorsion()) r.text += "torsion = none\n";
  r.text += formatIndexed("chi", 0, chis) + "\n";
  r.data = {{"command", "simplicial"},
            {"vertices", k.vertices()},
            {"dimension", k.dimension()},
            {"f_vector", fvector},
            {"betti", stringList(b.values())},
            {"torsion", torsion},
            {"chi", stringList(chis)},
            {"canonical", spaces::serializeFacets(k)}};
  return r;
}

Report spaceReport(const spaces::SpaceExpr& e, std::optional<long> kervaireDimension,
                   bool torusOrder) {
  IntPoly p = spaces::poincareOfExpr(e);
  spaces::BettiVector b = spaces::BettiVector::fromPoincare(p);
  unsigned j = b.size() > 2 ? static_cast<unsigned>(b.size() - 1) : 1u;
  auto chis = spaces::chiSequence(b, j);
  Report r;
  r.text += "space = " + e.toString() + "\n";
  r.text += "betti = " + b.toString() + "\n";
  r.text += "P = " + formatPolynomial(p) + "\n";
  r.text += formatIndexed("chi", 0, chis) + "\n";
  r.data = {{"command", "space"},
            {"space", e.toString()},
            {"betti", stringList(b.values())},
            {"poincare", polynomialToJson(p)},
            {"chi", stringList(chis)}};
  if (kervaireDimension) {
    unsigned k = spaces::kervaire(b, *kervaireDimension);
    r.text += "kervaire(dim " + std::to_string(*kervaireDimension) + ") = " + std::to_string(k) +
              " (chi_1 mod 2 = " + std::to_string(mpz_fdiv_ui(chis[1].get_mpz_t(), 2)) + ")\n";
    r.data["kervaire"] = {{"dimension", *kervaireDimension}, {"value", k}};
  }
  if (torusOrder) {
    unsigned t = spaces::torusOrder(b);
    r.text += "torus order = " + std::to_string(t) + "\n";
    r.data["torus_order"] = t;
  }
  return r;
}

Report symReport(const spaces::BettiVector& b, unsigned order, bool verifyEuler) {
  auto signedPolys = spaces::macdonaldSym(b, order);
  auto unsignedPolys = spaces::macdonaldSymUnsigned(b, order);
  Report r;
  json powers = json::array();
  for (unsigned i = 0; i <= order; ++i) {
    require(spaces::twistSign(signedPolys[i]) == unsignedPolys[i],
            "signed and unsigned symmetric-power products disagree");
    auto betti = spaces::bettiFromSigned(signedPolys[i]);
    r.text += "Sym^" + std::to_string(i) + ": signed P = " + formatPolynomial(signedPolys[i], "z") +
              ", betti = " + betti.toString() + "\n";
    powers.push_back({{"r", i},
                      {"signed_poincare", polynomialToJson(signedPolys[i])},
                      {"poincare", polynomialToJson(unsignedPolys[i])},
                      {"betti", stringList(betti.values())}});
  }
  r.data = {{"command", "sym"},
            {"betti", stringList(b.values())},
            {"order", order},
            {"powers", powers}};
  if (verifyEuler) {
    auto check = spaces::eulerSymGenfun(b, order);
    r.text += "chi(Sym^r) = " + joined(check.fromProduct) + "\n";
    r.text += "(1-t)^(-chi) = " + joined(check.fromClosedForm) + "\n";
    r.text += std::string("euler check: ") + (check.agree ? "OK" : "MISMATCH") + "\n";
    json perOrder = json::array();
    for (unsigned i = 0; i <= order; ++i) perOrder.push_back(check.fromProduct[i] == check.fromClosedForm[i]);
    r.data["euler"] = {{"from_product", stringList(check.fromProduct)},
                       {"closed_form", stringList(check.fromClosedForm)},
                       {"per_order", perOrder},
                       {"agree", check.agree}};
  }
  return r;
}

Report k0Report(const k0::K0Complex& m, const std::optional<k0::RankMap>& ranks,
                std::optional<unsigned> maxJ) {
  long low = m.isZero() ? 0 : m.classes().begin()->first;
  long high = m.isZero() ? 0 : m.classes().rbegin()->first;
  unsigned j = maxJ.value_or(defaultSpan(low, high));
  auto p = k0::k0Poincare(m);
  auto chis = k0::k0ChiSequence(m, j);
  Report r;
  r.text += "P = " + formatPolynomial(p) + "\n";
  r.text += formatIndexed("chi", 0, chis) + "\n";
  json degrees = json::object();
  for (const auto& [d, cls] : m.classes()) degrees[std::to_string(d)] = cls.toString();
  r.data = {{"command", "k0"},
            {"classes", degrees},
            {"generators", m.generators()},
            {"poincare", polynomialToJson(p)},
            {"chi", stringList(chis)},
            {"canonical", k0::serializeK0Complex(m)}};
  if (ranks) {
    IntPoly rp = k0::specializeRank(m, *ranks);
    auto rchis = chain::chiOfPoincare(rp, j);
    for (unsigned i = 0; i <= j; ++i)
      require(chis[i].evaluate(*ranks) == rchis[i], "rank specialization does not commute with chi");
    r.text += "rank P = " + formatPolynomial(rp) + "\n";
    r.text += "rank " + formatIndexed("chi", 0, rchis) + "\n";
    json assignment = json::object();
    for (const auto& [g, v] : *ranks) assignment[g] = v.get_str();
    r.data["rank"] = {{"assignment", assignment},
                      {"poincare", polynomialToJson(rp)},
                      {"chi", stringList(rchis)}};
  }
  return r;
}

Report adamsReport(unsigned long n, unsigned long k) {
  if (k < 1) throw InputError("power k must be at least 1");
  auto ranks = k0::adamsRanks(n, k);
  Integer psi = k0::adamsGrayson(n, k);
  bool ok = psi == n;
  Report r;
  r.text = "psi = " + psi.get_str() + " (expected rank " + std::to_string(n) + ": " +
           (ok ? "OK" : "MISMATCH") + ")\n";
  r.data = {{"command", "adams"}, {"n", n},   {"k", k},
            {"ranks", stringList(ranks)}, {"psi", psi.get_str()}, {"ok", ok}};
  return r;
}

Report motivicReport(const motivic::VarietyExpr& e, std::string_view measure) {
  Report r;
  r.data = {{"command", "motivic"}, {"expression", e.toString()}, {"measure", std::string(measure)}};
  if (measure == "chi_c") {
    Integer v = motivic::measureChiC(e);
    Integer viaPoincare = motivic::measurePoincare(e).evaluate(Integer(-1));
    require(v == viaPoincare, "chi_c routes through mu_H and mu_P disagree");
    r.text = "chi_c = " + v.get_str() + "\n";
    r.data["value"] = v.get_str();
  } else if (measure == "poincare") {
    IntPoly p = motivic::measurePoincare(e);
    auto mu = motivic::higherMeasureCoefficients(e, motivic::Measure::Poincare);
    r.text = "mu_P = " + formatPolynomial(p) + "\n" + formatIndexed("mu", 0, mu) + "\n";
    r.data["value"] = polynomialToJson(p);
    r.data["coefficients"] = stringList(mu);
  } else if (measure == "hodge") {
    auto h = motivic::measureHodge(e);
    r.text = "mu_H = " + h.toString() + "\n";
    json terms = json::array();
    for (const auto& [mono, c] : h.terms())
      terms.push_back({mono.exponentOf("u"), mono.exponentOf("v"), c.get_str()});
    r.data["value"] = h.toString();
    r.data["terms"] = terms;
  } else if (measure == "hodge-higher") {
    auto coeffs = motivic::hodgeHigher(e);
    auto diagonal = motivic::measurePoincare(e);
    IntPoly chi0;
    for (const auto& [exp, c] : diagonal.terms()) chi0.set(exp, c);
    require(coeffs[0] == chi0, "chiH_0 differs from the diagonal evaluation");
    std::string line;
    json list = json::array();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      line += (j ? ", " : "") + indexedName("chiH", static_cast<long>(j)) + " = " +
              formatPolynomial(coeffs[j], "u");
      list.push_back(polynomialToJson(coeffs[j]));
    }
    r.text = line + "\n";
    r.data["value"] = list;
    r.data["variable"] = "u";
  } else if (measure == "count") {
    IntPoly q = motivic::pointCount(e);
    r.text = "count = " + formatPolynomial(q, "q") + "\n";
    r.data["value"] = polynomialToJson(q);
    r.data["variable"] = "q";
  } else {
    throw InputError("unknown measure '" + std::string(measure) +
                     "' (expected chi_c, poincare, hodge, hodge-higher or count)");
  }
  return r;
}

Report fincatReport(const fincat::HomCountMatrix& a, unsigned order) {
  auto f = fincat::seriesFunction(a);
  auto value = fincat::chiSeries(a);
  auto laurent = fincat::chiLaurent(a, order);
  require((laurent.minDegree < 0) == !value.has_value(), "pole detection disagrees");
  if (auto inverseSum = fincat::inverseEntrySum(a))
    require(value && *value == *inverseSum, "chi differs from the entry sum of the inverse");
  auto chains = fincat::chainCounts(a, 6);
  Report r;
  r.text += "f = " + f.toString() + "\n";
  r.text += "chi = " + (value ? value->get_str() : std::string("pole")) + "\n";
  r.text += formatIndexed("chi", laurent.minDegree, laurent.coeffs) + "\n";
  r.data = {{"command", "fincat"},
            {"objects", a.size()},
            {"numerator", polynomialToJson(f.numerator())},
            {"denominator", polynomialToJson(f.denominator())},
            {"chi", value ? json(value->get_str()) : json("pole")},
            {"laurent", taylorToJson(laurent)},
            {"chain_counts", stringList(chains)},
            {"canonical", fincat::serializeHomCounts(a)}};
  return r;
}

Report selfcheckReport(bool injectFault) {
  struct Check {
    std::string name;
    std::function<std::string()> observed;
    std::string expected;
  };
  std::vector<Check> checks = {
      {"chi of S^3", [] { return spaces::chi({1, 0, 0, 1}, 1).get_str(); }, "3"},
      {"taylor shift of S^3",
       [] { return joined(chiSequence(std::vector<Integer>{1, 0, 0, 1}, 3)); }, "0, 3, -3, 1"},
      {"adams grid",
       [] {
         for (unsigned long n = 0; n <= 4; ++n)
           for (unsigned long k = 1; k <= 4; ++k)
             if (k0::adamsGrayson(n, k) != n) return std::string("fail");
         return std::string("ok");
       },
       "ok"},
      {"hollow triangle",
       [] {
         spaces::SimplicialComplex k({{"1", "2"}, {"1", "3"}, {"2", "3"}});
         return spaces::bettiOfComplex(k).toString();
       },
       "[1, 1]"},
      {"pole category",
       [] {
         auto t = fincat::chiLaurent(fincat::HomCountMatrix{{2, 1}, {4, 2}}, 1);
         return formatIndexed("chi", t.minDegree, t.coeffs);
       },
       "chi_{-1} = -1/4, chi_0 = 9/16, chi_1 = 27/64"},
      {"elliptic curve",
       [] {
         auto c = motivic::hodgeHigher(motivic::VarietyExpr::curve(1));
         return formatPolynomial(c[0], "u") + "; " + formatPolynomial(c[1], "u");
       },
       "1 + 2*u + u^2; 1 + u"},
  };
  if (injectFault) checks.front().expected = "2";
  Report r;
  json results = json::array();
  for (const auto& c : checks) {
    std::string got = c.observed();
    if (got != c.expected)
      throw InvariantViolation("selfcheck '" + c.name + "' failed: expected " + c.expected +
                               ", got " + got);
    r.text += "check " + c.name + ": OK\n";
    results.push_back({{"name", c.name}, {"value", got}});
  }
  r.text += "selfcheck: " + std::to_string(checks.size()) + " checks passed\n";
  r.data = {{"command", "selfcheck"}, {"checks", results}};
  return r;
}

} // namespace eulertower::report
