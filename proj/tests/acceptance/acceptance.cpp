// SPDX-License-Identifier: Apache-2.0
// Acceptance harness: one PASS/FAIL line per criterion.
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "eulertower/chain/complex.hpp"
#include "eulertower/chain/constructions.hpp"
#include "eulertower/error.hpp"
#include "eulertower/fincat/fincat.hpp"
#include "eulertower/k0/k0.hpp"
#include "eulertower/motivic/measures.hpp"
#include "eulertower/polycore/taylor.hpp"
#include "eulertower/spaces/macdonald.hpp"
#include "eulertower/spaces/simplicial.hpp"
#include "eulertower/spaces/space_expr.hpp"
#include "generators.hpp"

using namespace eulertower;

namespace {

std::string cliPath;
std::string dataDir;

// Records the first failed check of a criterion.
struct Check {
  std::string failure;
  void operator()(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

std::string slurp(const std::string& name) {
  std::ifstream in(dataDir + "/" + name);
  if (!in) throw InputError("cannot open " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

spaces::BettiVector bettiOf(const spaces::SpaceExpr& e) { return spaces::bettiOfExpr(e); }

std::vector<Integer> seq(const spaces::SpaceExpr& e, unsigned n) {
  return spaces::chiSequence(bettiOf(e), n);
}

void goldenValues(Check& check) {
  spaces::BettiVector s1{1, 1}, s2{1, 0, 1}, s3{1, 0, 0, 1};
  auto c = spaces::chiSequence(s1, 8);
  for (unsigned j = 0; j <= 8; ++j) check(c[j] == (j == 1 ? 1 : 0), "chi_j(S^1)");
  Integer hopf = spaces::chi(s2, 0) * spaces::chi(s1, 1) + spaces::chi(s2, 1) * spaces::chi(s1, 0);
  check(spaces::chi(s3, 1) == 3, "chi'(S^3) = 3");
  check(spaces::chi(s2, 0) == 2 && spaces::chi(s2, 1) == -2, "chi(S^2), chi'(S^2)");
  check(hopf == 2 && spaces::chi(s3, 1) != hopf, "3 != 2 x 1 + (-2) x 0");
  gen::Rng rng(101);
  for (int i = 0; i < 50; ++i) {
    auto m = gen::spaceAtom(rng), n = gen::spaceAtom(rng);
    check(seq(m * spaces::SpaceExpr::sphere(1), 1)[1] == seq(m, 0)[0], "chi'(M x S^1) = chi(M)");
    auto cm = seq(m, 1), cn = seq(n, 1);
    check(seq(m * n, 1)[1] == cm[0] * cn[1] + cm[1] * cn[0], "chi' bilinearity");
  }
}

void taylorEquivalence(Check& check) {
  gen::Rng rng(102);
  for (int i = 0; i < 1000; ++i) {
    auto b = gen::bettiValues(rng, 10, 9);
    auto shifted = reexpand(IntPoly::fromDense(b), Integer(-1));
    for (unsigned j = 0; j < b.size() + 2; ++j)
      check(chiFromBetti(b, j) == shifted.at(j), "chiFromBetti vs Taylor shift");
  }
}

void productSuites(Check& check) {
  gen::Rng rng(103);
  for (int i = 0; i < 100; ++i) {
    unsigned j = static_cast<unsigned>(rng.uniform(0, 3));
    unsigned k = static_cast<unsigned>(rng.uniform(0, 3));
    auto n0 = gen::spaceExpr(rng, 2), n1 = gen::spaceExpr(rng, 2);
    auto m = n0 * spaces::SpaceExpr::torus(j), n = n1 * spaces::SpaceExpr::torus(k);
    auto cm = seq(m, j + 1), cn = seq(n, k + 1), c = seq(m * n, j + k + 1);
    for (unsigned r = 0; r < j; ++r) check(cm[r] == 0, "low chi vanish on torus factors");
    for (unsigned r = 0; r < j + k; ++r) check(c[r] == 0, "low chi vanish on products");
    check(c[j + k] == cm[j] * cn[k], "chi_{j+k}(M x N)");
    check(c[j + k + 1] == cm[j] * cn[k + 1] + cm[j + 1] * cn[k], "chi_{j+k+1}(M x N)");
    check(cm[j] == seq(n0, 0)[0], "chi_j(N x T^j) = chi(N)");
  }
  for (int i = 0; i < 60; ++i) {
    unsigned j = static_cast<unsigned>(rng.uniform(0, 2));
    auto a = chain::iteratedCone(gen::complex(rng, 2, 2), j, Integer(rng.uniform(-2, 2)));
    auto b = chain::iteratedCone(gen::complex(rng, 2, 2), j);
    auto ca = chain::chiSequence(a, j + 1), cb = chain::chiSequence(b, j + 1);
    for (unsigned r = 0; r < j; ++r) check(ca[r] == 0, "low chi vanish on iterated cones");
    auto c = chain::chiSequence(chain::tensor(a, b), 2 * j + 1);
    for (unsigned r = 0; r < 2 * j; ++r) check(c[r] == 0, "low chi vanish on cone tensors");
    check(c[2 * j] == ca[j] * cb[j], "chi_2j(A (x) B)");
    check(c[2 * j + 1] == ca[j] * cb[j + 1] + ca[j + 1] * cb[j], "chi_2j+1(A (x) B)");
    auto n = gen::complex(rng, 3, 3);
    auto cn = chain::chiSequence(n, 6);
    auto once = chain::chiSequence(chain::cone(chain::ChainMap::scalar(n, Integer(rng.uniform(-3, 3)))), 7);
    for (unsigned r = 0; r <= 6; ++r) check(once[r + 1] == cn[r], "chi_{j+1}(CN) = chi_j(N)");
    unsigned depth = static_cast<unsigned>(rng.uniform(1, 3));
    auto it = chain::chiSequence(chain::iteratedCone(n, depth), 6 + depth);
    for (unsigned r = 0; r < depth; ++r) check(it[r] == 0, "j-fold cone low chi");
    for (unsigned r = 0; r <= 6; ++r) check(it[r + depth] == cn[r], "j-fold cone shift");
  }
  for (int i = 0; i < 40; ++i) {
    auto m = k0::iteratedCone(gen::k0Complex(rng, 0, 2), 1);
    auto n = k0::iteratedCone(gen::k0Complex(rng, -1, 1), 1);
    auto cm = k0::k0ChiSequence(m, 2), cn = k0::k0ChiSequence(n, 2);
    auto c = k0::k0ChiSequence(k0::k0Tensor(m, n), 3);
    check(c[0].isZero() && c[1].isZero(), "K0 low chi vanish");
    check(c[2] == cm[1] * cn[1], "K0 chi_2");
    check(c[3] == cm[1] * cn[2] + cm[2] * cn[1], "K0 chi_3");
  }
}

void kervaireParity(Check& check) {
  gen::Rng rng(104);
  for (int i = 0; i < 500; ++i) {
    auto b = gen::dualBetti(rng, 11, 9);
    long dim = static_cast<long>(b.size()) - 1;
    Integer c1 = spaces::chi(b, 1);
    check(spaces::kervaire(b, dim) == mpz_fdiv_ui(c1.get_mpz_t(), 2), "chi' = K mod 2");
  }
}

void homologyEngine(Check& check) {
  using spaces::BettiVector;
  check(spaces::bettiOfComplex(spaces::parseFacets(slurp("hollow-triangle.facets"))) ==
            BettiVector{1, 1},
        "hollow triangle");
  check(spaces::bettiOfComplex(spaces::parseFacets(slurp("octahedron.facets"))) ==
            BettiVector{1, 0, 1},
        "octahedron");
  auto torus = spaces::parseFacets(slurp("torus7.facets"));
  check(spaces::bettiOfComplex(torus) == BettiVector{1, 2, 1}, "7-vertex torus");
  check(!spaces::homologyOfComplex(torus).hasTorsion(), "torus torsion-free");
  chain::ChainComplex times2(0, 1, {1, 1}, {{1, chain::IntegerMatrix(1, 1, {Integer(2)})}});
  check(chain::homology(times2).at(0).torsion == std::vector<Integer>{2}, "Z --x2--> Z");
}

void rankKunneth(Check& check) {
  gen::Rng rng(106);
  for (int i = 0; i < 100; ++i) {
    auto a = gen::complex(rng, 3, 3), b = gen::complex(rng, 3, 3);
    auto ha = chain::homology(a).bettiRanks(), hb = chain::homology(b).bettiRanks();
    std::vector<std::size_t> expected(ha.size() + hb.size() - 1, 0);
    for (std::size_t p = 0; p < ha.size(); ++p)
      for (std::size_t q = 0; q < hb.size(); ++q) expected[p + q] += ha[p] * hb[q];
    check(chain::homology(chain::tensor(a, b)).bettiRanks() == expected, "rank Kunneth");
  }
}

void macdonaldSuite(Check& check) {
  using spaces::BettiVector;
  auto s2 = spaces::macdonaldSym(BettiVector{1, 0, 1}, 6);
  for (unsigned r = 0; r <= 6; ++r)
    check(spaces::bettiFromSigned(s2[r]) == bettiOf(spaces::SpaceExpr::complexProjective(r)),
          "Sym^r S^2 = CP^r");
  auto s1 = spaces::macdonaldSym(BettiVector{1, 1}, 6);
  for (unsigned r = 1; r <= 6; ++r)
    check(s1[r] == IntPoly::fromDense({Integer(1), Integer(-1)}), "Sym^r S^1 = 1 - z");
  gen::Rng rng(107);
  for (int i = 0; i < 20; ++i) {
    auto b = gen::betti(rng, 5, 3);
    check(spaces::eulerSymGenfun(b, 8).agree, "(1-t)^(-chi) identity");
    auto sgn = spaces::macdonaldSym(b, 5), uns = spaces::macdonaldSymUnsigned(b, 5);
    for (unsigned r = 0; r <= 5; ++r) check(spaces::twistSign(sgn[r]) == uns[r], "z -> -z");
  }
}

void adamsGrid(Check& check) {
  for (unsigned long n = 0; n <= 8; ++n)
    for (unsigned long k = 1; k <= 8; ++k)
      check(k0::adamsGrayson(n, k) == Integer(n), "adamsGrayson = n");
}

void motivicSuite(Check& check) {
  using V = motivic::VarietyExpr;
  gen::Rng rng(109);
  auto u = SymbolicPolynomial::generator("u");
  for (int i = 0; i < 200; ++i) {
    auto e = gen::varietyExpr(rng, 4);
    auto hh = motivic::hodgeHigher(e);
    check(SymbolicPolynomial::fromUnivariate(hh[0], "u") ==
              motivic::measureHodge(e).substitute({{"v", u}}),
          "chi_0^H = mu_H(u, u)");
    auto f = gen::varietyExpr(rng, 3);
    check(motivic::measureHodge(e * f) == motivic::measureHodge(e) * motivic::measureHodge(f),
          "mu_H multiplicative");
    check(motivic::measureHodge(e - f) == motivic::measureHodge(e) - motivic::measureHodge(f),
          "mu_H additive");
    check(motivic::measurePoincare(e * f) ==
              motivic::measurePoincare(e) * motivic::measurePoincare(f),
          "mu_P multiplicative");
  }
  for (unsigned n = 0; n <= 6; ++n) check(motivic::measureChiC(V::projective(n)) == n + 1, "chi_c(P(n))");
  for (unsigned g = 0; g <= 5; ++g)
    check(motivic::measureChiC(V::curve(g)) == 2 - 2 * static_cast<long>(g), "chi_c(C(g))");
  check(motivic::measureChiC(V::torus()) == 0, "chi_c(Gm)");
  auto ell = motivic::hodgeHigher(V::curve(1));
  check(ell.size() == 2 && ell[0] == IntPoly::fromDense({Integer(1), Integer(2), Integer(1)}) &&
            ell[1] == IntPoly::fromDense({Integer(1), Integer(1)}),
        "elliptic curve expansion");
}

void fincatSuite(Check& check) {
  using fincat::HomCountMatrix;
  auto one = fincat::chiLaurent(HomCountMatrix{{2}}, 2);
  check(one.minDegree == 0 && one.at(0) == Rational(1, 2) && one.at(1) == Rational(1, 4) &&
            one.at(2) == Rational(1, 8),
        "f([2]) coefficients");
  auto f = fincat::seriesFunction(HomCountMatrix{{2}});
  check(f == RationalFunction(RatPoly(Rational(1)), RatPoly::fromDense({Rational(1), Rational(-1)})),
        "f([2]) = 1/(1-t)");
  check(fincat::chiSeries(HomCountMatrix{{1, 1}, {0, 1}}) == Rational(1), "arrow");
  for (std::size_t n = 1; n <= 5; ++n)
    check(fincat::chiSeries(HomCountMatrix::discrete(n)) == Rational(n), "discrete");
  auto pole = fincat::chiLaurent(fincat::parseHomCounts(slurp("two-object-pole.mat")), 1);
  check(pole.minDegree == -1 && pole.at(-1) == Rational(-1, 4) && pole.at(0) == Rational(9, 16) &&
            pole.at(1) == Rational(27, 64),
        "pole instance");
  gen::Rng rng(110);
  int invertible = 0;
  for (int i = 0; i < 100; ++i) {
    auto a = gen::homCounts(rng, 3, 3), b = gen::homCounts(rng, 3, 3);
    auto ab = HomCountMatrix::blockDiagonal(a, b);
    check(fincat::seriesFunction(ab) == fincat::seriesFunction(a) + fincat::seriesFunction(b),
          "block-diagonal additivity");
    auto la = fincat::chiLaurent(a, 2), lb = fincat::chiLaurent(b, 2), lab = fincat::chiLaurent(ab, 2);
    for (long j = -3; j <= 2; ++j)
      check(lab.at(j) == Rational(la.at(j) + lb.at(j)), "block-diagonal Laurent additivity");
    if (auto inv = fincat::inverseEntrySum(a)) {
      ++invertible;
      check(fincat::chiSeries(a) == inv, "chi = sum of entries of A^-1");
    }
  }
  check(invertible > 10, "enough invertible samples");
}

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  std::string cmd = "\"" + cliPath + "\" " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw InputError("cannot start " + cliPath);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void cliDeterminism(Check& check) {
  const std::string d = "\"" + dataDir + "/";
  const std::vector<std::string> runs = {
      "complex " + d + "times-two.cx\"",
      "complex " + d + "identity.cx\"",
      "complex " + d + "koszul-cohomological.cx\"",
      "--format structured complex " + d + "koszul-cohomological.cx\"",
      "simplicial " + d + "hollow-triangle.facets\"",
      "simplicial " + d + "octahedron.facets\"",
      "simplicial " + d + "torus7.facets\"",
      "k0 " + d + "cone.k0\" --rank g=3",
      "k0 " + d + "tensor.k0\"",
      "fincat " + d + "two-object-pole.mat\" --order 2",
      "fincat " + d + "one-object.mat\" --order 2",
      "--format structured fincat " + d + "arrow.mat\" --order 1",
      "chi --betti 1,0,0,1",
      "space 'S(3) * T(2)' --torus-order",
      "sym --betti 1,0,1 --order 6 --verify-euler",
      "adams --n 8 --k 8",
      "motivic 'C(1)' --measure hodge-higher",
      "selfcheck",
  };
  for (const auto& args : runs) {
    auto a = cli(args), b = cli(args);
    check(a.code == 0 && !a.out.empty(), "exit 0: " + args);
    check(a.out == b.out, "byte-identical: " + args);
  }
  check(cli("chi").code == 1, "usage error exits 1");
  check(cli("motivic 'C(1)' --measure count").code == 1, "input error exits 1");
  check(cli("complex " + d + "missing.cx\"").code == 1, "missing file exits 1");
  check(cli("selfcheck --inject-fault").code == 2, "internal error exits 2");
}

} // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance CLI_PATH DATA_DIR\n";
    return 2;
  }
  cliPath = argv[1];
  dataDir = argv[2];
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"golden values", goldenValues},
      {"binomial sum equals Taylor shift", taylorEquivalence},
      {"product and cone suites", productSuites},
      {"Kervaire parity", kervaireParity},
      {"homology engine", homologyEngine},
      {"rank Kunneth oracle", rankKunneth},
      {"symmetric powers", macdonaldSuite},
      {"Grayson Adams grid", adamsGrid},
      {"motivic measures", motivicSuite},
      {"finite categories", fincatSuite},
      {"CLI determinism and exit codes", cliDeterminism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    bool ok = check.failure.empty();
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!ok) std::cout << " (" << check.failure << ")";
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
