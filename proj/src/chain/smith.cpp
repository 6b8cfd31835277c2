// SPDX-License-Identifier: Apache-2.0
#include "eulertower/chain/smith.hpp"

#include <optional>
#include <utility>

namespace eulertower::chain {

namespace {

void swapRows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swapCols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[target] -= q * row[source], restricted to columns >= from
void subtractRow(IntegerMatrix& m, std::size_t target, std::size_t source, const Integer& q,
                 std::size_t from) {
  for (std::size_t c = from; c < m.cols(); ++c) m(target, c) -= q * m(source, c);
}

void subtractCol(IntegerMatrix& m, std::size_t target, std::size_t source, const Integer& q,
                 std::size_t from) {
  for (std::size_t r = from; r < m.rows(); ++r) m(r, target) -= q * m(r, source);
}

bool smaller(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }

// Moves the smallest nonzero entry of the trailing submatrix to (t, t).
bool selectPivot(IntegerMatrix& m, std::size_t t) {
  std::size_t br = 0, bc = 0;
  bool found = false;
  for (std::size_t r = t; r < m.rows(); ++r)
    for (std::size_t c = t; c < m.cols(); ++c) {
      if (sgn(m(r, c)) == 0) continue;
      if (!found || smaller(m(r, c), m(br, bc))) {
        br = r;
        bc = c;
        found = true;
      }
    }
  if (!found) return false;
  swapRows(m, t, br);
  swapCols(m, t, bc);
  return true;
}

// After a reduction pass left remainders in column t or row t, moves the
// smallest remainder to (t, t); column candidates win ties.
void repivotLine(IntegerMatrix& m, std::size_t t) {
  std::optional<std::size_t> bestRow, bestCol;
  for (std::size_t r = t + 1; r < m.rows(); ++r)
    if (sgn(m(r, t)) != 0 && (!bestRow || smaller(m(r, t), m(*bestRow, t)))) bestRow = r;
  for (std::size_t c = t + 1; c < m.cols(); ++c)
    if (sgn(m(t, c)) != 0 && (!bestCol || smaller(m(t, c), m(t, *bestCol)))) bestCol = c;
  if (bestRow && (!bestCol || !smaller(m(t, *bestCol), m(*bestRow, t))))
    swapRows(m, t, *bestRow);
  else if (bestCol)
    swapCols(m, t, *bestCol);
}

} // namespace

SmithForm smithNormalForm(IntegerMatrix m) {
  SmithForm out;
  std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    if (!selectPivot(m, t)) break;
    while (true) {
      bool residue = false;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (sgn(m(r, t)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), m(t, t).get_mpz_t());
        subtractRow(m, r, t, q, t);
        if (sgn(m(r, t)) != 0) residue = true;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (sgn(m(t, c)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), m(t, t).get_mpz_t());
        subtractCol(m, c, t, q, t);
        if (sgn(m(t, c)) != 0) residue = true;
      }
      if (residue) {
        repivotLine(m, t);
        continue;
      }
      // Pivot row and column are clear; enforce divisibility of the rest.
      bool fixed = false;
      for (std::size_t r = t + 1; r < m.rows() && !fixed; ++r)
        for (std::size_t c = t + 1; c < m.cols(); ++c) {
          if (mpz_divisible_p(m(r, c).get_mpz_t(), m(t, t).get_mpz_t())) continue;
          subtractRow(m, t, r, Integer(-1), t);
          fixed = true;
          break;
        }
      if (!fixed) break;
    }
    out.invariantFactors.push_back(abs(m(t, t)));
    ++out.rank;
  }
  return out;
}

} // namespace eulertower::chain
