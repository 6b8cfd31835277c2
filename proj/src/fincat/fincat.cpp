// SPDX-License-Identifier: Apache-2.0
#include "eulertower/fincat/fincat.hpp"

#include <sstream>

#include "eulertower/error.hpp"

namespace eulertower::fincat {

HomCountMatrix::HomCountMatrix(std::vector<std::vector<Integer>> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != rows_.size())
      throw InputError("row " + std::to_string(i + 1) + " has " + std::to_string(rows_[i].size()) +
                       " entries, expected " + std::to_string(rows_.size()));
    for (const auto& x : rows_[i])
      if (sgn(x) < 0) throw InputError("hom counts must be nonnegative");
    if (rows_[i][i] < 1)
      throw InputError("object " + std::to_string(i + 1) + " has no identity morphism");
  }
}

HomCountMatrix::HomCountMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : HomCountMatrix([&] {
        std::vector<std::vector<Integer>> out;
        for (const auto& r : rows) {
          std::vector<Integer> row;
          for (long x : r) row.emplace_back(x);
          out.push_back(std::move(row));
        }
        return out;
      }()) {}

HomCountMatrix HomCountMatrix::discrete(std::size_t n) {
  std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return HomCountMatrix(std::move(rows));
}

HomCountMatrix HomCountMatrix::blockDiagonal(const HomCountMatrix& a, const HomCountMatrix& b) {
  std::size_t n = a.size() + b.size();
  std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) rows[i][j] = a.at(i, j);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) rows[a.size() + i][a.size() + j] = b.at(i, j);
  return HomCountMatrix(std::move(rows));
}

HomCountMatrix parseHomCounts(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::vector<std::string> tokens;
    std::string w;
    while (words >> w) tokens.push_back(w);
    if (!tokens.empty()) lines.emplace_back(number, std::move(tokens));
  }
  auto fail = [](std::size_t line, const std::string& message) -> void {
    throw ParseError(message, ParseError::Where::Line, line);
  };
  auto integer = [&](std::size_t line, const std::string& token) {
    Integer v;
    if (token.find_first_not_of("0123456789") != std::string::npos || v.set_str(token, 10) != 0)
      fail(line, "expected a nonnegative integer, got '" + token + "'");
    return v;
  };
  if (lines.empty()) throw ParseError("missing object count", ParseError::Where::Line, 1);
  if (lines[0].second.size() != 1) fail(lines[0].first, "first line must hold the object count");
  Integer n = integer(lines[0].first, lines[0].second[0]);
  if (n < 1 || n > 64) fail(lines[0].first, "object count must be between 1 and 64");
  std::size_t size = n.get_ui();
  if (lines.size() != size + 1)
    fail(lines.back().first, "expected " + std::to_string(size) + " rows, got " +
                                 std::to_string(lines.size() - 1));
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 1; i <= size; ++i) {
    const auto& [line, tokens] = lines[i];
    if (tokens.size() != size)
      fail(line, "expected " + std::to_string(size) + " entries, got " + std::to_string(tokens.size()));
    std::vector<Integer> row;
    for (const auto& t : tokens) row.push_back(integer(line, t));
    if (row[i - 1] < 1) fail(line, "diagonal entry must be at least 1");
    rows.push_back(std::move(row));
  }
  return HomCountMatrix(std::move(rows));
}

std::string serializeHomCounts(const HomCountMatrix& a) {
  std::string out = std::to_string(a.size()) + "\n";
  for (const auto& row : a.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + row[j].get_str();
    out += "\n";
  }
  return out;
}

RatPoly bareissDeterminant(std::vector<std::vector<RatPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return RatPoly(Rational(1));
  RatPoly previous(Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].isZero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].isZero()) ++swap;
      if (swap == n) return RatPoly();
      std::swap(m[k], m[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto [q, r] = divmod(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous);
        require(r.isZero(), "inexact Bareiss division");
        m[i][j] = std::move(q);
      }
      m[i][k] = RatPoly();
    }
    previous = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

RationalFunction seriesFunction(const HomCountMatrix& a) {
  const std::size_t n = a.size();
  const RatPoly t = RatPoly::monomial(1, Rational(1));
  // M = I - t(A - I), bordered by ones: det [[M, 1], [1^T, 0]] = -1^T adj(M) 1.
  std::vector<std::vector<RatPoly>> m(n, std::vector<RatPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational off(a.at(i, j) - (i == j ? 1 : 0));
      m[i][j] = (i == j ? RatPoly(Rational(1)) : RatPoly()) - t.scaled(off);
    }
  std::vector<std::vector<RatPoly>> bordered = m;
  for (auto& row : bordered) row.push_back(RatPoly(Rational(1)));
  bordered.emplace_back(n, RatPoly(Rational(1)));
  bordered.back().push_back(RatPoly());
  RatPoly den = bareissDeterminant(std::move(m));
  require(!den.isZero(), "det(I - t(A - I)) vanished identically");
  return RationalFunction(-bareissDeterminant(std::move(bordered)), den);
}

std::vector<Integer> chainCounts(const HomCountMatrix& a, unsigned maxK) {
  const std::size_t n = a.size();
  std::vector<Integer> v(n, Integer(1));
  std::vector<Integer> out;
  for (unsigned k = 0; k <= maxK; ++k) {
    Integer total = 0;
    for (const auto& x : v) total += x;
    out.push_back(total);
    std::vector<Integer> next(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) next[i] += (a.at(i, j) - (i == j ? 1 : 0)) * v[j];
    v = std::move(next);
  }
  return out;
}

std::optional<Rational> chiSeries(const HomCountMatrix& a) {
  return seriesFunction(a).evaluate(Rational(-1));
}

TaylorCoefficients<Rational> chiLaurent(const HomCountMatrix& a, unsigned order) {
  return laurentExpand(seriesFunction(a), Rational(-1), order);
}

std::optional<Rational> inverseEntrySum(const HomCountMatrix& a) {
  const std::size_t n = a.size();
  // Solve A x = 1 by Gauss-Jordan over Q; the entry sum of A^{-1} is 1^T x.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a.at(i, j));
    m[i][n] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[c], m[p]);
    Rational pivot = m[c][c];
    for (auto& x : m[c]) x /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i) total += m[i][n];
  return total;
}

} // namespace eulertower::fincat
