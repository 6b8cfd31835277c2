// SPDX-License-Identifier: Apache-2.0
#include "eulertower/polycore/symbolic.hpp"

#include <cctype>

#include "eulertower/error.hpp"

namespace eulertower {

Monomial::Monomial(const std::string& generator, unsigned exponent) {
  if (exponent > 0) powers_[generator] = exponent;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [g, e] : powers_) d += e;
  return d;
}

unsigned Monomial::exponentOf(const std::string& generator) const {
  auto it = powers_.find(generator);
  return it == powers_.end() ? 0 : it->second;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out = *this;
  for (const auto& [g, e] : o.powers_) out.powers_[g] += e;
  return out;
}

Monomial Monomial::without(const std::string& generator) const {
  Monomial out = *this;
  out.powers_.erase(generator);
  return out;
}

bool Monomial::operator<(const Monomial& o) const {
  unsigned da = degree(), db = o.degree();
  if (da != db) return da < db;
  // Same total degree: compare as sorted multisets of names.
  std::vector<std::string> a, b;
  for (const auto& [g, e] : powers_) a.insert(a.end(), e, g);
  for (const auto& [g, e] : o.powers_) b.insert(b.end(), e, g);
  return a < b;
}

std::string Monomial::toString() const {
  std::string out;
  for (const auto& [g, e] : powers_) {
    if (!out.empty()) out += "*";
    out += g;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

SymbolicPolynomial::SymbolicPolynomial(const Integer& constant) {
  addTo(Monomial(), constant);
}

SymbolicPolynomial SymbolicPolynomial::generator(const std::string& name) {
  return term(Monomial(name), 1);
}

SymbolicPolynomial SymbolicPolynomial::term(const Monomial& m, const Integer& c) {
  SymbolicPolynomial p;
  p.addTo(m, c);
  return p;
}

Integer SymbolicPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<std::string> SymbolicPolynomial::generators() const {
  std::map<std::string, bool> seen;
  for (const auto& [m, c] : terms_)
    for (const auto& [g, e] : m.powers()) seen[g] = true;
  std::vector<std::string> out;
  for (const auto& [g, _] : seen) out.push_back(g);
  return out;
}

void SymbolicPolynomial::addTo(const Monomial& m, const Integer& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

SymbolicPolynomial SymbolicPolynomial::operator-() const {
  SymbolicPolynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, Integer(-c));
  return out;
}

SymbolicPolynomial& SymbolicPolynomial::operator+=(const SymbolicPolynomial& o) {
  for (const auto& [m, c] : o.terms_) addTo(m, c);
  return *this;
}

SymbolicPolynomial& SymbolicPolynomial::operator-=(const SymbolicPolynomial& o) {
  for (const auto& [m, c] : o.terms_) addTo(m, Integer(-c));
  return *this;
}

SymbolicPolynomial operator*(const SymbolicPolynomial& a, const SymbolicPolynomial& b) {
  SymbolicPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.addTo(ma * mb, Integer(ca * cb));
  return out;
}

SymbolicPolynomial SymbolicPolynomial::pow(unsigned n) const {
  SymbolicPolynomial result(1);
  SymbolicPolynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Integer SymbolicPolynomial::evaluate(const std::map<std::string, Integer>& values) const {
  Integer total = 0;
  for (const auto& [m, c] : terms_) {
    Integer value = c;
    for (const auto& [g, e] : m.powers()) {
      auto it = values.find(g);
      if (it == values.end()) throw InputError("unassigned generator '" + g + "'");
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), it->second.get_mpz_t(), e);
      value *= p;
    }
    total += value;
  }
  return total;
}

SymbolicPolynomial SymbolicPolynomial::substitute(
    const std::map<std::string, SymbolicPolynomial>& images) const {
  SymbolicPolynomial out;
  for (const auto& [m, c] : terms_) {
    SymbolicPolynomial value(c);
    for (const auto& [g, e] : m.powers()) {
      auto it = images.find(g);
      value = value * (it == images.end() ? term(Monomial(g, e), 1) : it->second.pow(e));
    }
    out += value;
  }
  return out;
}

LaurentPolynomial<SymbolicPolynomial> collect(const SymbolicPolynomial& p, const std::string& var) {
  LaurentPolynomial<SymbolicPolynomial> out;
  for (const auto& [m, c] : p.terms())
    out.addTo(static_cast<long>(m.exponentOf(var)), SymbolicPolynomial::term(m.without(var), c));
  return out;
}

SymbolicPolynomial uncollect(const LaurentPolynomial<SymbolicPolynomial>& p, const std::string& var) {
  if (!p.isPolynomial()) throw InputError("negative exponent in symbolic conversion");
  SymbolicPolynomial out;
  for (const auto& [e, c] : p.terms())
    out += c * SymbolicPolynomial::term(Monomial(var, static_cast<unsigned>(e)), 1);
  return out;
}

IntPoly SymbolicPolynomial::toUnivariate(const std::string& var) const {
  IntPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.degree() != m.exponentOf(var))
      throw InputError("polynomial involves generators other than '" + var + "'");
    out.addTo(static_cast<long>(m.exponentOf(var)), c);
  }
  return out;
}

SymbolicPolynomial SymbolicPolynomial::fromUnivariate(const IntPoly& p, const std::string& var) {
  if (!p.isPolynomial()) throw InputError("negative exponent in symbolic conversion");
  SymbolicPolynomial out;
  for (const auto& [e, c] : p.terms()) out.addTo(Monomial(var, static_cast<unsigned>(e)), c);
  return out;
}

std::string SymbolicPolynomial::toString() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = sgn(c) < 0;
    Integer mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (m.isUnit())
      out += mag.get_str();
    else if (mag == 1)
      out += m.toString();
    else
      out += mag.get_str() + "*" + m.toString();
  }
  return out;
}

namespace {

// term := factor ('*' factor)* ; factor := integer | name ('^' integer)?
class SymbolicParser {
public:
  explicit SymbolicParser(std::string_view text) : text_(text) {}

  SymbolicPolynomial parse() {
    SymbolicPolynomial total;
    skipSpace();
    bool negative = false;
    if (peek('-') || peek('+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    total += signedTerm(negative);
    while (true) {
      skipSpace();
      if (pos_ >= text_.size()) break;
      char op = text_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      total += signedTerm(op == '-');
    }
    return total;
  }

private:
  SymbolicPolynomial signedTerm(bool negative) {
    SymbolicPolynomial t = factor();
    while (true) {
      skipSpace();
      if (!peek('*')) break;
      ++pos_;
      t = t * factor();
    }
    return negative ? -t : t;
  }

  SymbolicPolynomial factor() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return SymbolicPolynomial(Integer(number()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      unsigned exponent = 1;
      skipSpace();
      if (peek('^')) {
        ++pos_;
        skipSpace();
        exponent = static_cast<unsigned>(std::stoul(number()));
      }
      return SymbolicPolynomial::term(Monomial(name, exponent), 1);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, ParseError::Where::Offset, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

SymbolicPolynomial SymbolicPolynomial::parse(std::string_view text) {
  return SymbolicParser(text).parse();
}

} // namespace eulertower
