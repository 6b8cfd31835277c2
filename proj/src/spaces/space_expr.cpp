// SPDX-License-Identifier: Apache-2.0
#include "eulertower/spaces/space_expr.hpp"

#include <cctype>
#include <vector>

#include "eulertower/error.hpp"

namespace eulertower::spaces {

struct SpaceExpr::Node {
  Kind kind;
  unsigned parameter = 0;
  std::vector<SpaceExpr> operands;
};

SpaceExpr SpaceExpr::leaf(Kind kind, unsigned parameter) {
  return SpaceExpr(std::make_shared<const Node>(Node{kind, parameter, {}}));
}

SpaceExpr SpaceExpr::point() { return leaf(Kind::Point, 0); }
SpaceExpr SpaceExpr::sphere(unsigned n) { return leaf(Kind::Sphere, n); }
SpaceExpr SpaceExpr::torus(unsigned n) { return leaf(Kind::Torus, n); }
SpaceExpr SpaceExpr::surface(unsigned g) { return leaf(Kind::Surface, g); }
SpaceExpr SpaceExpr::complexProjective(unsigned n) { return leaf(Kind::ComplexProjective, n); }

SpaceExpr operator*(const SpaceExpr& a, const SpaceExpr& b) {
  return SpaceExpr(std::make_shared<const SpaceExpr::Node>(
      SpaceExpr::Node{SpaceExpr::Kind::Product, 0, {a, b}}));
}

SpaceExpr operator+(const SpaceExpr& a, const SpaceExpr& b) {
  return SpaceExpr(std::make_shared<const SpaceExpr::Node>(
      SpaceExpr::Node{SpaceExpr::Kind::DisjointUnion, 0, {a, b}}));
}

SpaceExpr::Kind SpaceExpr::kind() const { return node_->kind; }
unsigned SpaceExpr::parameter() const { return node_->parameter; }

const SpaceExpr& SpaceExpr::left() const {
  if (node_->operands.empty()) throw InputError("atom has no operands");
  return node_->operands[0];
}

const SpaceExpr& SpaceExpr::right() const {
  if (node_->operands.empty()) throw InputError("atom has no operands");
  return node_->operands[1];
}

bool SpaceExpr::operator==(const SpaceExpr& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind() || parameter() != o.parameter()) return false;
  if (node_->operands.empty()) return true;
  return left() == o.left() && right() == o.right();
}

std::string SpaceExpr::toString() const {
  switch (kind()) {
  case Kind::Point: return "pt";
  case Kind::Sphere: return "S(" + std::to_string(parameter()) + ")";
  case Kind::Torus: return "T(" + std::to_string(parameter()) + ")";
  case Kind::Surface: return "Sg(" + std::to_string(parameter()) + ")";
  case Kind::ComplexProjective: return "CP(" + std::to_string(parameter()) + ")";
  case Kind::DisjointUnion: {
    // '+' is left-associative, so a sum on the right needs parentheses.
    std::string r = right().toString();
    if (right().kind() == Kind::DisjointUnion) r = "(" + r + ")";
    return left().toString() + " + " + r;
  }
  case Kind::Product: {
    auto wrap = [](const SpaceExpr& e, bool rightSide) {
      bool paren = e.kind() == Kind::DisjointUnion || (rightSide && e.kind() == Kind::Product);
      return paren ? "(" + e.toString() + ")" : e.toString();
    };
    return wrap(left(), false) + " * " + wrap(right(), true);
  }
  }
  return "";
}

namespace {

class SpaceParser {
public:
  explicit SpaceParser(std::string_view text) : text_(text) {}

  SpaceExpr parse() {
    SpaceExpr e = sum();
    skip();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    return e;
  }

private:
  SpaceExpr sum() {
    SpaceExpr e = product();
    while (accept('+')) e = e + product();
    return e;
  }

  SpaceExpr product() {
    SpaceExpr e = factor();
    while (accept('*')) e = e * factor();
    return e;
  }

  SpaceExpr factor() {
    skip();
    if (accept('(')) {
      SpaceExpr e = sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (name.empty()) fail("expected a space");
    if (name == "pt") return SpaceExpr::point();
    std::size_t namePos = start;
    if (!accept('(')) fail("expected '(' after '" + name + "'");
    unsigned n = number();
    if (!accept(')')) fail("expected ')'");
    if (name == "S") return SpaceExpr::sphere(n);
    if (name == "T") return SpaceExpr::torus(n);
    if (name == "Sg") return SpaceExpr::surface(n);
    if (name == "CP") return SpaceExpr::complexProjective(n);
    pos_ = namePos;
    fail("unknown space '" + name + "'");
  }

  unsigned number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer");
    if (pos_ - start > 6) fail("parameter too large");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, ParseError::Where::Offset, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

SpaceExpr parseSpaceExpr(std::string_view text) { return SpaceParser(text).parse(); }

IntPoly poincareOfExpr(const SpaceExpr& e) {
  using K = SpaceExpr::Kind;
  const long n = static_cast<long>(e.parameter());
  switch (e.kind()) {
  case K::Point: return IntPoly(Integer(1));
  case K::Sphere: return IntPoly(Integer(1)) + IntPoly::monomial(n, Integer(1));
  case K::Torus: return IntPoly::fromDense({Integer(1), Integer(1)}).pow(n);
  case K::Surface: return IntPoly::fromDense({Integer(1), Integer(2 * n), Integer(1)});
  case K::ComplexProjective: {
    IntPoly p;
    for (long i = 0; i <= n; ++i) p.set(2 * i, Integer(1));
    return p;
  }
  case K::Product: return poincareOfExpr(e.left()) * poincareOfExpr(e.right());
  case K::DisjointUnion: return poincareOfExpr(e.left()) + poincareOfExpr(e.right());
  }
  throw InvariantViolation("unhandled space kind");
}

BettiVector bettiOfExpr(const SpaceExpr& e) { return BettiVector::fromPoincare(poincareOfExpr(e)); }

} // namespace eulertower::spaces
