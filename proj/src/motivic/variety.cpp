// SPDX-License-Identifier: Apache-2.0
#include "eulertower/motivic/variety.hpp"

#include <cctype>

#include "eulertower/error.hpp"

namespace eulertower::motivic {

struct VarietyExpr::Node {
  Kind kind;
  unsigned parameter = 0;
  std::vector<VarietyExpr> operands;
};

VarietyExpr VarietyExpr::leaf(Kind kind, unsigned parameter) {
  return VarietyExpr(std::make_shared<const Node>(Node{kind, parameter, {}}));
}

VarietyExpr VarietyExpr::binary(Kind kind, const VarietyExpr& a, const VarietyExpr& b) {
  return VarietyExpr(std::make_shared<const Node>(Node{kind, 0, {a, b}}));
}

VarietyExpr VarietyExpr::point() { return leaf(Kind::Point, 0); }
VarietyExpr VarietyExpr::affine(unsigned n) { return leaf(Kind::Affine, n); }
VarietyExpr VarietyExpr::projective(unsigned n) { return leaf(Kind::Projective, n); }
VarietyExpr VarietyExpr::torus() { return leaf(Kind::Torus, 0); }
VarietyExpr VarietyExpr::curve(unsigned genus) { return leaf(Kind::Curve, genus); }
VarietyExpr VarietyExpr::lefschetz() { return leaf(Kind::Lefschetz, 0); }

VarietyExpr operator*(const VarietyExpr& a, const VarietyExpr& b) {
  return VarietyExpr::binary(VarietyExpr::Kind::Product, a, b);
}
VarietyExpr operator+(const VarietyExpr& a, const VarietyExpr& b) {
  return VarietyExpr::binary(VarietyExpr::Kind::Sum, a, b);
}
VarietyExpr operator-(const VarietyExpr& a, const VarietyExpr& b) {
  return VarietyExpr::binary(VarietyExpr::Kind::Difference, a, b);
}

VarietyExpr::Kind VarietyExpr::kind() const { return node_->kind; }
unsigned VarietyExpr::parameter() const { return node_->parameter; }
bool VarietyExpr::isAtom() const { return node_->operands.empty(); }

const VarietyExpr& VarietyExpr::left() const {
  if (isAtom()) throw InputError("atom has no operands");
  return node_->operands[0];
}

const VarietyExpr& VarietyExpr::right() const {
  if (isAtom()) throw InputError("atom has no operands");
  return node_->operands[1];
}

bool VarietyExpr::involvesCurves() const {
  if (isAtom()) return kind() == Kind::Curve && parameter() >= 1;
  return left().involvesCurves() || right().involvesCurves();
}

bool VarietyExpr::isEffective() const {
  if (isAtom()) return true;
  return kind() != Kind::Difference && left().isEffective() && right().isEffective();
}

bool VarietyExpr::operator==(const VarietyExpr& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind() || parameter() != o.parameter()) return false;
  if (isAtom()) return true;
  return left() == o.left() && right() == o.right();
}

std::string VarietyExpr::toString() const {
  auto p = [this] { return "(" + std::to_string(parameter()) + ")"; };
  switch (kind()) {
  case Kind::Point: return "pt";
  case Kind::Affine: return "A" + p();
  case Kind::Projective: return "P" + p();
  case Kind::Torus: return "Gm";
  case Kind::Curve: return "C" + p();
  case Kind::Lefschetz: return "L";
  case Kind::Sum:
  case Kind::Difference: {
    std::string r = right().toString();
    if (right().kind() == Kind::Sum || right().kind() == Kind::Difference) r = "(" + r + ")";
    return left().toString() + (kind() == Kind::Sum ? " + " : " - ") + r;
  }
  case Kind::Product: {
    auto wrap = [](const VarietyExpr& e, bool rightSide) {
      bool paren = e.kind() == Kind::Sum || e.kind() == Kind::Difference ||
                   (rightSide && e.kind() == Kind::Product);
      return paren ? "(" + e.toString() + ")" : e.toString();
    };
    return wrap(left(), false) + " * " + wrap(right(), true);
  }
  }
  return "";
}

namespace {

class VarietyParser {
public:
  explicit VarietyParser(std::string_view text) : text_(text) {}

  VarietyExpr parse() {
    VarietyExpr e = expr();
    skip();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    return e;
  }

private:
  VarietyExpr expr() {
    VarietyExpr e = term();
    while (true) {
      if (accept('+'))
        e = e + term();
      else if (accept('-'))
        e = e - term();
      else
        return e;
    }
  }

  VarietyExpr term() {
    VarietyExpr e = factor();
    while (accept('*')) e = e * factor();
    return e;
  }

  VarietyExpr factor() {
    skip();
    if (accept('(')) {
      VarietyExpr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (name.empty()) fail("expected a variety");
    if (name == "pt") return VarietyExpr::point();
    if (name == "Gm") return VarietyExpr::torus();
    if (name == "L") return VarietyExpr::lefschetz();
    if (name != "A" && name != "P" && name != "C") {
      pos_ = start;
      fail("unknown atom '" + name + "'");
    }
    if (!accept('(')) fail("expected '(' after '" + name + "'");
    unsigned n = number();
    if (!accept(')')) fail("expected ')'");
    if (name == "A") return VarietyExpr::affine(n);
    if (name == "P") return VarietyExpr::projective(n);
    return VarietyExpr::curve(n);
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

VarietyExpr parseVarietyExpr(std::string_view text) { return VarietyParser(text).parse(); }

} // namespace eulertower::motivic
