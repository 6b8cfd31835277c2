// SPDX-License-Identifier: Apache-2.0
#include "eulertower/k0/io.hpp"

#include <cctype>
#include <sstream>

#include "eulertower/error.hpp"

namespace eulertower::k0 {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool parseSignedLong(const std::string& s, long& out) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
  if (i == s.size() || s.size() - i > 12) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  out = std::stol(s);
  return true;
}

} // namespace

K0Complex parseK0Complex(std::string_view text) {
  std::map<long, K0Element> classes;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'degree: combination'", ParseError::Where::Line, number);
    long degree = 0;
    if (!parseSignedLong(trim(line.substr(0, colon)), degree))
      throw ParseError("invalid degree '" + trim(line.substr(0, colon)) + "'", ParseError::Where::Line,
                       number);
    if (classes.count(degree))
      throw ParseError("degree " + std::to_string(degree) + " given twice", ParseError::Where::Line,
                       number);
    try {
      classes.emplace(degree, K0Element::parse(line.substr(colon + 1)));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()), ParseError::Where::Line, number);
    }
  }
  return K0Complex(std::move(classes));
}

std::string serializeK0Complex(const K0Complex& m) {
  std::string out;
  for (const auto& [degree, cls] : m.classes())
    out += std::to_string(degree) + ": " + cls.toString() + "\n";
  return out;
}

RankMap parseRankMap(std::string_view text) {
  RankMap out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string entry = trim(text.substr(start, comma - start));
    auto eq = entry.find('=');
    if (eq == std::string::npos) throw InputError("rank entry '" + entry + "' is not name=value");
    std::string name = trim(entry.substr(0, eq));
    std::string value = trim(entry.substr(eq + 1));
    if (name.empty()) throw InputError("rank entry '" + entry + "' has no generator name");
    Integer v;
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos ||
        v.set_str(value, 10) != 0)
      throw InputError("rank for '" + name + "' must be a nonnegative integer");
    if (!out.emplace(name, v).second) throw InputError("rank for '" + name + "' given twice");
    start = comma + 1;
  }
  return out;
}

} // namespace eulertower::k0
