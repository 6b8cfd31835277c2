// SPDX-License-Identifier: Apache-2.0
#include "eulertower/chain/io.hpp"

#include <map>
#include <sstream>
#include <vector>

#include "eulertower/error.hpp"

namespace eulertower::chain {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    std::string w;
    while (words >> w) line.tokens.push_back(w);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& message) {
  throw ParseError(message, ParseError::Where::Line, line.number);
}

long parseLong(const Line& line, const std::string& token) {
  try {
    std::size_t used = 0;
    long v = std::stol(token, &used);
    if (used != token.size()) fail(line, "expected an integer, got '" + token + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(line, "expected an integer, got '" + token + "'");
  }
}

Integer parseInteger(const Line& line, const std::string& token) {
  Integer v;
  std::string t = token;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || v.set_str(t, 10) != 0) fail(line, "expected an integer, got '" + token + "'");
  return v;
}

} // namespace

ComplexFile parseComplex(std::string_view text) {
  auto lines = tokenize(text);
  ComplexFile out;
  std::size_t pos = 0;
  auto expect = [&](const char* keyword) -> const Line& {
    if (pos >= lines.size())
      throw ParseError(std::string("missing '") + keyword + "' line", ParseError::Where::Line,
                       lines.empty() ? 1 : lines.back().number);
    const Line& l = lines[pos];
    if (l.tokens[0] != keyword) fail(l, std::string("expected '") + keyword + "'");
    ++pos;
    return l;
  };

  if (pos < lines.size() && lines[pos].tokens[0] == "grading") {
    const Line& l = lines[pos++];
    if (l.tokens.size() != 2) fail(l, "grading takes one argument");
    if (l.tokens[1] == "homological")
      out.grading = Grading::Homological;
    else if (l.tokens[1] == "cohomological")
      out.grading = Grading::Cohomological;
    else
      fail(l, "unknown grading '" + l.tokens[1] + "'");
  }
  const Line& rangeLine = expect("range");
  if (rangeLine.tokens.size() != 3) fail(rangeLine, "range takes two integers");
  long low = parseLong(rangeLine, rangeLine.tokens[1]);
  long high = parseLong(rangeLine, rangeLine.tokens[2]);
  if (high < low) fail(rangeLine, "range is empty");
  const Line& ranksLine = expect("ranks");
  if (ranksLine.tokens.size() != static_cast<std::size_t>(high - low + 2))
    fail(ranksLine, "expected " + std::to_string(high - low + 1) + " ranks");
  std::map<long, std::size_t> labelRank;
  for (long i = low; i <= high; ++i) {
    long r = parseLong(ranksLine, ranksLine.tokens[static_cast<std::size_t>(i - low + 1)]);
    if (r < 0) fail(ranksLine, "negative rank");
    labelRank[i] = static_cast<std::size_t>(r);
  }
  auto rankOf = [&](long label) -> std::size_t {
    auto it = labelRank.find(label);
    return it == labelRank.end() ? 0 : it->second;
  };

  bool cohomological = out.grading == Grading::Cohomological;
  std::map<long, IntegerMatrix> diffs;
  while (pos < lines.size()) {
    const Line& head = lines[pos++];
    if (head.tokens[0] != "d" || head.tokens.size() != 2) fail(head, "expected 'd <degree>'");
    long label = parseLong(head, head.tokens[1]);
    long targetLabel = cohomological ? label + 1 : label - 1;
    if (labelRank.count(label) == 0 || labelRank.count(targetLabel) == 0)
      fail(head, "differential d " + std::to_string(label) + " leaves the degree range");
    std::size_t rows = rankOf(targetLabel), cols = rankOf(label);
    IntegerMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (pos >= lines.size() || lines[pos].tokens[0] == "d")
        fail(head, "differential needs " + std::to_string(rows) + " rows");
      const Line& row = lines[pos++];
      if (row.tokens.size() != cols)
        fail(row, "expected " + std::to_string(cols) + " entries, got " +
                      std::to_string(row.tokens.size()));
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = parseInteger(row, row.tokens[c]);
    }
    long internal = cohomological ? -label : label;
    if (diffs.count(internal)) fail(head, "differential given twice");
    diffs.emplace(internal, std::move(m));
  }

  std::vector<std::size_t> ranks;
  long ilow = cohomological ? -high : low;
  long ihigh = cohomological ? -low : high;
  for (long k = ilow; k <= ihigh; ++k) ranks.push_back(rankOf(cohomological ? -k : k));
  try {
    out.complex = ChainComplex(ilow, ihigh, std::move(ranks), std::move(diffs));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(e.what(), ParseError::Where::Line, rangeLine.number);
  }
  return out;
}

std::string serializeComplex(const ComplexFile& file) {
  const ChainComplex& c = file.complex;
  bool cohomological = file.grading == Grading::Cohomological;
  long low = cohomological ? -c.highDegree() : c.lowDegree();
  long high = cohomological ? -c.lowDegree() : c.highDegree();
  std::ostringstream out;
  if (cohomological) out << "grading cohomological\n";
  out << "range " << low << " " << high << "\n";
  out << "ranks";
  for (long label = low; label <= high; ++label) out << " " << c.rank(file.label(label));
  out << "\n";
  std::map<long, const IntegerMatrix*> byLabel;
  for (const auto& [degree, m] : c.storedDifferentials()) byLabel[file.label(degree)] = &m;
  for (const auto& [label, m] : byLabel) {
    out << "d " << label << "\n";
    for (std::size_t r = 0; r < m->rows(); ++r) {
      for (std::size_t col = 0; col < m->cols(); ++col) out << (col ? " " : "") << (*m)(r, col).get_str();
      out << "\n";
    }
  }
  return out.str();
}

} // namespace eulertower::chain
