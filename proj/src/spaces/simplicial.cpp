// SPDX-License-Identifier: Apache-2.0
#include "eulertower/spaces/simplicial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "eulertower/error.hpp"

namespace eulertower::spaces {

namespace {

bool isInteger(const std::string& s) {
  std::size_t start = (s.size() > 1 && s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool labelLess(const std::string& a, const std::string& b) {
  bool ia = isInteger(a), ib = isInteger(b);
  if (ia && ib) return Integer(a) < Integer(b);
  if (ia != ib) return ia;
  return a < b;
}

bool validLabel(const std::string& s) {
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '.' && c != ':')
      return false;
  return !s.empty();
}

} // namespace

SimplicialComplex::SimplicialComplex(const std::vector<std::vector<std::string>>& facets) {
  std::vector<std::string> labels;
  for (const auto& f : facets) {
    if (f.empty()) throw InputError("empty facet");
    labels.insert(labels.end(), f.begin(), f.end());
  }
  std::sort(labels.begin(), labels.end(), labelLess);
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  vertices_ = labels;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices_.size(); ++i) index[vertices_[i]] = i;

  std::set<Simplex> unique;
  for (const auto& f : facets) {
    Simplex s;
    for (const auto& v : f) s.push_back(index.at(v));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw InputError("facet repeats a vertex");
    unique.insert(s);
  }
  for (const auto& s : unique) {
    bool subsumed = false;
    for (const auto& t : unique)
      if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        subsumed = true;
        break;
      }
    if (!subsumed) facets_.push_back(s);
  }
}

long SimplicialComplex::dimension() const {
  long d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<long>(f.size()) - 1);
  return d;
}

std::vector<std::vector<SimplicialComplex::Simplex>> SimplicialComplex::faces() const {
  long dim = dimension();
  std::vector<std::set<Simplex>> sets(static_cast<std::size_t>(std::max(dim + 1, 0L)));
  for (const auto& f : facets_) {
    std::size_t n = f.size();
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1ul << i)) s.push_back(f[i]);
      sets[s.size() - 1].insert(std::move(s));
    }
  }
  std::vector<std::vector<Simplex>> out;
  for (auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

chain::ChainComplex SimplicialComplex::chainComplex() const {
  auto byDim = faces();
  if (byDim.empty()) return chain::ChainComplex();
  std::vector<std::size_t> ranks;
  for (const auto& level : byDim) ranks.push_back(level.size());
  std::map<long, chain::IntegerMatrix> diffs;
  for (std::size_t k = 1; k < byDim.size(); ++k) {
    std::map<Simplex, std::size_t> row;
    for (std::size_t r = 0; r < byDim[k - 1].size(); ++r) row[byDim[k - 1][r]] = r;
    chain::IntegerMatrix d(byDim[k - 1].size(), byDim[k].size());
    for (std::size_t c = 0; c < byDim[k].size(); ++c) {
      const Simplex& s = byDim[k][c];
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<long>(i));
        d(row.at(face), c) = (i % 2 == 0) ? 1 : -1;
      }
    }
    diffs.emplace(static_cast<long>(k), std::move(d));
  }
  return chain::ChainComplex(0, static_cast<long>(byDim.size()) - 1, std::move(ranks),
                             std::move(diffs));
}

SimplicialComplex parseFacets(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  std::vector<std::vector<std::string>> facets;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::vector<std::string> facet;
    std::string w;
    while (words >> w) {
      if (!validLabel(w))
        throw ParseError("invalid vertex label '" + w + "'", ParseError::Where::Line, number);
      if (std::find(facet.begin(), facet.end(), w) != facet.end())
        throw ParseError("vertex '" + w + "' repeated in facet", ParseError::Where::Line, number);
      facet.push_back(w);
    }
    if (facet.size() > 20)
      throw ParseError("facet has more than 20 vertices", ParseError::Where::Line, number);
    if (!facet.empty()) facets.push_back(std::move(facet));
  }
  return SimplicialComplex(facets);
}

std::string serializeFacets(const SimplicialComplex& k) {
  std::string out;
  for (const auto& f : k.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? " " : "") + k.vertices()[f[i]];
    out += "\n";
  }
  return out;
}

namespace {

std::vector<std::vector<std::string>> labelled(const SimplicialComplex& k,
                                               const std::vector<SimplicialComplex::Simplex>& simplices) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : simplices) {
    std::vector<std::string> f;
    for (auto v : s) f.push_back(k.vertices()[v]);
    out.push_back(std::move(f));
  }
  return out;
}

} // namespace

SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto facets = labelled(a, a.facets());
  auto more = labelled(b, b.facets());
  facets.insert(facets.end(), more.begin(), more.end());
  return SimplicialComplex(facets);
}

SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::set<std::vector<std::string>> inB;
  for (const auto& level : b.faces())
    for (auto f : labelled(b, level)) {
      std::sort(f.begin(), f.end());
      inB.insert(f);
    }
  std::vector<std::vector<std::string>> common;
  for (const auto& level : a.faces())
    for (auto f : labelled(a, level)) {
      auto key = f;
      std::sort(key.begin(), key.end());
      if (inB.count(key)) common.push_back(f);
    }
  return SimplicialComplex(common);
}

chain::HomologySummary homologyOfComplex(const SimplicialComplex& k) {
  return chain::homology(k.chainComplex());
}

BettiVector bettiOfComplex(const SimplicialComplex& k) {
  std::vector<Integer> b;
  for (auto r : homologyOfComplex(k).bettiRanks()) b.emplace_back(static_cast<unsigned long>(r));
  return BettiVector(std::move(b));
}

} // namespace eulertower::spaces
