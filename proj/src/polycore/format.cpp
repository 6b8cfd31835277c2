// SPDX-License-Identifier: Apache-2.0
#include "eulertower/polycore/format.hpp"

#include "eulertower/error.hpp"

namespace eulertower {

IntPoly intPolyFromJson(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("polynomial must be a list of [exponent, coefficient] pairs");
  IntPoly out;
  long previous = 0;
  bool first = true;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_string())
      throw InputError("malformed polynomial term");
    long e = term[0].get<long>();
    if (!first && e <= previous) throw InputError("polynomial exponents must ascend");
    Integer c;
    if (c.set_str(term[1].get<std::string>(), 10) != 0) throw InputError("malformed coefficient");
    if (sgn(c) == 0) throw InputError("zero coefficient in sparse polynomial");
    out.set(e, c);
    previous = e;
    first = false;
  }
  return out;
}

std::string indexedName(const std::string& stem, long index) {
  if (index < 0) return stem + "_{" + std::to_string(index) + "}";
  return stem + "_" + std::to_string(index);
}

} // namespace eulertower
