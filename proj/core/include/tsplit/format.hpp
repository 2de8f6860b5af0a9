#ifndef TSPLIT_FORMAT_HPP
#define TSPLIT_FORMAT_HPP

#include <string>

namespace tsplit::detail {

// Appends "+c*mono" with the usual sign and unit-coefficient elisions.
template <class K>
void append_term(std::string& out, const K& field, const typename K::Element& c, const std::string& mono) {
  bool negative = field.is_negative(c);
  auto magnitude = negative ? field.neg(c) : c;
  if (negative)
    out += '-';
  else if (!out.empty())
    out += '+';
  if (mono.empty()) {
    out += field.to_string(magnitude);
  } else if (field.is_one(magnitude)) {
    out += mono;
  } else {
    out += field.to_string(magnitude);
    out += '*';
    out += mono;
  }
}

inline std::string power_string(const std::string& var, int exponent) {
  if (exponent == 0) return {};
  if (exponent == 1) return var;
  return var + "^" + std::to_string(exponent);
}

inline std::string join_factors(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

}  // namespace tsplit::detail

#endif
