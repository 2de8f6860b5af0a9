#ifndef TSPLIT_BINARY_FORM_HPP
#define TSPLIT_BINARY_FORM_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsplit/field.hpp"

namespace tsplit {

// Homogeneous polynomial in s, t. Coefficient i multiplies s^(deg-i) t^i.
// A strictly zero form has degree -1 and no coefficients; it adapts to any
// degree in arithmetic. A form of degree D whose coefficients all vanish is
// also zero.
template <class K>
class BinaryForm {
 public:
  using Element = typename K::Element;

  explicit BinaryForm(const K& field) : field_(field) {}
  BinaryForm(const K& field, std::vector<Element> coeffs);

  static BinaryForm zero(const K& field) { return BinaryForm(field); }
  static BinaryForm zero(const K& field, int degree);
  static BinaryForm monomial(const K& field, int s_exp, int t_exp);
  static BinaryForm monomial(const K& field, int s_exp, int t_exp, const Element& c);

  const K& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_strict_zero() const { return coeffs_.empty(); }
  bool is_zero() const;
  const Element& operator[](int i) const { return coeffs_[i]; }
  std::span<const Element> coeffs() const { return coeffs_; }

  // Largest k with s^k dividing the form (its degree when zero).
  int s_valuation() const;
  int t_valuation() const;

  BinaryForm operator-() const;
  BinaryForm& operator+=(const BinaryForm& o);
  BinaryForm& operator-=(const BinaryForm& o);
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) { return a.times(b); }

  BinaryForm times(const BinaryForm& o) const;
  BinaryForm scaled(const Element& c) const;
  BinaryForm times_monomial(int s_exp, int t_exp) const;
  // Exact quotient; throws std::domain_error when g does not divide this.
  BinaryForm divided_by(const BinaryForm& g) const;
  // Quotient by s^a t^b; throws std::domain_error if not divisible.
  BinaryForm divided_by_monomial(int s_exp, int t_exp) const;

  Element eval(const Element& s, const Element& t) const;
  // Leading coefficient of the dehomogenization at s = 1 (highest t power).
  Element leading_t_coeff() const;

  std::string to_string() const;

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.equals(b); }

 private:
  bool equals(const BinaryForm& o) const;
  void combine(const BinaryForm& o, bool subtract);

  K field_;
  std::vector<Element> coeffs_;
};

// Monic gcd (dehomogenized at s = 1) of the nonzero forms; throws PreconditionError if all vanish.
template <class K>
BinaryForm<K> gcd(std::span<const BinaryForm<K>> forms);

template <class K>
BinaryForm<K> gcd(const BinaryForm<K>& a, const BinaryForm<K>& b) {
  const BinaryForm<K> both[] = {a, b};
  return gcd<K>(std::span<const BinaryForm<K>>(both));
}

// Text grammar: terms c*s^a*t^b joined by + and -, e.g. "-s^11+t^11".
template <class K>
BinaryForm<K> parse_binary_form(const K& field, std::string_view text);

extern template class BinaryForm<RationalField>;
extern template class BinaryForm<PrimeField>;

}  // namespace tsplit

#endif
