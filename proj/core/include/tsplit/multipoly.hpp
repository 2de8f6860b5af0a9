#ifndef TSPLIT_MULTIPOLY_HPP
#define TSPLIT_MULTIPOLY_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tsplit/binary_form.hpp"
#include "tsplit/field.hpp"

namespace tsplit {

// Degree d hypersurface, degree e rational normal curve, ambient P^n.
struct CurveContext {
  int d = 2;
  int e = 1;
  int n = 3;
  FieldSpec field;

  // Validates d >= 2, n >= 3, 1 <= e <= n and char(field) not dividing e.
  static CurveContext make(int d, int e, int n, FieldSpec field = FieldSpec::rational());

  int num_vars() const { return n + 1; }
  CurveContext with_n(int new_n) const { return make(d, e, new_n, field); }
  CurveContext with_field(FieldSpec f) const { return make(d, e, n, f); }
  std::string to_string() const;

  friend bool operator==(const CurveContext&, const CurveContext&) = default;
};

using Exponent = std::vector<int>;

// Lexicographic with x0 > x1 > ... ; on homogeneous polynomials this is grlex.
struct ExponentOrder {
  bool operator()(const Exponent& a, const Exponent& b) const { return a > b; }
};

template <class K>
class MultiPoly {
 public:
  using Element = typename K::Element;
  using Terms = std::map<Exponent, Element, ExponentOrder>;

  MultiPoly(const CurveContext& ctx, const K& field, int degree);

  static MultiPoly variable(const CurveContext& ctx, const K& field, int m);
  static MultiPoly constant(const CurveContext& ctx, const K& field, const Element& c);
  static MultiPoly monomial(const CurveContext& ctx, const K& field, Exponent exp, const Element& c);

  const CurveContext& context() const { return ctx_; }
  const K& field() const { return field_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add_term(const Exponent& exp, const Element& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return a.times(b); }
  MultiPoly operator-() const { return scaled(field_.neg(field_.one())); }

  MultiPoly times(const MultiPoly& o) const;
  MultiPoly scaled(const Element& c) const;
  MultiPoly derivative(int m) const;
  // Same polynomial viewed in a context with at least as many variables.
  MultiPoly embedded(const CurveContext& bigger) const;

  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.equals(b); }

 private:
  bool equals(const MultiPoly& o) const;
  void check_compatible(const MultiPoly& o) const;

  CurveContext ctx_;
  K field_;
  int degree_;
  Terms terms_;
};

// expected_degree < 0 accepts any homogeneous degree (zero polynomial gets degree 0).
template <class K>
MultiPoly<K> parse_poly(std::string_view text, const CurveContext& ctx, const K& field, int expected_degree);

// Q_{i,j} = x_i x_{j-1} - x_{i-1} x_j, 1 <= i < j <= e.
template <class K>
MultiPoly<K> build_quadric(const CurveContext& ctx, const K& field, int i, int j);

// x_m -> s^(e-m) t^m for m <= e, 0 otherwise.
template <class K>
BinaryForm<K> restrict_to_curve(const MultiPoly<K>& p);

template <class K>
std::vector<BinaryForm<K>> gradient_on_curve(const MultiPoly<K>& f);

// Canonical degree k lift of a form of degree e*k.
template <class K>
MultiPoly<K> lift_binary_form(const BinaryForm<K>& h, const CurveContext& ctx, int k);

template <class K>
struct IdealCombination {
  CurveContext context;
  K field;
  std::map<std::pair<int, int>, MultiPoly<K>> quadric_coeffs;
  std::map<int, MultiPoly<K>> linear_coeffs;

  IdealCombination(const CurveContext& ctx, const K& f) : context(ctx), field(f) {}

  // Throws PreconditionError on index or degree violations.
  void validate() const;
  MultiPoly<K> assemble() const;
  // Adds c * Q_{i,j}; zero coefficients are dropped.
  void add_quadric(int i, int j, const MultiPoly<K>& c);
  void add_linear(int k, const MultiPoly<K>& c);
  IdealCombination embedded(const CurveContext& bigger) const;
  std::string to_string() const;

  friend bool operator==(const IdealCombination& a, const IdealCombination& b) {
    return a.context == b.context && a.quadric_coeffs == b.quadric_coeffs && a.linear_coeffs == b.linear_coeffs;
  }
};

// Splits F into linear parts for x_n..x_{e+1}, then divides by the quadrics.
// Throws PreconditionError reporting the remainder if it is nonzero.
template <class K>
IdealCombination<K> decompose_into_ideal(const MultiPoly<K>& f);

extern template class MultiPoly<RationalField>;
extern template class MultiPoly<PrimeField>;
extern template struct IdealCombination<RationalField>;
extern template struct IdealCombination<PrimeField>;

}  // namespace tsplit

#endif
