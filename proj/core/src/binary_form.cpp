#include "tsplit/binary_form.hpp"

#include <algorithm>
#include <stdexcept>

#include "tsplit/errors.hpp"
#include "tsplit/expr_parser.hpp"
#include "tsplit/format.hpp"

namespace tsplit {
namespace {

// Univariate helpers on coefficient vectors indexed by t-exponent (s = 1).
template <class K>
using Poly = std::vector<typename K::Element>;

template <class K>
void trim(const K& f, Poly<K>& p) {
  while (!p.empty() && f.is_zero(p.back())) p.pop_back();
}

template <class K>
Poly<K> poly_rem(const K& f, Poly<K> a, const Poly<K>& b) {
  auto lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    auto q = f.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(q, b[i]));
    a.pop_back();
    trim(f, a);
  }
  return a;
}

template <class K>
Poly<K> poly_gcd(const K& f, Poly<K> a, Poly<K> b) {
  trim(f, a);
  trim(f, b);
  while (!b.empty()) {
    Poly<K> r = poly_rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    auto lead_inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, lead_inv);
  }
  return a;
}

}  // namespace

template <class K>
BinaryForm<K>::BinaryForm(const K& field, std::vector<Element> coeffs) : field_(field), coeffs_(std::move(coeffs)) {}

template <class K>
BinaryForm<K> BinaryForm<K>::zero(const K& field, int degree) {
  if (degree < 0) return BinaryForm(field);
  return BinaryForm(field, std::vector<Element>(degree + 1, field.zero()));
}

template <class K>
BinaryForm<K> BinaryForm<K>::monomial(const K& field, int s_exp, int t_exp) {
  return monomial(field, s_exp, t_exp, field.one());
}

template <class K>
BinaryForm<K> BinaryForm<K>::monomial(const K& field, int s_exp, int t_exp, const Element& c) {
  if (s_exp < 0 || t_exp < 0) throw PreconditionError("negative exponent in binary monomial");
  BinaryForm f = zero(field, s_exp + t_exp);
  f.coeffs_[t_exp] = c;
  return f;
}

template <class K>
bool BinaryForm<K>::is_zero() const {
  for (const auto& c : coeffs_)
    if (!field_.is_zero(c)) return false;
  return true;
}

template <class K>
int BinaryForm<K>::s_valuation() const {
  int k = 0;
  for (int i = degree(); i >= 0 && field_.is_zero(coeffs_[i]); --i) ++k;
  return k;
}

template <class K>
int BinaryForm<K>::t_valuation() const {
  int k = 0;
  for (int i = 0; i <= degree() && field_.is_zero(coeffs_[i]); ++i) ++k;
  return k;
}

template <class K>
BinaryForm<K> BinaryForm<K>::operator-() const {
  BinaryForm r = *this;
  for (auto& c : r.coeffs_) c = field_.neg(c);
  return r;
}

template <class K>
void BinaryForm<K>::combine(const BinaryForm& o, bool subtract) {
  if (o.is_zero()) return;
  if (is_zero()) {
    *this = subtract ? -o : o;
    return;
  }
  if (degree() != o.degree())
    throw PreconditionError("adding binary forms of degrees " + std::to_string(degree()) + " and " +
                            std::to_string(o.degree()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] = subtract ? field_.sub(coeffs_[i], o.coeffs_[i]) : field_.add(coeffs_[i], o.coeffs_[i]);
}

template <class K>
BinaryForm<K>& BinaryForm<K>::operator+=(const BinaryForm& o) {
  combine(o, false);
  return *this;
}

template <class K>
BinaryForm<K>& BinaryForm<K>::operator-=(const BinaryForm& o) {
  combine(o, true);
  return *this;
}

template <class K>
BinaryForm<K> BinaryForm<K>::times(const BinaryForm& o) const {
  if (is_strict_zero() || o.is_strict_zero()) return BinaryForm(field_);
  BinaryForm r = zero(field_, degree() + o.degree());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (field_.is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) field_.fma(r.coeffs_[i + j], coeffs_[i], o.coeffs_[j]);
  }
  return r;
}

template <class K>
BinaryForm<K> BinaryForm<K>::scaled(const Element& c) const {
  BinaryForm r = *this;
  for (auto& x : r.coeffs_) x = field_.mul(x, c);
  return r;
}

template <class K>
BinaryForm<K> BinaryForm<K>::times_monomial(int s_exp, int t_exp) const {
  if (is_strict_zero()) return *this;
  BinaryForm r = zero(field_, degree() + s_exp + t_exp);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + t_exp] = coeffs_[i];
  return r;
}

template <class K>
BinaryForm<K> BinaryForm<K>::divided_by(const BinaryForm& g) const {
  if (g.is_zero()) throw std::domain_error("division by the zero form");
  int qdeg = degree() - g.degree();
  if (is_zero()) return zero(field_, qdeg);
  if (qdeg < 0) throw std::domain_error("divisor has larger degree than dividend");
  Poly<K> a(coeffs_.begin(), coeffs_.end());
  Poly<K> b(g.coeffs_.begin(), g.coeffs_.end());
  trim(field_, a);
  trim(field_, b);
  Poly<K> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, field_.zero());
  auto lead_inv = field_.inv(b.back());
  while (a.size() >= b.size()) {
    auto c = field_.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = field_.sub(a[shift + i], field_.mul(c, b[i]));
    a.pop_back();
    trim(field_, a);
  }
  if (!a.empty() || static_cast<int>(q.size()) - 1 > qdeg) throw std::domain_error("inexact binary form division");
  q.resize(qdeg + 1, field_.zero());
  return BinaryForm(field_, std::move(q));
}

template <class K>
BinaryForm<K> BinaryForm<K>::divided_by_monomial(int s_exp, int t_exp) const {
  if (is_zero()) return zero(field_, degree() - s_exp - t_exp);
  if (s_valuation() < s_exp || t_valuation() < t_exp) throw std::domain_error("monomial does not divide form");
  int qdeg = degree() - s_exp - t_exp;
  std::vector<Element> q(coeffs_.begin() + t_exp, coeffs_.begin() + t_exp + qdeg + 1);
  return BinaryForm(field_, std::move(q));
}

template <class K>
typename BinaryForm<K>::Element BinaryForm<K>::eval(const Element& s, const Element& t) const {
  if (field_.is_zero(s) && field_.is_zero(t)) throw PreconditionError("evaluation at (0,0)");
  Element acc = field_.zero();
  if (is_strict_zero()) return acc;
  std::vector<Element> spow(degree() + 1, field_.one());
  for (int i = 1; i <= degree(); ++i) spow[i] = field_.mul(spow[i - 1], s);
  Element tpow = field_.one();
  for (int i = 0; i <= degree(); ++i) {
    field_.fma(acc, coeffs_[i], field_.mul(spow[degree() - i], tpow));
    tpow = field_.mul(tpow, t);
  }
  return acc;
}

template <class K>
typename BinaryForm<K>::Element BinaryForm<K>::leading_t_coeff() const {
  for (int i = degree(); i >= 0; --i)
    if (!field_.is_zero(coeffs_[i])) return coeffs_[i];
  return field_.zero();
}

template <class K>
std::string BinaryForm<K>::to_string() const {
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    if (field_.is_zero(coeffs_[i])) continue;
    std::string mono = detail::join_factors(detail::power_string("s", degree() - i), detail::power_string("t", i));
    detail::append_term(out, field_, coeffs_[i], mono);
  }
  return out.empty() ? "0" : out;
}

template <class K>
bool BinaryForm<K>::equals(const BinaryForm& o) const {
  bool z = is_zero(), oz = o.is_zero();
  if (z || oz) return z && oz;
  if (degree() != o.degree()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!field_.equal(coeffs_[i], o.coeffs_[i])) return false;
  return true;
}

template <class K>
BinaryForm<K> gcd(std::span<const BinaryForm<K>> forms) {
  if (forms.empty()) throw PreconditionError("gcd of an empty family");
  const K& f = forms.front().field();
  bool any = false;
  int s_power = 0;
  Poly<K> g;
  for (const auto& form : forms) {
    if (form.is_zero()) continue;
    Poly<K> p(form.coeffs().begin(), form.coeffs().end());
    trim(f, p);
    int k = form.degree() - (static_cast<int>(p.size()) - 1);
    if (!any) {
      any = true;
      s_power = k;
      g = poly_gcd(f, p, Poly<K>{});
    } else {
      s_power = std::min(s_power, k);
      g = poly_gcd(f, g, p);
    }
  }
  if (!any) throw PreconditionError("gcd of forms that are all zero");
  int deg = static_cast<int>(g.size()) - 1 + s_power;
  g.resize(deg + 1, f.zero());
  return BinaryForm<K>(f, std::move(g));
}

template <class K>
BinaryForm<K> parse_binary_form(const K& field, std::string_view text) {
  auto raw = detail::parse_expression(text, 2, [](std::string_view name) {
    if (name == "s") return 0;
    if (name == "t") return 1;
    return -1;
  });
  if (raw.empty()) return BinaryForm<K>(field);
  int deg = raw.begin()->first[0] + raw.begin()->first[1];
  std::vector<typename K::Element> coeffs(deg + 1, field.zero());
  for (const auto& [mono, c] : raw) {
    if (mono[0] + mono[1] != deg) throw ParseError("binary form '" + std::string(text) + "' is not homogeneous");
    coeffs[mono[1]] = field.from_mpq(c);
  }
  return BinaryForm<K>(field, std::move(coeffs));
}

template class BinaryForm<RationalField>;
template class BinaryForm<PrimeField>;
template BinaryForm<RationalField> gcd(std::span<const BinaryForm<RationalField>>);
template BinaryForm<PrimeField> gcd(std::span<const BinaryForm<PrimeField>>);
template BinaryForm<RationalField> parse_binary_form(const RationalField&, std::string_view);
template BinaryForm<PrimeField> parse_binary_form(const PrimeField&, std::string_view);

}  // namespace tsplit
