#ifndef TSPLIT_FIELD_HPP
#define TSPLIT_FIELD_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tsplit {

inline constexpr std::uint32_t kDefaultPrime = 32003;

struct FieldSpec {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Rational;
  std::uint32_t prime = 0;

  static FieldSpec rational() { return {}; }
  static FieldSpec prime_field(std::uint32_t p);
  // "rational" | "prime" | "prime:<p>"
  static FieldSpec parse(std::string_view text);

  bool is_rational() const { return kind == Kind::Rational; }
  std::uint64_t characteristic() const { return is_rational() ? 0 : prime; }
  std::string to_string() const;
  // Throws PreconditionError when the characteristic divides e.
  void check_curve_degree(int e) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t p);

class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long v) const;
  Element from_mpz(const mpz_class& v) const { return Element(v); }
  Element from_mpq(const mpq_class& v) const { return v; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  // a += b * c
  void fma(Element& a, const Element& b, const Element& c) const { a += b * c; }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  // Negative iff the printed representative is negative.
  bool is_negative(const Element& a) const { return sgn(a) < 0; }

  std::string to_string(const Element& a) const { return a.get_str(); }
  Element random(std::mt19937_64& rng) const;
  // Random nonzero element suitable as an evaluation point.
  Element random_nonzero(std::mt19937_64& rng) const;

  std::uint64_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec::rational(); }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const;
  Element from_mpz(const mpz_class& v) const;
  Element from_mpq(const mpq_class& v) const;

  Element add(Element a, Element b) const {
    std::uint32_t r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  void fma(Element& a, Element b, Element c) const { a = add(a, mul(b, c)); }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }
  bool is_negative(Element a) const { return a > p_ / 2; }

  // Symmetric representative, so p-1 prints as -1.
  std::string to_string(Element a) const;
  Element random(std::mt19937_64& rng) const;
  Element random_nonzero(std::mt19937_64& rng) const;

  std::uint32_t prime() const { return p_; }
  std::uint64_t characteristic() const { return p_; }
  FieldSpec spec() const { return FieldSpec::prime_field(p_); }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

// Runs fn with the concrete field named by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_rational()) return fn(RationalField{});
  return fn(PrimeField{spec.prime});
}

template <class K>
K make_field(const FieldSpec& spec);

}  // namespace tsplit

#endif
