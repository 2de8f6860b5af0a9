#include "tsplit/field.hpp"

#include <charconv>

#include "tsplit/errors.hpp"

namespace tsplit {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t q = 3; q * q <= p; q += 2)
    if (p % q == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw PreconditionError("field modulus " + std::to_string(p) + " is not prime");
  return FieldSpec{Kind::Prime, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "rational" || text == "Q" || text == "QQ") return rational();
  if (text == "prime") return prime_field(kDefaultPrime);
  constexpr std::string_view prefix = "prime:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw ParseError("bad prime in field spec '" + std::string(text) + "'");
    return prime_field(p);
  }
  throw ParseError("unknown field spec '" + std::string(text) + "' (expected rational or prime:<p>)");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "rational" : "prime:" + std::to_string(prime);
}

void FieldSpec::check_curve_degree(int e) const {
  if (!is_rational() && e % static_cast<long long>(prime) == 0)
    throw PreconditionError("field characteristic " + std::to_string(prime) + " divides the curve degree " +
                            std::to_string(e));
}

RationalField::Element RationalField::from_int(long long v) const {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return Element(z);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero in rational field");
  return Element(1) / a;
}

RationalField::Element RationalField::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<long long> dist(-50, 50);
  return from_int(dist(rng));
}

RationalField::Element RationalField::random_nonzero(std::mt19937_64& rng) const {
  std::uniform_int_distribution<long long> dist(1, 997);
  std::bernoulli_distribution sign(0.5);
  long long v = dist(rng);
  return from_int(sign(rng) ? v : -v);
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw PreconditionError("field modulus " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw PreconditionError("field modulus must be below 2^31");
}

PrimeField::Element PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return static_cast<Element>(r.get_ui());
}

PrimeField::Element PrimeField::from_mpq(const mpq_class& v) const {
  Element den = from_mpz(v.get_den());
  if (den == 0) throw PreconditionError("denominator divisible by the field characteristic");
  return div(from_mpz(v.get_num()), den);
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("division by zero in prime field");
  long long t = 0, new_t = 1;
  long long r = p_, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

std::string PrimeField::to_string(Element a) const {
  if (is_negative(a)) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

PrimeField::Element PrimeField::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
  return dist(rng);
}

PrimeField::Element PrimeField::random_nonzero(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint32_t> dist(1, p_ - 1);
  return dist(rng);
}

template <>
RationalField make_field<RationalField>(const FieldSpec& spec) {
  if (!spec.is_rational()) throw PreconditionError("expected the rational field");
  return {};
}

template <>
PrimeField make_field<PrimeField>(const FieldSpec& spec) {
  if (spec.is_rational()) throw PreconditionError("expected a prime field");
  return PrimeField(spec.prime);
}

}  // namespace tsplit
