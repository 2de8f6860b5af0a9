#include "tsplit/multipoly.hpp"

#include <charconv>

#include "tsplit/errors.hpp"
#include "tsplit/expr_parser.hpp"
#include "tsplit/format.hpp"

namespace tsplit {

CurveContext CurveContext::make(int d, int e, int n, FieldSpec field) {
  if (d < 2) throw PreconditionError("hypersurface degree d must be at least 2 (got " + std::to_string(d) + ")");
  if (n < 3) throw PreconditionError("ambient dimension n must be at least 3 (got " + std::to_string(n) + ")");
  if (e < 1 || e > n)
    throw PreconditionError("curve degree e must satisfy 1 <= e <= n (got e=" + std::to_string(e) +
                            ", n=" + std::to_string(n) + ")");
  field.check_curve_degree(e);
  return CurveContext{d, e, n, field};
}

std::string CurveContext::to_string() const {
  return "d=" + std::to_string(d) + " e=" + std::to_string(e) + " n=" + std::to_string(n) +
         " field=" + field.to_string();
}

namespace {

std::string monomial_string(const Exponent& exp) {
  std::string out;
  for (std::size_t m = 0; m < exp.size(); ++m)
    out = detail::join_factors(out, detail::power_string("x" + std::to_string(m), exp[m]));
  return out;
}

int exponent_degree(const Exponent& exp) {
  int s = 0;
  for (int v : exp) s += v;
  return s;
}

}  // namespace

template <class K>
MultiPoly<K>::MultiPoly(const CurveContext& ctx, const K& field, int degree)
    : ctx_(ctx), field_(field), degree_(degree) {
  if (degree < 0) throw PreconditionError("negative polynomial degree");
}

template <class K>
MultiPoly<K> MultiPoly<K>::variable(const CurveContext& ctx, const K& field, int m) {
  if (m < 0 || m > ctx.n) throw PreconditionError("variable x" + std::to_string(m) + " out of range");
  Exponent exp(ctx.num_vars(), 0);
  exp[m] = 1;
  return monomial(ctx, field, std::move(exp), field.one());
}

template <class K>
MultiPoly<K> MultiPoly<K>::constant(const CurveContext& ctx, const K& field, const Element& c) {
  return monomial(ctx, field, Exponent(ctx.num_vars(), 0), c);
}

template <class K>
MultiPoly<K> MultiPoly<K>::monomial(const CurveContext& ctx, const K& field, Exponent exp, const Element& c) {
  if (static_cast<int>(exp.size()) != ctx.num_vars()) throw PreconditionError("exponent vector length mismatch");
  MultiPoly p(ctx, field, exponent_degree(exp));
  p.add_term(exp, c);
  return p;
}

template <class K>
void MultiPoly<K>::add_term(const Exponent& exp, const Element& c) {
  if (static_cast<int>(exp.size()) != ctx_.num_vars()) throw PreconditionError("exponent vector length mismatch");
  if (exponent_degree(exp) != degree_) throw PreconditionError("term degree does not match polynomial degree");
  if (field_.is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }
}

template <class K>
void MultiPoly<K>::check_compatible(const MultiPoly& o) const {
  if (ctx_.num_vars() != o.ctx_.num_vars()) throw PreconditionError("polynomials live in different rings");
}

template <class K>
MultiPoly<K>& MultiPoly<K>::operator+=(const MultiPoly& o) {
  check_compatible(o);
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  if (degree_ != o.degree_) throw PreconditionError("adding polynomials of different degrees");
  for (const auto& [exp, c] : o.terms_) add_term(exp, c);
  return *this;
}

template <class K>
MultiPoly<K>& MultiPoly<K>::operator-=(const MultiPoly& o) {
  return *this += -o;
}

template <class K>
MultiPoly<K> MultiPoly<K>::times(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r(ctx_, field_, degree_ + o.degree_);
  Exponent exp(ctx_.num_vars());
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      for (std::size_t m = 0; m < exp.size(); ++m) exp[m] = a[m] + b[m];
      r.add_term(exp, field_.mul(ca, cb));
    }
  return r;
}

template <class K>
MultiPoly<K> MultiPoly<K>::scaled(const Element& c) const {
  MultiPoly r(ctx_, field_, degree_);
  for (const auto& [exp, v] : terms_) r.add_term(exp, field_.mul(v, c));
  return r;
}

template <class K>
MultiPoly<K> MultiPoly<K>::derivative(int m) const {
  if (degree_ == 0) throw PreconditionError("derivative of a constant");
  MultiPoly r(ctx_, field_, degree_ - 1);
  for (const auto& [exp, c] : terms_) {
    if (exp[m] == 0) continue;
    Exponent lowered = exp;
    --lowered[m];
    r.add_term(lowered, field_.mul(c, field_.from_int(exp[m])));
  }
  return r;
}

template <class K>
MultiPoly<K> MultiPoly<K>::embedded(const CurveContext& bigger) const {
  if (bigger.num_vars() < ctx_.num_vars()) throw PreconditionError("cannot embed into fewer variables");
  MultiPoly r(bigger, field_, degree_);
  for (const auto& [exp, c] : terms_) {
    Exponent wide = exp;
    wide.resize(bigger.num_vars(), 0);
    r.add_term(wide, c);
  }
  return r;
}

template <class K>
std::string MultiPoly<K>::to_string() const {
  std::string out;
  for (const auto& [exp, c] : terms_) detail::append_term(out, field_, c, monomial_string(exp));
  return out.empty() ? "0" : out;
}

template <class K>
bool MultiPoly<K>::equals(const MultiPoly& o) const {
  if (ctx_.num_vars() != o.ctx_.num_vars()) return false;
  if (terms_.size() != o.terms_.size()) return false;
  if (is_zero()) return true;
  auto it = o.terms_.begin();
  for (const auto& [exp, c] : terms_) {
    if (exp != it->first || !field_.equal(c, it->second)) return false;
    ++it;
  }
  return true;
}

template <class K>
MultiPoly<K> parse_poly(std::string_view text, const CurveContext& ctx, const K& field, int expected_degree) {
  auto raw = detail::parse_expression(text, ctx.num_vars(), [](std::string_view name) {
    if (name.size() < 2 || name[0] != 'x') return -1;
    int idx = -1;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), idx);
    if (ec != std::errc() || ptr != name.data() + name.size()) return -1;
    return idx;
  });
  int degree = expected_degree >= 0 ? expected_degree : 0;
  if (!raw.empty()) {
    int first = exponent_degree(raw.begin()->first);
    for (const auto& [exp, c] : raw)
      if (exponent_degree(exp) != first) throw ParseError("polynomial '" + std::string(text) + "' is not homogeneous");
    if (expected_degree >= 0 && first != expected_degree)
      throw ParseError("polynomial '" + std::string(text) + "' has degree " + std::to_string(first) + ", expected " +
                       std::to_string(expected_degree));
    degree = first;
  }
  MultiPoly<K> p(ctx, field, degree);
  for (const auto& [exp, c] : raw) p.add_term(exp, field.from_mpq(c));
  return p;
}

template <class K>
MultiPoly<K> build_quadric(const CurveContext& ctx, const K& field, int i, int j) {
  if (!(1 <= i && i < j && j <= ctx.e))
    throw PreconditionError("quadric Q_{" + std::to_string(i) + "," + std::to_string(j) +
                            "} needs 1 <= i < j <= e = " + std::to_string(ctx.e));
  MultiPoly<K> q(ctx, field, 2);
  Exponent a(ctx.num_vars(), 0), b(ctx.num_vars(), 0);
  ++a[i];
  ++a[j - 1];
  ++b[i - 1];
  ++b[j];
  q.add_term(a, field.one());
  q.add_term(b, field.neg(field.one()));
  return q;
}

template <class K>
BinaryForm<K> restrict_to_curve(const MultiPoly<K>& p) {
  const auto& ctx = p.context();
  const K& f = p.field();
  const int e = ctx.e;
  std::vector<typename K::Element> coeffs(e * p.degree() + 1, f.zero());
  for (const auto& [exp, c] : p.terms()) {
    int t_exp = 0;
    bool vanishes = false;
    for (int m = 0; m < ctx.num_vars(); ++m) {
      if (exp[m] == 0) continue;
      if (m > e) {
        vanishes = true;
        break;
      }
      t_exp += m * exp[m];
    }
    if (!vanishes) coeffs[t_exp] = f.add(coeffs[t_exp], c);
  }
  return BinaryForm<K>(f, std::move(coeffs));
}

template <class K>
std::vector<BinaryForm<K>> gradient_on_curve(const MultiPoly<K>& f) {
  std::vector<BinaryForm<K>> out;
  out.reserve(f.context().num_vars());
  for (int m = 0; m < f.context().num_vars(); ++m) out.push_back(restrict_to_curve(f.derivative(m)));
  return out;
}

template <class K>
MultiPoly<K> lift_binary_form(const BinaryForm<K>& h, const CurveContext& ctx, int k) {
  const K& f = h.field();
  const int e = ctx.e;
  if (k < 0) throw PreconditionError("negative lift degree");
  MultiPoly<K> out(ctx, f, k);
  if (h.is_zero()) return out;
  if (h.degree() != e * k)
    throw PreconditionError("cannot lift a form of degree " + std::to_string(h.degree()) + " to degree " +
                            std::to_string(k) + ": degree must equal e*k = " + std::to_string(e * k));
  for (int i = 0; i <= h.degree(); ++i) {
    if (f.is_zero(h[i])) continue;
    Exponent exp(ctx.num_vars(), 0);
    if (i == e * k) {
      exp[e] = k;
    } else {
      int q = i / e, r = i % e;
      exp[e] += q;
      exp[r] += 1;
      exp[0] += k - q - 1;
    }
    out.add_term(exp, h[i]);
  }
  return out;
}

template <class K>
void IdealCombination<K>::validate() const {
  const auto& ctx = context;
  for (const auto& [ij, c] : quadric_coeffs) {
    auto [i, j] = ij;
    if (!(1 <= i && i < j && j <= ctx.e))
      throw PreconditionError("quadric index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    if (c.context().num_vars() != ctx.num_vars()) throw PreconditionError("quadric coefficient in wrong ring");
    if (!c.is_zero() && c.degree() != ctx.d - 2)
      throw PreconditionError("quadric coefficient for (" + std::to_string(i) + "," + std::to_string(j) +
                              ") must have degree d-2 = " + std::to_string(ctx.d - 2));
  }
  for (const auto& [k, g] : linear_coeffs) {
    if (!(ctx.e < k && k <= ctx.n))
      throw PreconditionError("linear index " + std::to_string(k) + " outside e+1..n");
    if (g.context().num_vars() != ctx.num_vars()) throw PreconditionError("linear coefficient in wrong ring");
    if (!g.is_zero() && g.degree() != ctx.d - 1)
      throw PreconditionError("linear coefficient for x" + std::to_string(k) + " must have degree d-1 = " +
                              std::to_string(ctx.d - 1));
  }
}

template <class K>
MultiPoly<K> IdealCombination<K>::assemble() const {
  validate();
  MultiPoly<K> total(context, field, context.d);
  for (const auto& [ij, c] : quadric_coeffs) total += c * build_quadric(context, field, ij.first, ij.second);
  for (const auto& [k, g] : linear_coeffs) total += g * MultiPoly<K>::variable(context, field, k);
  return total;
}

template <class K>
void IdealCombination<K>::add_quadric(int i, int j, const MultiPoly<K>& c) {
  if (c.is_zero()) return;
  auto it = quadric_coeffs.find({i, j});
  if (it == quadric_coeffs.end()) {
    quadric_coeffs.emplace(std::make_pair(i, j), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) quadric_coeffs.erase(it);
  }
}

template <class K>
void IdealCombination<K>::add_linear(int k, const MultiPoly<K>& c) {
  if (c.is_zero()) return;
  auto it = linear_coeffs.find(k);
  if (it == linear_coeffs.end()) {
    linear_coeffs.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) linear_coeffs.erase(it);
  }
}

template <class K>
IdealCombination<K> IdealCombination<K>::embedded(const CurveContext& bigger) const {
  if (bigger.e != context.e || bigger.d != context.d) throw PreconditionError("embedding must keep d and e");
  IdealCombination out(bigger, field);
  for (const auto& [ij, c] : quadric_coeffs) out.quadric_coeffs.emplace(ij, c.embedded(bigger));
  for (const auto& [k, g] : linear_coeffs) out.linear_coeffs.emplace(k, g.embedded(bigger));
  return out;
}

template <class K>
std::string IdealCombination<K>::to_string() const {
  std::string out;
  for (const auto& [ij, c] : quadric_coeffs)
    out += "Q " + std::to_string(ij.first) + " " + std::to_string(ij.second) + " : " + c.to_string() + "\n";
  for (const auto& [k, g] : linear_coeffs) out += "X " + std::to_string(k) + " : " + g.to_string() + "\n";
  return out;
}

template <class K>
IdealCombination<K> decompose_into_ideal(const MultiPoly<K>& f) {
  const auto& ctx = f.context();
  const K& field = f.field();
  IdealCombination<K> out(ctx, field);
  if (f.is_zero()) return out;
  if (f.degree() != ctx.d)
    throw PreconditionError("decomposition expects a polynomial of degree d = " + std::to_string(ctx.d));

  MultiPoly<K> rest = f;
  for (int k = ctx.n; k > ctx.e; --k) {
    MultiPoly<K> cofactor(ctx, field, ctx.d - 1);
    MultiPoly<K> kept(ctx, field, ctx.d);
    for (const auto& [exp, c] : rest.terms()) {
      if (exp[k] > 0) {
        Exponent lowered = exp;
        --lowered[k];
        cofactor.add_term(lowered, c);
      } else {
        kept.add_term(exp, c);
      }
    }
    out.add_linear(k, cofactor);
    rest = std::move(kept);
  }

  // Leading term of Q_{a+1,b} is -x_a x_b (b - a >= 2); these leading terms
  // generate the initial ideal, so the division is expected to terminate at 0.
  MultiPoly<K> remainder(ctx, field, ctx.d);
  while (!rest.is_zero()) {
    auto [exp, c] = *rest.terms().begin();
    int a = 0, b = ctx.e;
    while (exp[a] == 0) ++a;
    while (exp[b] == 0) --b;
    if (b - a < 2) {
      remainder.add_term(exp, c);
      rest -= MultiPoly<K>::monomial(ctx, field, exp, c);
      continue;
    }
    Exponent cof = exp;
    --cof[a];
    --cof[b];
    auto term = MultiPoly<K>::monomial(ctx, field, cof, field.neg(c));
    out.add_quadric(a + 1, b, term);
    rest -= term * build_quadric(ctx, field, a + 1, b);
  }
  if (!remainder.is_zero())
    throw PreconditionError("polynomial does not lie in the curve ideal: division by the quadrics under grlex with "
                            "x0 > x1 > ... > x" + std::to_string(ctx.n) + " leaves remainder " +
                            remainder.to_string());
  return out;
}

template class MultiPoly<RationalField>;
template class MultiPoly<PrimeField>;
template struct IdealCombination<RationalField>;
template struct IdealCombination<PrimeField>;

#define TSPLIT_INSTANTIATE(K)                                                                        \
  template MultiPoly<K> parse_poly(std::string_view, const CurveContext&, const K&, int);            \
  template MultiPoly<K> build_quadric(const CurveContext&, const K&, int, int);                      \
  template BinaryForm<K> restrict_to_curve(const MultiPoly<K>&);                                     \
  template std::vector<BinaryForm<K>> gradient_on_curve(const MultiPoly<K>&);                        \
  template MultiPoly<K> lift_binary_form(const BinaryForm<K>&, const CurveContext&, int);            \
  template IdealCombination<K> decompose_into_ideal(const MultiPoly<K>&);
TSPLIT_INSTANTIATE(RationalField)
TSPLIT_INSTANTIATE(PrimeField)
#undef TSPLIT_INSTANTIATE

}  // namespace tsplit
