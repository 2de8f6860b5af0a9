#include "tsplit/constructor.hpp"

#include <algorithm>

#include "tsplit/errors.hpp"
#include "tsplit/linalg.hpp"

namespace tsplit {

std::string strategy_name(ExtensionStrategy s) {
  switch (s) {
    case ExtensionStrategy::J0: return "J0";
    case ExtensionStrategy::J1: return "J1";
    case ExtensionStrategy::J2: return "J2";
  }
  return "?";
}

namespace {

SplittingType replaced(const SplittingType& s, int twist, int removed, int added_twist, int added) {
  std::vector<int> parts = s.parts();
  for (int k = 0; k < removed; ++k) {
    auto it = std::find(parts.begin(), parts.end(), twist);
    parts.erase(it);
  }
  parts.insert(parts.end(), added, added_twist);
  return SplittingType(std::move(parts));
}

}  // namespace

ExtensionStrategy select_strategy(const SplittingType& current, const SplittingType& target, int e) {
  if (current.rank() > 0) {
    const int a = current.min();
    const int r = current.count(a);
    if (a + 2 == e && replaced(current, a, 1, a + 1, 2) == target) return ExtensionStrategy::J1;
    if (r >= 2 && a + 3 == e && replaced(current, a, 2, a + 1, 3) == target) return ExtensionStrategy::J2;
  }
  if (replaced(current, 0, 0, e, 1) == target) return ExtensionStrategy::J0;
  throw PreconditionError("target " + target.to_string() + " is not reachable from " + current.to_string() +
                          " by a single J0, J1 or J2 step (e = " + std::to_string(e) + ")");
}

template <class K>
ExtensionStep<K> extend_dimension(const IdealCombination<K>& f, const SplittingType& target) {
  const CurveContext& ctx = f.context;
  const K& field = f.field;
  const int d = ctx.d, e = ctx.e, n = ctx.n;
  if (target.rank() != n || target.degree() != static_cast<long long>(e) * (n + 2 - d))
    throw PreconditionError("extension target " + target.to_string() + " must have rank " + std::to_string(n) +
                            " and degree " + std::to_string(static_cast<long long>(e) * (n + 2 - d)));
  const CurveContext next = ctx.with_n(n + 1);

  auto delta_in = build_delta(f);
  auto k_desc = kernel_matrix(delta_in);
  std::vector<std::size_t> order(k_desc.cols());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
  auto k = permute_columns(k_desc, order);
  const TwistSum& src = k.source();
  const TwistSum& ambient = k.target();
  SplittingType current(src.twists);
  const ExtensionStrategy strategy = select_strategy(current, target, e);

  const std::size_t rows = k.rows(), cols = k.cols();
  const int a = current.rank() ? current.min() : 0;
  const BinaryForm<K> s_form = BinaryForm<K>::monomial(field, 1, 0);
  const BinaryForm<K> t_form = BinaryForm<K>::monomial(field, 0, 1);
  const BinaryForm<K> one = BinaryForm<K>::monomial(field, 0, 0);
  const auto minus_one = field.neg(field.one());

  std::vector<int> jt;
  switch (strategy) {
    case ExtensionStrategy::J0:
      jt = src.twists;
      jt.push_back(e);
      break;
    case ExtensionStrategy::J1:
      jt.push_back(a + 1);
      jt.insert(jt.end(), src.twists.begin() + 1, src.twists.end());
      jt.push_back(a + 1);
      break;
    case ExtensionStrategy::J2:
      jt = {a + 1, a + 1};
      jt.insert(jt.end(), src.twists.begin() + 2, src.twists.end());
      jt.push_back(a + 1);
      break;
  }
  const TwistSum jtwists(jt);
  const std::size_t last = jt.size() - 1;

  GradedSheafMap<K> j(field, jtwists, src);
  GradedSheafMap<K> n1(field, ambient, jtwists);
  GradedSheafMap<K> n2(field, TwistSum{e}, jtwists);

  switch (strategy) {
    case ExtensionStrategy::J0:
      for (std::size_t c = 0; c < cols; ++c) j.set(c, c, one);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) n1.set(r, c, k.entry(r, c));
      n2.set(0, last, one);
      break;
    case ExtensionStrategy::J1:
      j.set(0, 0, s_form);
      j.set(last, 0, t_form);
      for (std::size_t c = 1; c < cols; ++c) j.set(c, c, one);
      for (std::size_t r = 0; r < rows; ++r) {
        // k = s*p + c*t^D: p feeds the first column, c*t^(D-1) the last.
        const auto& k1 = k.entry(r, 0);
        if (!k1.is_zero()) {
          const int deg = k1.degree();
          auto tail = BinaryForm<K>::monomial(field, 0, deg, k1[deg]);
          auto rest = k1;
          rest -= tail;
          n1.set(r, 0, rest.divided_by_monomial(1, 0));
          n1.set(r, last, BinaryForm<K>::monomial(field, 0, deg - 1, k1[deg]));
        }
        for (std::size_t c = 1; c < cols; ++c) n1.set(r, c, k.entry(r, c));
      }
      n2.set(0, 0, t_form);
      n2.set(0, last, -s_form);
      break;
    case ExtensionStrategy::J2:
      j.set(0, 0, s_form);
      j.set(1, 1, t_form);
      j.set(last, 0, t_form);
      j.set(last, 1, s_form);
      for (std::size_t c = 2; c < cols; ++c) j.set(c, c, one);
      for (std::size_t r = 0; r < rows; ++r) {
        const auto& k1 = k.entry(r, 0);
        const auto& k2 = k.entry(r, 1);
        const int deg = k.entry_degree(r, 0);
        auto c1 = k1.is_zero() ? field.zero() : k1[deg];
        auto c2 = k2.is_zero() ? field.zero() : k2[0];
        // k1 = s*p + c1*t^D and k2 = t*q + c2*s^D.
        BinaryForm<K> p(field), q(field);
        if (!k1.is_zero()) {
          auto rest = k1;
          rest -= BinaryForm<K>::monomial(field, 0, deg, c1);
          p = rest.divided_by_monomial(1, 0);
        }
        if (!k2.is_zero()) {
          auto rest = k2;
          rest -= BinaryForm<K>::monomial(field, deg, 0, c2);
          q = rest.divided_by_monomial(0, 1);
        }
        p -= BinaryForm<K>::monomial(field, deg - 2, 1, c2);
        q -= BinaryForm<K>::monomial(field, 1, deg - 2, c1);
        auto b_last = BinaryForm<K>::monomial(field, 0, deg - 1, c1);
        b_last += BinaryForm<K>::monomial(field, deg - 1, 0, c2);
        n1.set(r, 0, p);
        n1.set(r, 1, q);
        n1.set(r, last, b_last);
        for (std::size_t c = 2; c < cols; ++c) n1.set(r, c, k.entry(r, c));
      }
      n2.set(0, 0, BinaryForm<K>::monomial(field, 0, 2));
      n2.set(0, 1, BinaryForm<K>::monomial(field, 2, 0));
      n2.set(0, last, BinaryForm<K>::monomial(field, 1, 1, minus_one));
      break;
  }

  if (!(compose(n1, j) == k)) throw CertificationError("N1 * J does not reproduce the kernel matrix");
  if (!compose(n2, j).is_zero()) throw CertificationError("N2 * J is not zero");
  auto nmap = stack_rows(n1, n2);
  if (!full_rank_everywhere(nmap)) throw CertificationError("stacked N drops rank somewhere on P^1");

  auto raw = cokernel_matrix(nmap);
  // Scale the cokernel row so it extends the input delta.
  std::size_t pivot_col = 0;
  int pivot_idx = -1;
  for (std::size_t c = 0; c < delta_in.cols() && pivot_idx < 0; ++c) {
    const auto& form = delta_in.entry(0, c);
    for (int i = 0; i <= form.degree(); ++i)
      if (!field.is_zero(form[i])) {
        pivot_col = c;
        pivot_idx = i;
        break;
      }
  }
  if (pivot_idx < 0) throw PreconditionError("input delta is zero");
  const auto& raw_pivot = raw.entry(0, pivot_col);
  if (raw_pivot.is_zero() || field.is_zero(raw_pivot[pivot_idx]))
    throw CertificationError("cokernel of N does not extend the input delta");
  auto lambda = field.div(delta_in.entry(0, pivot_col)[pivot_idx], raw_pivot[pivot_idx]);
  GradedSheafMap<K> delta_norm(field, raw.target(), raw.source());
  for (std::size_t c = 0; c < raw.cols(); ++c) delta_norm.set(0, c, raw.entry(0, c).scaled(lambda));
  for (std::size_t c = 0; c < delta_in.cols(); ++c)
    if (!(delta_norm.entry(0, c) == delta_in.entry(0, c)))
      throw CertificationError("normalized cokernel differs from the input delta in column " + std::to_string(c + 1) +
                               ": " + delta_norm.entry(0, c).to_string() + " vs " + delta_in.entry(0, c).to_string());

  BinaryForm<K> g = delta_norm.entry(0, delta_norm.cols() - 1);
  IdealCombination<K> out = f.embedded(next);
  out.add_linear(n + 1, lift_binary_form(g, next, d - 1));
  auto delta_out = build_delta(out);
  if (!(delta_out == delta_norm)) throw CertificationError("delta of the extended F differs from coker N");
  if (!compose(delta_out, nmap).is_zero()) throw CertificationError("delta_out * N is not zero");

  return ExtensionStep<K>{f, strategy, std::move(out), std::move(k), std::move(j), std::move(n1), std::move(n2),
                          std::move(nmap), std::move(delta_out), std::move(g), target};
}

std::vector<int> general_ladder_steps(int d, int n) {
  if (n < 2 * d - 2) throw PreconditionError("general ladder needs n >= 2d-2");
  std::vector<int> steps(n - 2 * d + 2, d - 1);
  steps.insert(steps.end(), 2 * d - 4, d);
  return steps;
}

namespace {

void check_constructive(int d, int e, int n) {
  auto fail = [&](const std::string& why) {
    auto p = predicted_splitting(d, e, n);
    throw PreconditionError("no explicit construction for (d,e,n) = (" + std::to_string(d) + "," + std::to_string(e) +
                            "," + std::to_string(n) + "): " + why + "; catalog entry " + p.to_string());
  };
  if (d == 2 && e < 2) fail("quadric examples start at e = 2");
  if (d == 3 && e < 3) fail("cubic examples start at e = 3, smaller e is covered by the slope criterion");
  if (d == 4 && e < 4) fail("quartic examples start at e = 4, smaller e is covered by the slope criterion");
  if (d >= 5 && e != n) fail("the J0/J1/J2 steps cannot reach the balanced type for d >= 5 and n > e");
  if (d >= 5 && e < 2 * d - 2) fail("the general-degree ladder needs e = n >= 2d-2");
}

struct SeedTerm {
  int i, j;
  std::string coeff;
};

std::vector<SeedTerm> cubic_seed(int e) {
  if (e == 3) return {{1, 2, "x0"}, {2, 3, "x3"}};
  // x0 Q12 + x2 Q23 + x4 Q34 has delta (s^6t, -s^7+s^3t^4, -s^4t^3+t^7, -st^6).
  // With x1 as the middle coefficient delta is not surjective.
  if (e == 4) return {{1, 2, "x0"}, {2, 3, "x2"}, {3, 4, "x4"}};
  std::vector<SeedTerm> terms;
  for (int l = 1; l <= e - 3; ++l) terms.push_back({l, l + 1, "x" + std::to_string(l - 1)});
  terms.push_back({e - 2, e - 1, "x" + std::to_string(e - 2)});
  terms.push_back({e - 1, e, "x" + std::to_string(e)});
  return terms;
}

std::string sq(int m) { return "x" + std::to_string(m) + "^2"; }
std::string prod(int a, int b) { return "x" + std::to_string(a) + "*x" + std::to_string(b); }

std::vector<SeedTerm> quartic_seed(int e) {
  if (e == 4) return {{1, 2, sq(0)}, {2, 3, sq(2)}, {3, 4, sq(4)}};
  // Frozen from a search over exponent ladders of psi (steps 4,4,5).
  if (e == 5) return {{1, 2, sq(0)}, {2, 3, prod(0, 3)}, {3, 4, prod(1, 5)}, {4, 5, sq(5)}};
  if (e == 6)
    return {{1, 2, sq(0)}, {2, 3, prod(0, 3)}, {3, 4, sq(3)}, {4, 5, prod(3, 6)}, {5, 6, sq(6)}, {3, 6, sq(3)}};
  std::vector<SeedTerm> terms;
  for (int l = 1; l <= e - 5; ++l) terms.push_back({l, l + 1, sq(l - 1)});
  terms.push_back({e - 4, e - 3, prod(e - 5, e - 4)});
  terms.push_back({e - 3, e - 2, sq(e - 3)});
  // x_{n-2} x_{n-1}: the square x_{n-2}^2 breaks the psi ladder and the splitting for n >= 8.
  terms.push_back({e - 2, e - 1, prod(e - 2, e - 1)});
  terms.push_back({e - 1, e, sq(e)});
  return terms;
}

template <class K>
IdealCombination<K> from_seed(const CurveContext& ctx, const K& field, const std::vector<SeedTerm>& terms) {
  IdealCombination<K> f(ctx, field);
  for (const auto& t : terms) f.add_quadric(t.i, t.j, parse_poly(t.coeff, ctx, field, ctx.d - 2));
  return f;
}

}  // namespace

std::vector<SplittingType> extension_schedule(int d, int e, int n_target) {
  if (n_target < e) throw PreconditionError("schedule target n must be at least e");
  check_constructive(d, e, n_target);
  std::vector<SplittingType> out;
  for (int n = std::max(e, 3); n <= n_target; ++n) {
    auto p = predicted_splitting(d, e, n);
    if (!p.splitting) throw PreconditionError("no exact prediction at n = " + std::to_string(n));
    out.push_back(*p.splitting);
  }
  return out;
}

std::vector<ExtensionStrategy> extension_strategies(int d, int e, int n_target) {
  auto sched = extension_schedule(d, e, n_target);
  std::vector<ExtensionStrategy> out;
  for (std::size_t i = 1; i < sched.size(); ++i) out.push_back(select_strategy(sched[i - 1], sched[i], e));
  return out;
}

template <class K>
std::vector<BinaryForm<K>> ladder_targets(const CurveContext& ctx, const K& field, const std::vector<int>& steps) {
  const int e = ctx.e;
  const int total = e * (ctx.d - 1) - 2;
  if (static_cast<int>(steps.size()) != e - 2) throw PreconditionError("ladder needs e-2 steps");
  std::vector<BinaryForm<K>> out;
  int t = 0;
  for (int l = 0; l < e - 1; ++l) {
    if (l > 0) t += steps[l - 1];
    if (t > total) throw PreconditionError("ladder exceeds the target degree");
    out.push_back(BinaryForm<K>::monomial(field, total - t, t));
  }
  return out;
}

template <class K>
IdealCombination<K> lift_psi_targets(const std::vector<BinaryForm<K>>& targets, const CurveContext& ctx,
                                     const K& field) {
  const int d = ctx.d, e = ctx.e;
  const int total = e * (d - 1) - 2;
  const int rdeg = e * (d - 2);
  if (static_cast<int>(targets.size()) != e - 1)
    throw PreconditionError("expected " + std::to_string(e - 1) + " psi targets, got " + std::to_string(targets.size()));
  for (const auto& t : targets)
    if (!t.is_zero() && t.degree() != total)
      throw PreconditionError("psi target " + t.to_string() + " must have degree " + std::to_string(total));

  IdealCombination<K> f(ctx, field);
  bool diagonal = true;
  for (int l = 1; l <= e - 1 && diagonal; ++l) {
    const auto& t = targets[l - 1];
    diagonal = t.is_zero() || (t.s_valuation() >= e - l - 1 && t.t_valuation() >= l - 1);
  }
  if (diagonal) {
    for (int l = 1; l <= e - 1; ++l) {
      const auto& t = targets[l - 1];
      if (t.is_zero()) continue;
      f.add_quadric(l, l + 1, lift_binary_form(t.divided_by_monomial(e - l - 1, l - 1), ctx, d - 2));
    }
    return f;
  }

  // General path: unknown restrictions r_ij of degree e(d-2) for every pair i < j.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= e; ++i)
    for (int j = i + 1; j <= e; ++j) pairs.push_back({i, j});
  const std::size_t width = rdeg + 1;
  Matrix<K> a(field, (e - 1) * (total + 1), pairs.size() * width);
  std::vector<typename K::Element> rhs(a.rows(), field.zero());
  for (int l = 1; l <= e - 1; ++l) {
    const std::size_t row0 = (l - 1) * (total + 1);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      auto [i, j] = pairs[p];
      if (!(i <= l && l < j)) continue;
      const int t_shift = j + i - l - 2;
      for (std::size_t q = 0; q < width; ++q) a.at(row0 + q + t_shift, p * width + q) = field.one();
    }
    const auto& t = targets[l - 1];
    if (!t.is_zero())
      for (int k = 0; k <= total; ++k) rhs[row0 + k] = t[k];
  }
  auto sol = solve(a, rhs);
  if (!sol) {
    std::string residual;
    for (int l = 1; l <= e - 1; ++l) residual += (l > 1 ? ", " : "") + targets[l - 1].to_string();
    throw PreconditionError("psi targets (" + residual + ") are not in the image of the quadric columns");
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    std::vector<typename K::Element> coeffs(sol->begin() + p * width, sol->begin() + (p + 1) * width);
    BinaryForm<K> r(field, std::move(coeffs));
    if (r.is_zero()) continue;
    f.add_quadric(pairs[p].first, pairs[p].second, lift_binary_form(r, ctx, d - 2));
  }
  return f;
}

ExtensionStrategy induction_strategy(int d, int e, int n) {
  if (n <= e) throw PreconditionError("induction steps start at n = e+1");
  if (d == 3 && n == e + 1) return ExtensionStrategy::J1;
  if (d == 4 && n == e + 1) return ExtensionStrategy::J2;
  if (d == 4 && n <= 2 * e + 1) return ExtensionStrategy::J1;
  return ExtensionStrategy::J0;
}

template <class K>
IdealCombination<K> generate_example(const CurveContext& ctx, const K& field, std::vector<ExtensionStrategy>* steps) {
  const int d = ctx.d, e = ctx.e, n = ctx.n;
  check_constructive(d, e, n);
  const CurveContext seed_ctx = CurveContext::make(d, e, std::max(e, 3), ctx.field);

  if (d == 2) {
    IdealCombination<K> f(ctx, field);
    for (int l = 1; l < e; ++l) f.add_quadric(l, l + 1, MultiPoly<K>::constant(ctx, field, field.one()));
    return f;
  }
  if (d >= 5) return lift_psi_targets(ladder_targets(ctx, field, general_ladder_steps(d, n)), ctx, field);

  IdealCombination<K> f = from_seed(seed_ctx, field, d == 3 ? cubic_seed(e) : quartic_seed(e));
  auto schedule = extension_schedule(d, e, n);
  auto seed_split = splitting_of_kernel(build_delta(f));
  if (seed_split != schedule.front())
    throw CertificationError("seed hypersurface for (d,e) = (" + std::to_string(d) + "," + std::to_string(e) +
                             ") gives " + seed_split.to_string() + ", expected " + schedule.front().to_string());
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    auto step = extend_dimension(f, schedule[i]);
    if (steps) steps->push_back(step.strategy);
    f = std::move(step.output_F);
  }
  return f;
}

#define TSPLIT_INSTANTIATE(K)                                                                                   \
  template ExtensionStep<K> extend_dimension(const IdealCombination<K>&, const SplittingType&);                 \
  template IdealCombination<K> generate_example(const CurveContext&, const K&, std::vector<ExtensionStrategy>*);                                \
  template IdealCombination<K> lift_psi_targets(const std::vector<BinaryForm<K>>&, const CurveContext&, const K&); \
  template std::vector<BinaryForm<K>> ladder_targets(const CurveContext&, const K&, const std::vector<int>&);
TSPLIT_INSTANTIATE(RationalField)
TSPLIT_INSTANTIATE(PrimeField)
#undef TSPLIT_INSTANTIATE

}  // namespace tsplit
