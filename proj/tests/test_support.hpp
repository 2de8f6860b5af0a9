#ifndef TSPLIT_TESTS_SUPPORT_HPP
#define TSPLIT_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "tsplit/constructor.hpp"
#include "tsplit/field.hpp"
#include "tsplit/kernel.hpp"
#include "tsplit/multipoly.hpp"
#include "tsplit/sheaf_map.hpp"
#include "tsplit/splitting.hpp"

namespace tsplit::testing {

inline std::mt19937_64 make_rng(std::uint64_t salt) { return std::mt19937_64(0x5eed0000ULL + salt); }

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <class K>
BinaryForm<K> random_form(const K& field, int degree, std::mt19937_64& rng) {
  std::vector<typename K::Element> coeffs;
  for (int i = 0; i <= degree; ++i) coeffs.push_back(field.random(rng));
  return BinaryForm<K>(field, std::move(coeffs));
}

template <class K>
BinaryForm<K> form(const K& field, const std::string& text) {
  return parse_binary_form(field, text);
}

template <class K>
std::vector<BinaryForm<K>> forms(const K& field, std::initializer_list<const char*> texts) {
  std::vector<BinaryForm<K>> out;
  for (const char* t : texts) out.push_back(parse_binary_form(field, t));
  return out;
}

template <class K>
std::vector<BinaryForm<K>> row_of(const GradedSheafMap<K>& m, std::size_t i = 0) {
  std::vector<BinaryForm<K>> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.entry(i, j));
  return out;
}

// All exponent vectors of total degree k in `vars` variables.
inline std::vector<Exponent> monomials(int vars, int k) {
  std::vector<Exponent> out;
  Exponent cur(vars, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == vars - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur[pos] = a;
      self(self, pos + 1, left - a);
    }
  };
  rec(rec, 0, k);
  return out;
}

// Dense random homogeneous polynomial of degree k (each monomial kept with probability 1/2).
template <class K>
MultiPoly<K> random_poly(const CurveContext& ctx, const K& field, int k, std::mt19937_64& rng) {
  MultiPoly<K> p(ctx, field, k);
  for (const auto& exp : monomials(ctx.num_vars(), k))
    if (uniform(rng, 0, 1)) p.add_term(exp, field.random(rng));
  return p;
}

template <class K>
IdealCombination<K> random_ideal_combination(const CurveContext& ctx, const K& field, std::mt19937_64& rng) {
  IdealCombination<K> f(ctx, field);
  for (int i = 1; i <= ctx.e; ++i)
    for (int j = i + 1; j <= ctx.e; ++j)
      if (uniform(rng, 0, 2)) f.add_quadric(i, j, random_poly(ctx, field, ctx.d - 2, rng));
  for (int k = ctx.e + 1; k <= ctx.n; ++k) f.add_linear(k, random_poly(ctx, field, ctx.d - 1, rng));
  return f;
}

// Random ideal combination that is smooth along the curve.
template <class K>
IdealCombination<K> random_smooth_combination(const CurveContext& ctx, const K& field, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    auto f = random_ideal_combination(ctx, field, rng);
    if (check_smooth_along_curve(f)) return f;
  }
  throw std::runtime_error("no smooth random combination for " + ctx.to_string());
}

// Random map O(b_1)+...+O(b_c) -> O(c_1)+...+O(c_r) that is surjective as a sheaf map.
template <class K>
GradedSheafMap<K> random_surjective_map(const K& field, std::mt19937_64& rng, int max_cols = 6, int spread = 8) {
  while (true) {
    int cols = uniform(rng, 2, max_cols);
    int rows = uniform(rng, 1, std::min(3, cols - 1));
    std::vector<int> target, source;
    for (int i = 0; i < rows; ++i) target.push_back(uniform(rng, spread / 2, spread));
    for (int j = 0; j < cols; ++j) source.push_back(uniform(rng, 0, spread / 2));
    GradedSheafMap<K> m(field, TwistSum(target), TwistSum(source));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (uniform(rng, 0, 4)) m.set(i, j, random_form(field, target[i] - source[j], rng));
    if (full_rank_everywhere(m)) return m;
  }
}

// Every splitting type of the given rank and degree with parts in [lo, hi].
inline std::vector<SplittingType> all_splittings(int rank, int degree, int lo, int hi) {
  std::vector<SplittingType> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next_min, int left_rank, long long left_degree) -> void {
    if (left_rank == 0) {
      if (left_degree == 0) out.emplace_back(cur);
      return;
    }
    for (int a = next_min; a <= hi; ++a) {
      // remaining parts are all >= a
      if (static_cast<long long>(a) * left_rank > left_degree) break;
      if (static_cast<long long>(hi) * (left_rank - 1) + a < left_degree) continue;
      cur.push_back(a);
      self(self, a, left_rank - 1, left_degree - a);
      cur.pop_back();
    }
  };
  rec(rec, lo, rank, degree);
  return out;
}

}  // namespace tsplit::testing

#endif
