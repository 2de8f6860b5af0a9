#include "tsplit/kernel.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "tsplit/errors.hpp"

namespace tsplit {
namespace {

std::vector<std::size_t> block_offsets(const TwistSum& twists, int shift, std::size_t* total) {
  std::vector<std::size_t> off(twists.size() + 1, 0);
  for (std::size_t i = 0; i < twists.size(); ++i) off[i + 1] = off[i] + std::max(0, twists[i] + shift + 1);
  if (total) *total = off.back();
  return off;
}

std::string scan_context(const TwistSum& target, const TwistSum& source) {
  return " (map " + target.to_string() + " <- " + source.to_string() + ")";
}

}  // namespace

template <class K>
Matrix<K> section_matrix(const GradedSheafMap<K>& m, int twist) {
  std::size_t nr = 0, nc = 0;
  auto roff = block_offsets(m.target(), twist, &nr);
  auto coff = block_offsets(m.source(), twist, &nc);
  Matrix<K> a(m.field(), nr, nc);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& f = m.entry(i, j);
      if (f.is_zero()) continue;
      std::size_t width = coff[j + 1] - coff[j];
      for (std::size_t q = 0; q < width; ++q)
        for (int l = 0; l <= f.degree(); ++l) a.at(roff[i] + q + l, coff[j] + q) = f[l];
    }
  }
  return a;
}

template <class K>
std::size_t section_kernel_dim(const GradedSheafMap<K>& m, int twist) {
  auto a = section_matrix(m, twist);
  return a.cols() - rank(std::move(a));
}

template <class K>
std::size_t generic_rank(const GradedSheafMap<K>& m) {
  const K& field = m.field();
  std::size_t full = std::min(m.rows(), m.cols());
  if (full == 0) return 0;
  auto rank_at = [&](const typename K::Element& s, const typename K::Element& t) {
    Matrix<K> a(field, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) a.at(i, j) = m.entry(i, j).eval(s, t);
    return rank(std::move(a));
  };
  std::size_t best = 0;
  const std::pair<int, int> fixed[] = {{1, 0}, {0, 1}, {1, 1}};
  for (auto [s, t] : fixed) {
    best = std::max(best, rank_at(field.from_int(s), field.from_int(t)));
    if (best == full) return best;
  }
  std::mt19937_64 rng(0x7a6e5eedULL + 131 * m.rows() + m.cols());
  for (int k = 0; k < 6 && best < full; ++k)
    best = std::max(best, rank_at(field.random(rng), field.random_nonzero(rng)));
  return best;
}

template <class K>
SplittingType splitting_of_kernel(const GradedSheafMap<K>& m) {
  const std::size_t cols = m.cols();
  if (cols == 0) return {};
  const std::size_t rho = generic_rank(m);
  const int r = static_cast<int>(cols - rho);
  const TwistSum& src = m.source();
  const TwistSum& tgt = m.target();
  const long long B = src.max();
  const long long sum_b = src.sum();

  // Lowest possible kernel twist: the stated pessimistic bound, widened by the
  // bound deg K >= sum b - (top rho target twists) when that is lower.
  long long max_c = tgt.size() ? tgt.max() : 0;
  long long a_lo = sum_b - static_cast<long long>(tgt.size()) * max_c - static_cast<long long>(cols) * B;
  std::vector<int> c_sorted = tgt.twists;
  std::sort(c_sorted.rbegin(), c_sorted.rend());
  long long top = 0;
  for (std::size_t i = 0; i < rho && i < c_sorted.size(); ++i) top += c_sorted[i];
  a_lo = std::min(a_lo, sum_b - top - static_cast<long long>(std::max(r - 1, 0)) * B);
  const int hi = static_cast<int>(-a_lo);

  std::map<int, long long> memo;
  auto N = [&](int twist) -> long long {
    if (twist < -B - 1) return 0;
    auto it = memo.find(twist);
    if (it != memo.end()) return it->second;
    long long v = static_cast<long long>(section_kernel_dim(m, twist));
    memo.emplace(twist, v);
    return v;
  };

  if (r == 0) {
    if (N(hi) != 0) throw CertificationError("kernel has sections although generic rank is full" + scan_context(tgt, src));
    return {};
  }
  if (N(hi) == 0)
    throw CertificationError("no kernel sections at the top of the scan window" + scan_context(tgt, src));

  int lo = static_cast<int>(-B), up = hi;
  while (lo < up) {
    int mid = lo + (up - lo) / 2;
    if (N(mid) > 0) up = mid;
    else lo = mid + 1;
  }

  std::vector<int> parts;
  long long prev_count = 0;
  for (int twist = lo; twist <= hi; ++twist) {
    long long count = N(twist) - N(twist - 1);
    if (count < prev_count)
      throw CertificationError("summand count decreased at twist " + std::to_string(twist) + scan_context(tgt, src));
    if (count > r)
      throw CertificationError("summand count exceeds the expected rank at twist " + std::to_string(twist) +
                               scan_context(tgt, src));
    parts.insert(parts.end(), count - prev_count, -twist);
    prev_count = count;
    if (count == r) {
      if (N(twist + 1) - N(twist) != r)
        throw CertificationError("summand count did not stabilize after twist " + std::to_string(twist) +
                                 scan_context(tgt, src));
      break;
    }
  }
  if (static_cast<int>(parts.size()) != r)
    throw CertificationError("scan recovered rank " + std::to_string(parts.size()) + " but generic rank predicts " +
                             std::to_string(r) + scan_context(tgt, src));

  SplittingType result(std::move(parts));
  for (int twist : {hi - 1, hi}) {
    long long expect = 0;
    for (int a : result.parts()) expect += std::max(0, a + twist + 1);
    if (N(twist) != expect)
      throw CertificationError("recovered splitting " + result.to_string() + " disagrees with the section count at twist " +
                               std::to_string(twist) + scan_context(tgt, src));
  }
  return result;
}

template <class K>
GradedSheafMap<K> kernel_matrix(const GradedSheafMap<K>& m) {
  using Element = typename K::Element;
  const K& field = m.field();
  const TwistSum& src = m.source();
  SplittingType split = splitting_of_kernel(m);

  struct Generator {
    int twist;
    std::vector<std::vector<Element>> blocks;  // per source summand, coefficients by t-exponent
  };
  std::vector<Generator> gens;

  std::vector<int> distinct = split.parts();
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::reverse(distinct.begin(), distinct.end());

  for (int a : distinct) {
    const int twist = -a;
    std::size_t width = 0;
    auto off = block_offsets(src, twist, &width);
    Matrix<K> v = nullspace(section_matrix(m, twist));

    Matrix<K> w(field, 0, width);
    for (const auto& g : gens) {
      int k = g.twist - a;
      for (int shift = 0; shift <= k; ++shift) {
        std::vector<Element> row(width, field.zero());
        for (std::size_t j = 0; j < src.size(); ++j)
          for (std::size_t q = 0; q < g.blocks[j].size(); ++q) row[off[j] + q + shift] = g.blocks[j][q];
        w.append_row(row);
      }
    }
    Matrix<K> wb = row_basis(std::move(w));
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < wb.rows(); ++i) {
      std::size_t p = 0;
      while (field.is_zero(wb.at(i, p))) ++p;
      pivots.push_back(p);
    }
    for (std::size_t r = 0; r < v.rows(); ++r) {
      for (std::size_t i = 0; i < wb.rows(); ++i) {
        Element c = v.at(r, pivots[i]);
        if (field.is_zero(c)) continue;
        for (std::size_t col = 0; col < width; ++col) v.at(r, col) = field.sub(v.at(r, col), field.mul(c, wb.at(i, col)));
      }
    }
    Matrix<K> fresh = row_basis(std::move(v));
    const int want = split.count(a);
    if (static_cast<int>(fresh.rows()) != want)
      throw CertificationError("kernel generators at twist " + std::to_string(a) + ": found " +
                               std::to_string(fresh.rows()) + ", expected " + std::to_string(want));
    for (std::size_t i = 0; i < fresh.rows(); ++i) {
      Generator g{a, {}};
      for (std::size_t j = 0; j < src.size(); ++j)
        g.blocks.emplace_back(fresh.row(i) + off[j], fresh.row(i) + off[j + 1]);
      gens.push_back(std::move(g));
    }
  }

  std::vector<int> twists;
  for (const auto& g : gens) twists.push_back(g.twist);
  GradedSheafMap<K> k(field, src, TwistSum(twists));
  for (std::size_t c = 0; c < gens.size(); ++c)
    for (std::size_t j = 0; j < src.size(); ++j)
      if (!gens[c].blocks[j].empty()) k.set(j, c, BinaryForm<K>(field, gens[c].blocks[j]));

  if (!compose(m, k).is_zero()) throw CertificationError("kernel matrix does not compose to zero");
  if (!full_rank_everywhere(k)) throw CertificationError("kernel matrix drops rank somewhere on P^1");
  return k;
}

template <class K>
GradedSheafMap<K> cokernel_matrix(const GradedSheafMap<K>& n) {
  if (n.rows() < n.cols() || !full_rank_everywhere(n))
    throw PreconditionError("cokernel needs an injective map of full rank everywhere" + scan_context(n.target(), n.source()));
  return dual(kernel_matrix(dual(n)));
}

template <class K>
BinaryForm<K> form_determinant(std::vector<std::vector<BinaryForm<K>>> a) {
  const std::size_t n = a.size();
  if (n == 0) throw PreconditionError("determinant of an empty matrix");
  const K& field = a[0][0].field();
  BinaryForm<K> prev(field, {field.one()});
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return BinaryForm<K>(field);
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BinaryForm<K> x = a[k][k] * a[i][j];
        x -= a[i][k] * a[k][j];
        a[i][j] = x.is_zero() ? BinaryForm<K>(field) : x.divided_by(prev);
      }
      a[i][k] = BinaryForm<K>(field);
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

namespace {

template <class Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (fn(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <class K, class Fn>
bool for_each_minor(const GradedSheafMap<K>& m, Fn&& fn) {
  const std::size_t k = std::min(m.rows(), m.cols());
  const bool pick_rows = m.rows() >= m.cols();
  return for_each_subset(pick_rows ? m.rows() : m.cols(), k, [&](const std::vector<std::size_t>& idx) {
    std::vector<std::vector<BinaryForm<K>>> sub(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i].push_back(pick_rows ? m.entry(idx[i], j) : m.entry(i, idx[j]));
    return fn(form_determinant(std::move(sub)));
  });
}

}  // namespace

template <class K>
std::vector<BinaryForm<K>> maximal_minors(const GradedSheafMap<K>& m) {
  std::vector<BinaryForm<K>> out;
  if (std::min(m.rows(), m.cols()) == 0) return out;
  for_each_minor(m, [&](BinaryForm<K> f) {
    out.push_back(std::move(f));
    return false;
  });
  return out;
}

template <class K>
bool full_rank_everywhere(const GradedSheafMap<K>& m) {
  if (std::min(m.rows(), m.cols()) == 0) return true;
  std::optional<BinaryForm<K>> g;
  return for_each_minor(m, [&](BinaryForm<K> f) {
    if (f.is_zero()) return false;
    if (!g) {
      g = f;
    } else {
      g = gcd(*g, f);
    }
    return g->degree() == 0;
  });
}

template <class K>
bool check_smooth_along_curve(const IdealCombination<K>& f) {
  auto grads = gradient_on_curve(f.assemble());
  bool any = std::any_of(grads.begin(), grads.end(), [](const auto& g) { return !g.is_zero(); });
  if (!any) return false;
  return gcd(std::span<const BinaryForm<K>>(grads)).degree() == 0;
}

template <class K>
EulerRoutes euler_routes(const IdealCombination<K>& f, int m) {
  if (m < -1) throw PreconditionError("Euler cross-check needs twist >= -1, got " + std::to_string(m));
  if (!check_smooth_along_curve(f)) throw PreconditionError("Euler cross-check needs F smooth along the curve");
  EulerRoutes r;
  r.via_delta = static_cast<long long>(section_kernel_dim(build_delta(f), m));
  r.via_gradient = static_cast<long long>(section_kernel_dim(gradient_map(f), m)) - std::max(0, m + 1);
  return r;
}

#define TSPLIT_INSTANTIATE(K)                                                          \
  template Matrix<K> section_matrix(const GradedSheafMap<K>&, int);                    \
  template std::size_t section_kernel_dim(const GradedSheafMap<K>&, int);              \
  template std::size_t generic_rank(const GradedSheafMap<K>&);                         \
  template SplittingType splitting_of_kernel(const GradedSheafMap<K>&);                \
  template GradedSheafMap<K> kernel_matrix(const GradedSheafMap<K>&);                  \
  template GradedSheafMap<K> cokernel_matrix(const GradedSheafMap<K>&);                \
  template BinaryForm<K> form_determinant(std::vector<std::vector<BinaryForm<K>>>);    \
  template std::vector<BinaryForm<K>> maximal_minors(const GradedSheafMap<K>&);        \
  template bool full_rank_everywhere(const GradedSheafMap<K>&);                        \
  template bool check_smooth_along_curve(const IdealCombination<K>&);                  \
  template EulerRoutes euler_routes(const IdealCombination<K>&, int);
TSPLIT_INSTANTIATE(RationalField)
TSPLIT_INSTANTIATE(PrimeField)
#undef TSPLIT_INSTANTIATE

}  // namespace tsplit
