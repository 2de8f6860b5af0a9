#include "tsplit/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "tsplit/errors.hpp"

namespace tsplit {

template <class K>
void Matrix<K>::append_row(const std::vector<Element>& r) {
  if (r.size() != cols_) throw PreconditionError("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

template <class K>
std::vector<typename Matrix<K>::Element> Matrix<K>::row_vector(std::size_t i) const {
  return std::vector<Element>(row(i), row(i) + cols_);
}

template <class K>
void Matrix<K>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

namespace {

// row_dst -= factor * row_src over columns [from, cols)
template <class K>
void axpy(const K& f, typename K::Element* dst, const typename K::Element* src, const typename K::Element& factor,
          std::size_t from, std::size_t cols) {
  auto neg = f.neg(factor);
  for (std::size_t j = from; j < cols; ++j)
    if (!f.is_zero(src[j])) f.fma(dst[j], neg, src[j]);
}

template <class K>
void scale_row(const K& f, typename K::Element* r, const typename K::Element& c, std::size_t from, std::size_t cols) {
  for (std::size_t j = from; j < cols; ++j) r[j] = f.mul(r[j], c);
}

}  // namespace

template <class K>
std::vector<std::size_t> rref_in_place(Matrix<K>& m) {
  const K& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && f.is_zero(m.at(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    scale_row(f, m.row(r), f.inv(m.at(r, c)), c, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      auto factor = m.at(i, c);
      axpy(f, m.row(i), m.row(r), factor, c, m.cols());
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
std::size_t rank(Matrix<K> m) {
  const K& f = m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && f.is_zero(m.at(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    auto inv = f.inv(m.at(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (f.is_zero(m.at(i, c))) continue;
      auto factor = f.mul(m.at(i, c), inv);
      axpy(f, m.row(i), m.row(r), factor, c, m.cols());
    }
    ++r;
  }
  return r;
}

template <class K>
Matrix<K> row_basis(Matrix<K> m) {
  auto pivots = rref_in_place(m);
  m.resize_rows(pivots.size());
  return m;
}

template <class K>
Matrix<K> nullspace(const Matrix<K>& m) {
  const K& f = m.field();
  Matrix<K> r = m;
  auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix<K> basis(f, 0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename K::Element> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r.at(i, free));
    basis.append_row(v);
  }
  return row_basis(std::move(basis));
}

template <class K>
typename K::Element determinant(Matrix<K> m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  const K& f = m.field();
  auto det = f.one();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t p = c;
    while (p < m.rows() && f.is_zero(m.at(p, c))) ++p;
    if (p == m.rows()) return f.zero();
    if (p != c) {
      m.swap_rows(p, c);
      det = f.neg(det);
    }
    det = f.mul(det, m.at(c, c));
    auto inv = f.inv(m.at(c, c));
    for (std::size_t i = c + 1; i < m.rows(); ++i) {
      if (f.is_zero(m.at(i, c))) continue;
      axpy(f, m.row(i), m.row(c), f.mul(m.at(i, c), inv), c, m.cols());
    }
  }
  return det;
}

template <class K>
std::optional<std::vector<typename K::Element>> solve(const Matrix<K>& a, const std::vector<typename K::Element>& b) {
  const K& f = a.field();
  if (b.size() != a.rows()) throw PreconditionError("right-hand side length mismatch");
  Matrix<K> aug(f, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<typename K::Element> x(a.cols(), f.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
  return x;
}

template class Matrix<RationalField>;
template class Matrix<PrimeField>;

#define TSPLIT_INSTANTIATE(K)                                                                      \
  template std::vector<std::size_t> rref_in_place(Matrix<K>&);                                    \
  template std::size_t rank(Matrix<K>);                                                            \
  template Matrix<K> nullspace(const Matrix<K>&);                                                  \
  template Matrix<K> row_basis(Matrix<K>);                                                         \
  template K::Element determinant(Matrix<K>);                                                      \
  template std::optional<std::vector<K::Element>> solve(const Matrix<K>&, const std::vector<K::Element>&);
TSPLIT_INSTANTIATE(RationalField)
TSPLIT_INSTANTIATE(PrimeField)
#undef TSPLIT_INSTANTIATE

}  // namespace tsplit
