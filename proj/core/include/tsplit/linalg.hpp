#ifndef TSPLIT_LINALG_HPP
#define TSPLIT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tsplit/field.hpp"

namespace tsplit {

// Dense row-major matrix over K.
template <class K>
class Matrix {
 public:
  using Element = typename K::Element;

  Matrix(const K& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  const K& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Element& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Element* row(std::size_t i) { return data_.data() + i * cols_; }
  const Element* row(std::size_t i) const { return data_.data() + i * cols_; }

  void append_row(const std::vector<Element>& r);
  std::vector<Element> row_vector(std::size_t i) const;
  void swap_rows(std::size_t a, std::size_t b);
  void resize_rows(std::size_t rows) { data_.resize(rows * cols_, field_.zero()); rows_ = rows; }

 private:
  K field_;
  std::size_t rows_, cols_;
  std::vector<Element> data_;
};

// Reduces m to reduced row echelon form in place; returns pivot columns.
template <class K>
std::vector<std::size_t> rref_in_place(Matrix<K>& m);

template <class K>
std::size_t rank(Matrix<K> m);

// Canonical basis (rows, in reduced echelon form) of {x : m x = 0}.
template <class K>
Matrix<K> nullspace(const Matrix<K>& m);

// Rows of the reduced echelon form of m with zero rows dropped.
template <class K>
Matrix<K> row_basis(Matrix<K> m);

template <class K>
typename K::Element determinant(Matrix<K> m);

// Some x with a x = b (free variables zero), or nullopt.
template <class K>
std::optional<std::vector<typename K::Element>> solve(const Matrix<K>& a, const std::vector<typename K::Element>& b);

extern template class Matrix<RationalField>;
extern template class Matrix<PrimeField>;

}  // namespace tsplit

#endif
