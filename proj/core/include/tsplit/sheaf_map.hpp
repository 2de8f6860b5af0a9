#ifndef TSPLIT_SHEAF_MAP_HPP
#define TSPLIT_SHEAF_MAP_HPP

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "tsplit/binary_form.hpp"
#include "tsplit/multipoly.hpp"

namespace tsplit {

// Ordered twists (b_1, ..., b_r) of a sum of line bundles O(b_i) on P^1.
struct TwistSum {
  std::vector<int> twists;

  TwistSum() = default;
  TwistSum(std::initializer_list<int> t) : twists(t) {}
  explicit TwistSum(std::vector<int> t) : twists(std::move(t)) {}
  static TwistSum repeated(int twist, int count);

  std::size_t size() const { return twists.size(); }
  int operator[](std::size_t i) const { return twists[i]; }
  TwistSum negated() const;
  TwistSum concat(const TwistSum& o) const;
  int max() const;
  long long sum() const;
  std::string to_string() const;  // "[1,2,2]"

  friend bool operator==(const TwistSum&, const TwistSum&) = default;
};

// Matrix of binary forms representing sum_j O(b_j) -> sum_i O(c_i).
// Entry (i,j) is zero or has degree c_i - b_j. Indices are 0-based.
template <class K>
class GradedSheafMap {
 public:
  GradedSheafMap(const K& field, TwistSum target, TwistSum source);

  const K& field() const { return field_; }
  const TwistSum& target() const { return target_; }
  const TwistSum& source() const { return source_; }
  std::size_t rows() const { return target_.size(); }
  std::size_t cols() const { return source_.size(); }

  const BinaryForm<K>& entry(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  int entry_degree(std::size_t i, std::size_t j) const { return target_[i] - source_[j]; }
  // Throws PreconditionError if a nonzero form has the wrong degree.
  void set(std::size_t i, std::size_t j, BinaryForm<K> form);
  bool is_zero() const;

  // "map R x C : [c..] <- [b..]" followed by "(i,j) : form" lines (1-based).
  std::string to_string() const;

  friend bool operator==(const GradedSheafMap& a, const GradedSheafMap& b) {
    return a.target_ == b.target_ && a.source_ == b.source_ && a.entries_ == b.entries_;
  }

 private:
  K field_;
  TwistSum target_, source_;
  std::vector<BinaryForm<K>> entries_;
};

template <class K>
GradedSheafMap<K> identity_map(const K& field, const TwistSum& twists);

template <class K>
GradedSheafMap<K> compose(const GradedSheafMap<K>& outer, const GradedSheafMap<K>& inner);

template <class K>
GradedSheafMap<K> dual(const GradedSheafMap<K>& m);

// Rows of a and b stacked; sources must agree.
template <class K>
GradedSheafMap<K> stack_rows(const GradedSheafMap<K>& top, const GradedSheafMap<K>& bottom);

// Columns permuted so that column k of the result is column order[k] of m.
template <class K>
GradedSheafMap<K> permute_columns(const GradedSheafMap<K>& m, const std::vector<std::size_t>& order);

// O(e+1)^e + O(e)^(n-e) -> O(e+2)^(e-1) + O(e)^(n-e).
template <class K>
GradedSheafMap<K> build_beta(const CurveContext& ctx, const K& field);

// O(2) -> O(e+1)^e + O(e)^(n-e), the differential of the parametrization.
template <class K>
GradedSheafMap<K> build_df(const CurveContext& ctx, const K& field);

// O(e+2)^(e-1) + O(e)^(n-e) -> O(de).
template <class K>
GradedSheafMap<K> build_psi(const IdealCombination<K>& f);

template <class K>
GradedSheafMap<K> build_delta(const IdealCombination<K>& f);

// O(e)^(n+1) -> O(de) given by the restricted gradient of the assembled F.
template <class K>
GradedSheafMap<K> gradient_map(const IdealCombination<K>& f);

template <class K>
GradedSheafMap<K> parse_sheaf_map(const K& field, std::string_view text);

template <class K>
std::string sheaf_map_to_json(const GradedSheafMap<K>& m);

template <class K>
GradedSheafMap<K> sheaf_map_from_json(const K& field, std::string_view json);

extern template class GradedSheafMap<RationalField>;
extern template class GradedSheafMap<PrimeField>;

}  // namespace tsplit

#endif
