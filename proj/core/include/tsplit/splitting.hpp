#ifndef TSPLIT_SPLITTING_HPP
#define TSPLIT_SPLITTING_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace tsplit {

// Sorted multiset {a_1 <= ... <= a_r} standing for O(a_1) + ... + O(a_r).
class SplittingType {
 public:
  SplittingType() = default;
  explicit SplittingType(std::vector<int> parts);
  SplittingType(std::initializer_list<int> parts) : SplittingType(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int rank() const { return static_cast<int>(parts_.size()); }
  long long degree() const;
  int min() const;
  int max() const;
  int count(int twist) const;

  // "O(-5) + O(2)", "O(4) + O(5)^4 + O(6)"; the empty type prints as "0".
  std::string to_string() const;
  // "[-5,2]"
  std::string to_json() const;
  // Accepts either the JSON array form or the text form ("O" alone means O(0)).
  static SplittingType parse(std::string_view text);

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
  friend auto operator<=>(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<int> parts_;
};

long long floor_div(long long a, long long b);

SplittingType balanced_of(int rank, long long degree);
bool is_balanced(const SplittingType& s);
bool is_perfectly_balanced(const SplittingType& s);
mpq_class slope(const SplittingType& s);

// Dominance of ascending partial sums; false (with reason) on rank/degree mismatch.
bool specializes_to(const SplittingType& general, const SplittingType& special, std::string* reason = nullptr);

SplittingType glue_bound(const SplittingType& a, const SplittingType& b);

int interpolation_count(const SplittingType& s);
long long expected_max(int d, int e, int n);

struct Prediction {
  enum class Verdict { ExactSplitting, Balanced, NotBalanced, Unknown };

  Verdict verdict = Verdict::Unknown;
  std::optional<SplittingType> splitting;
  std::string provenance;

  // Balancedness implied by the prediction, if any.
  std::optional<bool> balanced() const;
  std::string verdict_name() const;
  std::string to_string() const;
};

// Catalog of the closed-form results; never extrapolates beyond the stated cases.
Prediction predicted_splitting(int d, int e, int n);

}  // namespace tsplit

#endif
