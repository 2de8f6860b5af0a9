#include "tsplit/splitting.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>

#include "json.hpp"
#include "tsplit/errors.hpp"

namespace tsplit {

SplittingType::SplittingType(std::vector<int> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end());
}

long long SplittingType::degree() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int SplittingType::min() const {
  if (parts_.empty()) throw PreconditionError("empty splitting type has no minimum");
  return parts_.front();
}

int SplittingType::max() const {
  if (parts_.empty()) throw PreconditionError("empty splitting type has no maximum");
  return parts_.back();
}

int SplittingType::count(int twist) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), twist));
}

std::string SplittingType::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!out.empty()) out += " + ";
    out += "O(" + std::to_string(parts_[i]) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string SplittingType::to_json() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

SplittingType SplittingType::parse(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty splitting type");
  if (s[first] == '[') {
    try {
      auto j = nlohmann::json::parse(s);
      if (!j.is_array()) throw ParseError("splitting type JSON must be an array");
      std::vector<int> parts;
      for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("splitting type entries must be integers: " + s);
        parts.push_back(v.get<int>());
      }
      return SplittingType(std::move(parts));
    } catch (const nlohmann::json::exception& err) {
      throw ParseError("bad splitting type '" + s + "': " + err.what());
    }
  }
  std::string compact;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact == "0") return SplittingType();
  static const std::regex term(R"(O(?:\((-?\d+)\))?(?:\^(\d+))?)");
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    std::size_t plus = compact.find('+', pos);
    std::string piece = compact.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    std::smatch m;
    if (!std::regex_match(piece, m, term)) throw ParseError("bad splitting term '" + piece + "' in '" + s + "'");
    int twist = m[1].matched ? std::stoi(m[1].str()) : 0;
    int mult = m[2].matched ? std::stoi(m[2].str()) : 1;
    if (mult < 1) throw ParseError("multiplicity must be positive in '" + s + "'");
    parts.insert(parts.end(), mult, twist);
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return SplittingType(std::move(parts));
}

long long floor_div(long long a, long long b) {
  if (b == 0) throw PreconditionError("division by zero");
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

SplittingType balanced_of(int rank, long long degree) {
  if (rank < 1) throw PreconditionError("balanced splitting needs rank >= 1");
  long long q = floor_div(degree, rank);
  long long rem = degree - q * rank;
  std::vector<int> parts(rank - rem, static_cast<int>(q));
  parts.insert(parts.end(), rem, static_cast<int>(q + 1));
  return SplittingType(std::move(parts));
}

bool is_balanced(const SplittingType& s) {
  return s.rank() == 0 || s.max() - s.min() <= 1;
}

bool is_perfectly_balanced(const SplittingType& s) {
  return s.rank() == 0 || s.max() == s.min();
}

mpq_class slope(const SplittingType& s) {
  if (s.rank() == 0) throw PreconditionError("slope of the empty splitting type");
  mpq_class q(static_cast<long>(s.degree()), static_cast<long>(s.rank()));
  q.canonicalize();
  return q;
}

bool specializes_to(const SplittingType& general, const SplittingType& special, std::string* reason) {
  if (general.rank() != special.rank()) {
    if (reason) *reason = "ranks differ";
    return false;
  }
  if (general.degree() != special.degree()) {
    if (reason) *reason = "degrees differ";
    return false;
  }
  long long a = 0, b = 0;
  for (int k = 0; k < general.rank(); ++k) {
    a += general.parts()[k];
    b += special.parts()[k];
    if (a < b) {
      if (reason) *reason = "partial sum " + std::to_string(k + 1) + " is smaller";
      return false;
    }
  }
  if (reason) reason->clear();
  return true;
}

SplittingType glue_bound(const SplittingType& a, const SplittingType& b) {
  if (a.rank() != b.rank())
    throw PreconditionError("glue needs equal ranks, got " + std::to_string(a.rank()) + " and " +
                            std::to_string(b.rank()));
  std::vector<int> parts(a.rank());
  for (int i = 0; i < a.rank(); ++i) parts[i] = a.parts()[i] + b.parts()[i];
  return SplittingType(std::move(parts));
}

int interpolation_count(const SplittingType& s) {
  return s.min() + 1;
}

long long expected_max(int d, int e, int n) {
  if (n < 2) throw PreconditionError("expected_max needs n >= 2");
  return floor_div(static_cast<long long>(e) * (n + 1 - d), n - 1) + 1;
}

std::optional<bool> Prediction::balanced() const {
  switch (verdict) {
    case Verdict::ExactSplitting: return is_balanced(*splitting);
    case Verdict::Balanced: return true;
    case Verdict::NotBalanced: return false;
    case Verdict::Unknown: break;
  }
  return std::nullopt;
}

std::string Prediction::verdict_name() const {
  switch (verdict) {
    case Verdict::ExactSplitting: return "ExactSplitting";
    case Verdict::Balanced: return "Balanced";
    case Verdict::NotBalanced: return "NotBalanced";
    case Verdict::Unknown: break;
  }
  return "Unknown";
}

std::string Prediction::to_string() const {
  std::string out = verdict_name();
  if (splitting) out += " " + splitting->to_string();
  return out + " [" + provenance + "]";
}

namespace {

std::vector<int> block(int twist, int count) {
  return std::vector<int>(std::max(count, 0), twist);
}

std::vector<int> join(std::initializer_list<std::vector<int>> blocks) {
  std::vector<int> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

Prediction exact(std::vector<int> parts, std::string tag) {
  return {Prediction::Verdict::ExactSplitting, SplittingType(std::move(parts)), std::move(tag)};
}

Prediction quadrics(int e, int n) {
  if (e % 2 == 0) return exact(block(e, n - 1), "thm:quadrics:even");
  return exact(join({{e - 1}, block(e, n - 3), {e + 1}}), "thm:quadrics:odd");
}

Prediction cubics(int e, int n) {
  if (e == 1) {
    if (n == 3) return exact({-1, 2}, "thm:cubics:e1-n3");
    return exact(join({block(0, 2), block(1, n - 4), {2}}), "thm:cubics:e1-n-ge-4");
  }
  if (e == 2) {
    if (n == 3) return exact({0, 2}, "thm:cubics:e2-n3");
    return exact(join({block(1, 2), block(2, n - 3)}), "thm:cubics:e2-n-ge-4");
  }
  if (n == e) return exact(join({{e - 2}, block(e - 1, e - 2)}), "thm:cubics:case-n-eq-e");
  return exact(join({block(e - 1, e), block(e, n - e - 1)}), "thm:cubics:case-n-gt-e");
}

Prediction quartics(int e, int n) {
  if (e == 1) {
    if (n == 3) return exact({-2, 2}, "thm:quartics:e1-n3");
    if (n == 4) return exact({-1, 0, 2}, "thm:quartics:e1-n4");
    return exact(join({block(0, 3), block(1, n - 5), {2}}), "thm:quartics:e1-n-ge-5");
  }
  if (e == 2) {
    if (n == 3) return exact({-2, 2}, "thm:quartics:e2-n3");
    if (n == 4) return exact({0, 0, 2}, "thm:quartics:e2-n4");
    if (n == 5) return exact({0, 1, 1, 2}, "thm:quartics:e2-n5");
    return exact(join({block(1, 4), block(2, n - 5)}), "thm:quartics:e2-n-ge-6");
  }
  if (e == 3) {
    if (n == 3) return exact({-2, 2}, "thm:quartics:e3-n3");
    if (n == 4) return exact({0, 1, 2}, "thm:quartics:e3-n4");
    if (n == 5) return exact({1, 1, 2, 2}, "thm:quartics:e3-n5");
    if (n == 6) return exact({1, 2, 2, 2, 2}, "thm:quartics:e3-n6");
    return exact(join({block(2, 6), block(3, n - 7)}), "thm:quartics:e3-n-ge-7");
  }
  if (n == e) return exact(join({block(e - 3, 2), block(e - 2, e - 3)}), "thm:quartics:case-n-eq-e");
  if (n <= 2 * e + 1)
    return exact(join({block(e - 2, 2 * e - n + 1), block(e - 1, 2 * (n - e - 1))}), "thm:quartics:case-mid");
  return exact(join({block(e - 1, 2 * e), block(e, n - 2 * e - 1)}), "thm:quartics:case-n-gt-2e+1");
}

Prediction higher(int d, int e, int n) {
  long long tangent_degree = static_cast<long long>(e) * (n + 1 - d);
  if (e == n && e >= 2 * d - 2)
    return exact(join({block(n + 2 - d, n - d + 1), block(n + 1 - d, d - 2)}), "thm:general:case-n-eq-e");
  // Normal bundle slope at most 3: the tangent sequence splits off O(2).
  if (tangent_degree - 2 <= 3LL * (n - 2)) {
    auto normal = balanced_of(n - 2, tangent_degree - 2);
    auto parts = normal.parts();
    parts.push_back(2);
    return exact(std::move(parts), "cor:slope-split");
  }
  if (e >= 3 && e <= d + 1 && n >= d && tangent_degree > n - 1)
    return {Prediction::Verdict::Balanced, std::nullopt, "thm:balanced:e-le-d+1"};
  if (e >= 2 * d - 2) return {Prediction::Verdict::Balanced, std::nullopt, "thm:general:balanced"};
  if (tangent_degree <= n - 1) return {Prediction::Verdict::NotBalanced, std::nullopt, "prop:slope-unbalanced"};
  return {Prediction::Verdict::Unknown, std::nullopt, "none"};
}

}  // namespace

Prediction predicted_splitting(int d, int e, int n) {
  if (d < 2 || n < 3 || e < 1 || e > n)
    throw PreconditionError("prediction needs d >= 2, n >= 3, 1 <= e <= n; got d=" + std::to_string(d) +
                            " e=" + std::to_string(e) + " n=" + std::to_string(n));
  switch (d) {
    case 2: return quadrics(e, n);
    case 3: return cubics(e, n);
    case 4: return quartics(e, n);
    default: return higher(d, e, n);
  }
}

}  // namespace tsplit
