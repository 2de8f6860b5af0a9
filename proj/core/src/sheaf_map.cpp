#include "tsplit/sheaf_map.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "tsplit/errors.hpp"

namespace tsplit {

TwistSum TwistSum::repeated(int twist, int count) { return TwistSum(std::vector<int>(std::max(count, 0), twist)); }

TwistSum TwistSum::negated() const {
  TwistSum r = *this;
  for (int& t : r.twists) t = -t;
  return r;
}

TwistSum TwistSum::concat(const TwistSum& o) const {
  TwistSum r = *this;
  r.twists.insert(r.twists.end(), o.twists.begin(), o.twists.end());
  return r;
}

int TwistSum::max() const {
  if (twists.empty()) throw PreconditionError("max of an empty twist sum");
  return *std::max_element(twists.begin(), twists.end());
}

long long TwistSum::sum() const { return std::accumulate(twists.begin(), twists.end(), 0LL); }

std::string TwistSum::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < twists.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(twists[i]);
  }
  return out + "]";
}

template <class K>
GradedSheafMap<K>::GradedSheafMap(const K& field, TwistSum target, TwistSum source)
    : field_(field),
      target_(std::move(target)),
      source_(std::move(source)),
      entries_(target_.size() * source_.size(), BinaryForm<K>(field)) {}

template <class K>
void GradedSheafMap<K>::set(std::size_t i, std::size_t j, BinaryForm<K> form) {
  if (i >= rows() || j >= cols()) throw PreconditionError("matrix index out of range");
  if (form.is_zero()) {
    entries_[i * cols() + j] = BinaryForm<K>(field_);
    return;
  }
  if (form.degree() != entry_degree(i, j))
    throw PreconditionError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") has degree " +
                            std::to_string(form.degree()) + ", expected " + std::to_string(entry_degree(i, j)));
  entries_[i * cols() + j] = std::move(form);
}

template <class K>
bool GradedSheafMap<K>::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& f) { return f.is_zero(); });
}

template <class K>
std::string GradedSheafMap<K>::to_string() const {
  std::string out = "map " + std::to_string(rows()) + " x " + std::to_string(cols()) + " : " + target_.to_string() +
                    " <- " + source_.to_string() + "\n";
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (!entry(i, j).is_zero())
        out += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") : " + entry(i, j).to_string() + "\n";
  return out;
}

template <class K>
GradedSheafMap<K> identity_map(const K& field, const TwistSum& twists) {
  GradedSheafMap<K> m(field, twists, twists);
  for (std::size_t i = 0; i < twists.size(); ++i) m.set(i, i, BinaryForm<K>::monomial(field, 0, 0));
  return m;
}

template <class K>
GradedSheafMap<K> compose(const GradedSheafMap<K>& outer, const GradedSheafMap<K>& inner) {
  if (!(inner.target() == outer.source()))
    throw PreconditionError("cannot compose: inner target " + inner.target().to_string() +
                            " differs from outer source " + outer.source().to_string());
  const K& f = outer.field();
  GradedSheafMap<K> r(f, outer.target(), inner.source());
  for (std::size_t i = 0; i < outer.rows(); ++i)
    for (std::size_t j = 0; j < inner.cols(); ++j) {
      BinaryForm<K> acc(f);
      for (std::size_t k = 0; k < outer.cols(); ++k) {
        const auto& a = outer.entry(i, k);
        const auto& b = inner.entry(k, j);
        if (a.is_zero() || b.is_zero()) continue;
        acc += a * b;
      }
      r.set(i, j, std::move(acc));
    }
  return r;
}

template <class K>
GradedSheafMap<K> dual(const GradedSheafMap<K>& m) {
  GradedSheafMap<K> r(m.field(), m.source().negated(), m.target().negated());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.set(j, i, m.entry(i, j));
  return r;
}

template <class K>
GradedSheafMap<K> stack_rows(const GradedSheafMap<K>& top, const GradedSheafMap<K>& bottom) {
  if (!(top.source() == bottom.source())) throw PreconditionError("stacked maps must share their source");
  GradedSheafMap<K> r(top.field(), top.target().concat(bottom.target()), top.source());
  for (std::size_t j = 0; j < top.cols(); ++j) {
    for (std::size_t i = 0; i < top.rows(); ++i) r.set(i, j, top.entry(i, j));
    for (std::size_t i = 0; i < bottom.rows(); ++i) r.set(top.rows() + i, j, bottom.entry(i, j));
  }
  return r;
}

template <class K>
GradedSheafMap<K> permute_columns(const GradedSheafMap<K>& m, const std::vector<std::size_t>& order) {
  if (order.size() != m.cols()) throw PreconditionError("column permutation has the wrong length");
  std::vector<int> src;
  for (auto j : order) src.push_back(m.source()[j]);
  GradedSheafMap<K> r(m.field(), m.target(), TwistSum(src));
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) r.set(i, k, m.entry(i, order[k]));
  return r;
}

template <class K>
GradedSheafMap<K> build_beta(const CurveContext& ctx, const K& field) {
  const int e = ctx.e, n = ctx.n;
  TwistSum source = TwistSum::repeated(e + 1, e).concat(TwistSum::repeated(e, n - e));
  TwistSum target = TwistSum::repeated(e + 2, e - 1).concat(TwistSum::repeated(e, n - e));
  GradedSheafMap<K> beta(field, target, source);
  auto minus_one = field.neg(field.one());
  for (int i = 0; i + 1 < e; ++i) {
    beta.set(i, i, BinaryForm<K>::monomial(field, 0, 1));
    beta.set(i, i + 1, BinaryForm<K>::monomial(field, 1, 0, minus_one));
  }
  for (int k = 0; k < n - e; ++k) beta.set(e - 1 + k, e + k, BinaryForm<K>::monomial(field, 0, 0));
  return beta;
}

template <class K>
GradedSheafMap<K> build_df(const CurveContext& ctx, const K& field) {
  const int e = ctx.e, n = ctx.n;
  TwistSum target = TwistSum::repeated(e + 1, e).concat(TwistSum::repeated(e, n - e));
  GradedSheafMap<K> df(field, target, TwistSum{2});
  for (int l = 0; l < e; ++l) df.set(l, 0, BinaryForm<K>::monomial(field, e - 1 - l, l));
  return df;
}

template <class K>
GradedSheafMap<K> build_psi(const IdealCombination<K>& f) {
  f.validate();
  const auto& ctx = f.context;
  const int d = ctx.d, e = ctx.e, n = ctx.n;
  TwistSum source = TwistSum::repeated(e + 2, e - 1).concat(TwistSum::repeated(e, n - e));
  GradedSheafMap<K> psi(f.field, TwistSum{d * e}, source);

  std::vector<std::pair<std::pair<int, int>, BinaryForm<K>>> restricted;
  for (const auto& [ij, c] : f.quadric_coeffs) restricted.emplace_back(ij, restrict_to_curve(c));

  for (int l = 1; l <= e - 1; ++l) {
    BinaryForm<K> col(f.field);
    for (const auto& [ij, r] : restricted) {
      auto [i, j] = ij;
      if (!(i <= l && l < j)) continue;
      col += r.times_monomial(e - j - i + l, j + i - l - 2);
    }
    psi.set(0, l - 1, std::move(col));
  }
  for (const auto& [k, g] : f.linear_coeffs) psi.set(0, e - 1 + (k - e - 1), restrict_to_curve(g));
  return psi;
}

template <class K>
GradedSheafMap<K> build_delta(const IdealCombination<K>& f) {
  return compose(build_psi(f), build_beta(f.context, f.field));
}

template <class K>
GradedSheafMap<K> gradient_map(const IdealCombination<K>& f) {
  const auto& ctx = f.context;
  auto grad = gradient_on_curve(f.assemble());
  GradedSheafMap<K> g(f.field, TwistSum{ctx.d * ctx.e}, TwistSum::repeated(ctx.e, ctx.n + 1));
  for (int m = 0; m <= ctx.n; ++m) g.set(0, m, grad[m]);
  return g;
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::string body = s;
  auto a = body.find('['), b = body.rfind(']');
  if (a == std::string::npos || b == std::string::npos || b < a) throw ParseError("expected a bracketed list: " + s);
  body = body.substr(a + 1, b - a - 1);
  std::vector<int> out;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw ParseError("bad integer '" + item + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + item + "' in list " + s);
    }
  }
  return out;
}

}  // namespace

template <class K>
GradedSheafMap<K> parse_sheaf_map(const K& field, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
  }
  std::size_t rows = 0, cols = 0;
  {
    std::istringstream head(line);
    std::string word, x, colon;
    if (!(head >> word >> rows >> x >> cols >> colon) || word != "map" || x != "x" || colon != ":")
      throw ParseError("bad map header '" + line + "'");
  }
  auto arrow = line.find("<-");
  auto colon = line.find(':');
  if (arrow == std::string::npos) throw ParseError("map header lacks '<-'");
  TwistSum target(parse_int_list(line.substr(colon + 1, arrow - colon - 1)));
  TwistSum source(parse_int_list(line.substr(arrow + 2)));
  if (target.size() != rows || source.size() != cols) throw ParseError("map header sizes disagree with twist lists");
  GradedSheafMap<K> m(field, target, source);
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::size_t i = 0, j = 0;
    char lp = 0, comma = 0, rp = 0, c = 0;
    std::istringstream entry(line);
    if (!(entry >> lp >> i >> comma >> j >> rp >> c) || lp != '(' || comma != ',' || rp != ')' || c != ':')
      throw ParseError("bad map entry '" + line + "'");
    std::string form;
    std::getline(entry, form);
    if (i < 1 || i > rows || j < 1 || j > cols) throw ParseError("map entry index out of range: '" + line + "'");
    m.set(i - 1, j - 1, parse_binary_form(field, form));
  }
  return m;
}

template <class K>
std::string sheaf_map_to_json(const GradedSheafMap<K>& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["target"] = m.target().twists;
  j["source"] = m.source().twists;
  j["entries"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.entry(r, c).is_zero())
        j["entries"].push_back({{"row", r + 1}, {"col", c + 1}, {"form", m.entry(r, c).to_string()}});
  return j.dump();
}

template <class K>
GradedSheafMap<K> sheaf_map_from_json(const K& field, std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    GradedSheafMap<K> m(field, TwistSum(j.at("target").get<std::vector<int>>()),
                        TwistSum(j.at("source").get<std::vector<int>>()));
    if (j.at("rows").get<std::size_t>() != m.rows() || j.at("cols").get<std::size_t>() != m.cols())
      throw ParseError("map JSON sizes disagree with twist lists");
    for (const auto& e : j.at("entries")) {
      auto r = e.at("row").get<std::size_t>(), c = e.at("col").get<std::size_t>();
      if (r < 1 || r > m.rows() || c < 1 || c > m.cols()) throw ParseError("map JSON entry index out of range");
      m.set(r - 1, c - 1, parse_binary_form(field, e.at("form").get<std::string>()));
    }
    return m;
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("bad map JSON: ") + err.what());
  }
}

template class GradedSheafMap<RationalField>;
template class GradedSheafMap<PrimeField>;

#define TSPLIT_INSTANTIATE(K)                                                                              \
  template GradedSheafMap<K> identity_map(const K&, const TwistSum&);                                      \
  template GradedSheafMap<K> compose(const GradedSheafMap<K>&, const GradedSheafMap<K>&);                  \
  template GradedSheafMap<K> dual(const GradedSheafMap<K>&);                                               \
  template GradedSheafMap<K> stack_rows(const GradedSheafMap<K>&, const GradedSheafMap<K>&);               \
  template GradedSheafMap<K> permute_columns(const GradedSheafMap<K>&, const std::vector<std::size_t>&);   \
  template GradedSheafMap<K> build_beta(const CurveContext&, const K&);                                    \
  template GradedSheafMap<K> build_df(const CurveContext&, const K&);                                      \
  template GradedSheafMap<K> build_psi(const IdealCombination<K>&);                                        \
  template GradedSheafMap<K> build_delta(const IdealCombination<K>&);                                      \
  template GradedSheafMap<K> gradient_map(const IdealCombination<K>&);                                     \
  template GradedSheafMap<K> parse_sheaf_map(const K&, std::string_view);                                  \
  template std::string sheaf_map_to_json(const GradedSheafMap<K>&);                                        \
  template GradedSheafMap<K> sheaf_map_from_json(const K&, std::string_view);
TSPLIT_INSTANTIATE(RationalField)
TSPLIT_INSTANTIATE(PrimeField)
#undef TSPLIT_INSTANTIATE

}  // namespace tsplit
