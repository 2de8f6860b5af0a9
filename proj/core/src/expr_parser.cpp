#include "tsplit/expr_parser.hpp"

#include <cctype>
#include <string>

#include "tsplit/errors.hpp"

namespace tsplit::detail {
namespace {

constexpr int kMaxExponent = 100000;

void add_into(RawPoly& acc, const std::vector<int>& mono, const mpq_class& c) {
  auto [it, inserted] = acc.try_emplace(mono, c);
  if (!inserted) it->second += c;
  if (sgn(it->second) == 0) acc.erase(it);
}

RawPoly multiply(const RawPoly& a, const RawPoly& b) {
  RawPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<int> m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      add_into(out, m, ca * cb);
    }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, int num_vars, const VariableResolver& resolve)
      : text_(text), num_vars_(num_vars), resolve_(resolve) {}

  RawPoly run() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    RawPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RawPoly constant(const mpq_class& c) const {
    RawPoly p;
    if (sgn(c) != 0) p.emplace(std::vector<int>(num_vars_, 0), c);
    return p;
  }

  RawPoly expr() {
    RawPoly acc = term();
    for (;;) {
      if (accept('+')) {
        for (const auto& [m, c] : term()) add_into(acc, m, c);
      } else if (accept('-')) {
        for (const auto& [m, c] : term()) add_into(acc, m, -c);
      } else {
        return acc;
      }
    }
  }

  RawPoly term() {
    RawPoly acc = unary();
    while (accept('*')) acc = multiply(acc, unary());
    return acc;
  }

  RawPoly unary() {
    if (accept('-')) {
      RawPoly p = unary();
      for (auto& [m, c] : p) c = -c;
      return p;
    }
    if (accept('+')) return unary();
    return power();
  }

  RawPoly power() {
    RawPoly base = atom();
    if (!accept('^')) return base;
    skip_ws();
    int k = static_cast<int>(integer_literal().get_si());
    if (k < 0 || k > kMaxExponent) fail("exponent out of range");
    RawPoly out = constant(1);
    for (int i = 0; i < k; ++i) out = multiply(out, base);
    return out;
  }

  mpz_class integer_literal() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  RawPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RawPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(integer_literal());
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        mpz_class den = integer_literal();
        if (den == 0) fail("zero denominator");
        value /= mpq_class(den);
      }
      return constant(value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      int idx = resolve_(name);
      if (idx < 0 || idx >= num_vars_) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      std::vector<int> m(num_vars_, 0);
      m[idx] = 1;
      RawPoly p;
      p.emplace(std::move(m), mpq_class(1));
      return p;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int num_vars_;
  const VariableResolver& resolve_;
};

}  // namespace

RawPoly parse_expression(std::string_view text, int num_vars, const VariableResolver& resolve) {
  return Parser(text, num_vars, resolve).run();
}

}  // namespace tsplit::detail
