#ifndef TSPLIT_EXPR_PARSER_HPP
#define TSPLIT_EXPR_PARSER_HPP

#include <functional>
#include <map>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace tsplit::detail {

// Exponent vector -> rational coefficient; no homogeneity assumed.
using RawPoly = std::map<std::vector<int>, mpq_class>;

// Maps an identifier to a variable index, or -1 if unknown.
using VariableResolver = std::function<int(std::string_view)>;

// Grammar: sums of signed products of integer (or a/b) coefficients, variables,
// powers var^k or (expr)^k, and parenthesized subexpressions.
RawPoly parse_expression(std::string_view text, int num_vars, const VariableResolver& resolve);

}  // namespace tsplit::detail

#endif
