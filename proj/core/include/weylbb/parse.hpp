#pragma once

#include <string>

#include "weylbb/weyl.hpp"

namespace weylbb {

// Expression grammar over a variable table:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('+'|'-') factor | power
//   power  := atom ('^' INT)*
//   atom   := INT | IDENT | '(' expr ')'
// INT is a nonnegative integer literal; rationals arise from '/'. IDENT is a
// variable, parameter, or derivation token. '*' multiplies in the operator
// ring (normally ordering as needed); '/' requires a nonzero derivation-free
// divisor. Errors carry 1-based source positions, offset by (line0, col0).
WeylOp parse_expr(const std::string& src, const VarTableP& tab, int line0 = 1, int col0 = 1);

// Parse an expression that must be derivation-free, as a field element.
RatFun parse_scalar(const std::string& src, const VarTableP& tab, int line0 = 1, int col0 = 1);

// Canonical printers; parse_expr(print(v)) == v. Terms are emitted in
// descending term order.
std::string print_rat(const Rat& q);
std::string print_poly(const Poly& p);
std::string print_ratfun(const RatFun& f);
std::string print_op(const WeylOp& w);                       // derivation-token form
std::string print_comm(const WeylOp& w);                     // grouped commutative element
std::string print_opmono(const Expv& e, const VarTableP& t); // e.g. "d1^2*d2", "1"

}  // namespace weylbb
