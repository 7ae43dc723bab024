#pragma once

#include "weylbb/order.hpp"

namespace weylbb {

// Marked prebasis attached to an order ideal: one generator per border
// monomial b_j,
//   g_j = D^(b_j) - sum_i c[j][i] * t_i,
// with t_i running over the order ideal in its enumeration. In the
// commutative ring every c[j][i] must be free of the ring variables.
// `verified` starts false and is set only by the full basis checks.
struct BorderPrebasis {
  OrderIdeal oi;
  RingKind ring;
  std::vector<Expv> border;                 // = oi.border(), fixed enumeration
  std::vector<std::vector<RatFun>> coeffs;  // coeffs[j][i], shape |border| x |oi|
  bool verified = false;

  static BorderPrebasis from_coeffs(OrderIdeal oi, RingKind ring,
                                    std::vector<std::vector<RatFun>> coeffs);
  // Build from generator operators (grouped form); markers are matched to the
  // border automatically and must cover it exactly once with coefficient 1.
  static BorderPrebasis from_ops(OrderIdeal oi, RingKind ring, const std::vector<WeylOp>& ops);

  std::size_t nelems() const { return border.size(); }
  WeylOp element(std::size_t j) const;  // g_j
  const VarTableP& table() const { return oi.table(); }
};

// Result of border division: f = sum_j quotients[j] * g_j + sum_i remainder[i] * t_i.
struct DivisionResult {
  std::vector<WeylOp> quotients;  // one per border element
  std::vector<RatFun> remainder;  // coordinates over the order ideal
};

// Border division of a (grouped) ring element by a prebasis. Deterministic:
// the reduced term is the term-order-largest among the highest-degree terms
// of maximal index, and the border factorization picks the smallest border
// position. Iteration count is capped (override: WEYLBB_DIVISION_CAP).
DivisionResult border_divide(const WeylOp& f, const BorderPrebasis& G);
// Commutative convenience: f as a polynomial in the ring variables over the
// parameter field.
DivisionResult border_divide(const RatFun& f, const BorderPrebasis& G);

// Remainder as a ring element  sum_i remainder[i] * t_i.
WeylOp remainder_op(const std::vector<RatFun>& remainder, const OrderIdeal& oi);

// Remainder of border division against a verified border basis (unique there);
// throws PrebasisNotVerified when the basis checks have not been run.
std::vector<RatFun> normal_form(const WeylOp& f, const BorderPrebasis& B);

}  // namespace weylbb
