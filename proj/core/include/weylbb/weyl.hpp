#pragma once

#include "weylbb/ratfun.hpp"

namespace weylbb {

// Which ring the element lives in. Commutative: polynomials in the marked
// variables with coefficients free of them (multiplication is convolution).
// Weyl: the marked variables are the derivations d1..dn acting on rational
// function coefficients; products are normally ordered via the Leibniz rule.
enum class RingKind { Commutative, Weyl };

// Normally ordered ring element: a finite sum  sum_a  c_a(x; params) * D^a
// with the monomial part D^a kept to the right of its coefficient. The key is
// the exponent vector of length nderiv; terms are sorted ascending in the
// term order with nonzero coefficients, so structural equality is equality.
class WeylOp {
 public:
  using Term = std::pair<Expv, RatFun>;

  static WeylOp zero(VarTableP tab);
  static WeylOp from_coeff(RatFun c);
  static WeylOp dmono(VarTableP tab, Expv e, RatFun c);
  static WeylOp dmono(VarTableP tab, Expv e);
  static WeylOp dvar(VarTableP tab, std::size_t i);  // the derivation d_{i}

  const VarTableP& table() const { return tab_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t nterms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  RatFun coeff(const Expv& e) const;
  std::vector<Expv> support() const;
  int degree() const;  // max total degree of the monomial part; -1 for zero

  WeylOp operator-() const;
  friend WeylOp operator+(const WeylOp& a, const WeylOp& b);
  friend WeylOp operator-(const WeylOp& a, const WeylOp& b);
  WeylOp& operator+=(const WeylOp& o) { return *this = *this + o; }
  WeylOp& operator-=(const WeylOp& o) { return *this = *this - o; }
  WeylOp scale(const RatFun& c) const;
  friend bool operator==(const WeylOp& a, const WeylOp& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const WeylOp& a, const WeylOp& b) { return !(a == b); }

  // Coefficients free of every derivation variable (required of commutative
  // ring elements, where the keys are the ring variables themselves).
  bool coeffs_const() const;

  static WeylOp mul(const WeylOp& a, const WeylOp& b, RingKind ring);
  static WeylOp commutator(const WeylOp& a, const WeylOp& b, RingKind ring);
  WeylOp pow(unsigned k, RingKind ring) const;

  // Action on a rational function:  sum_a c_a * (d^a f).  Weyl ring only.
  RatFun apply(const RatFun& f) const;

  // Grouped view of a derivation-free value as an element of the commutative
  // ring: monomials in the derivation variables become the keys, coefficients
  // keep only parameters. The denominator must be free of derivation
  // variables. Inverse: ungroup().
  static WeylOp group_comm(const RatFun& f);
  RatFun ungroup() const;

 private:
  WeylOp(VarTableP tab, std::vector<Term> terms)
      : tab_(std::move(tab)), terms_(std::move(terms)) {}
  VarTableP tab_;
  std::vector<Term> terms_;
};

// All sub-multi-indices g <= a, ascending by total degree (then term order).
std::vector<Expv> submultiindices(const Expv& a);

Rat binom_expv(const Expv& a, const Expv& g);  // product of binomials a_i choose g_i

}  // namespace weylbb
