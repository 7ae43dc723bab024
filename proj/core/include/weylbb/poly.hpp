#pragma once

#include <utility>
#include <vector>

#include "weylbb/rational.hpp"
#include "weylbb/vartable.hpp"

namespace weylbb {

// Exponent vector; length is fixed by context (table arity for polynomial
// monomials, nderiv for operator monomials).
using Expv = std::vector<unsigned>;

unsigned totdeg(const Expv& a);

// The term order used everywhere: total degree first, ties broken so that the
// variable of smallest index dominates (exponent tuples compared
// lexicographically, larger tuple earlier). It enumerates monomials
// 1, x1, x2, ..., x1^2, x1*x2, x2^2, ... and is a degree-compatible order.
// Returns <0 / 0 / >0 as a comes before / equals / comes after b.
int mono_cmp(const Expv& a, const Expv& b);

struct MonoLess {
  bool operator()(const Expv& a, const Expv& b) const { return mono_cmp(a, b) < 0; }
};

bool expv_divides(const Expv& a, const Expv& b);  // a <= b componentwise
Expv expv_add(const Expv& a, const Expv& b);
Expv expv_sub(const Expv& a, const Expv& b);  // requires expv_divides(b, a)

// Sparse multivariate polynomial with rational coefficients over the full
// variable list (derivation variables and parameters) of a shared VarTable.
// Terms are kept sorted ascending in the term order with no zero coefficients,
// so structural equality is semantic equality.
class Poly {
 public:
  using Term = std::pair<Expv, Rat>;

  static Poly zero(VarTableP tab);
  static Poly constant(VarTableP tab, const Rat& c);
  static Poly variable(VarTableP tab, std::size_t var, unsigned exp = 1);
  static Poly monomial(VarTableP tab, Expv e, const Rat& c);

  const VarTableP& table() const { return tab_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t nterms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Rat& constant_value() const;  // requires is_constant(); zero -> 0
  const Term& leading() const;        // greatest term; throws on zero
  int degree() const;                 // total degree, -1 for the zero poly
  unsigned degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const;
  Rat coeff(const Expv& e) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly mul_term(const Expv& e, const Rat& c) const;
  Poly mul_scalar(const Rat& c) const;
  Poly pow(unsigned k) const;

  // Formal partial derivative with respect to any variable index (parameter
  // indices included; the public rational-function API restricts further).
  Poly derive(std::size_t var) const;

  Rat eval(const std::vector<Rat>& point) const;  // point.size() == arity

  // Ring homomorphism sending variable i to images[i], a polynomial over the
  // target table. images.size() must equal this table's arity.
  Poly subst(const VarTableP& target, const std::vector<Poly>& images) const;

  // Rational content: the positive rational c with this/c integer-coprime,
  // negated when the leading coefficient is negative. Zero for the zero poly.
  Rat content() const;
  Poly primitive() const;

  // Exact division; throws NotDivisible when b does not divide a.
  static Poly exact_div(const Poly& a, const Poly& b);

 private:
  Poly(VarTableP tab, std::vector<Term> terms)
      : tab_(std::move(tab)), terms_(std::move(terms)) {}
  VarTableP tab_;
  std::vector<Term> terms_;
};

// GCD in Q[x_1..x_N]; result is canonical: zero, or integer-primitive with
// positive leading coefficient (so gcd of nonzero constants is 1).
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace weylbb
