#pragma once

#include "weylbb/poly.hpp"

namespace weylbb {

// Element of the coefficient field C(x_1..x_n; params), kept canonical:
// gcd(num, den) = 1, den integer-primitive with positive leading coefficient
// (so den == 1 exactly when the value is polynomial), zero == 0/1.
// Structural equality is field equality.
class RatFun {
 public:
  static RatFun zero(VarTableP tab) { return from_poly(Poly::zero(std::move(tab))); }
  static RatFun one(VarTableP tab) { return constant(std::move(tab), Rat(1)); }
  static RatFun constant(VarTableP tab, const Rat& c) {
    return from_poly(Poly::constant(std::move(tab), c));
  }
  static RatFun variable(VarTableP tab, std::size_t var, unsigned exp = 1) {
    return from_poly(Poly::variable(std::move(tab), var, exp));
  }
  static RatFun from_poly(Poly p);
  static RatFun make(const Poly& num, const Poly& den);  // throws ZeroDenominator

  const VarTableP& table() const { return num_.table(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_poly() const;
  const Poly& as_poly() const;  // requires is_poly()
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const;  // requires is_constant()
  bool depends_on(std::size_t var) const {
    return num_.depends_on(var) || den_.depends_on(var);
  }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);  // throws DivisionByZero
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun inverse() const;  // throws DivisionByZero
  RatFun pow(unsigned k) const;
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  // Derivation d/dx_var; var must name a derivation variable.
  RatFun derive(std::size_t var) const;
  // Formal derivative admitting parameter indices as well (used by machinery
  // that differentiates with respect to a deformation parameter).
  RatFun derive_any(std::size_t var) const;

  Rat eval(const std::vector<Rat>& point) const;  // throws ZeroDenominator on poles
  RatFun subst(const VarTableP& target, const std::vector<Poly>& images) const;

 private:
  RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
  // Content-normalize a fraction already known to be in lowest terms.
  static RatFun reduced(Poly num, Poly den);
  Poly num_;
  Poly den_;
};

}  // namespace weylbb
