#include "weylbb/ratfun.hpp"

#include "weylbb/error.hpp"

namespace weylbb {

RatFun RatFun::from_poly(Poly p) {
  Poly one = Poly::constant(p.table(), Rat(1));
  return RatFun(std::move(p), std::move(one));
}

RatFun RatFun::reduced(Poly num, Poly den) {
  if (num.is_zero()) return from_poly(std::move(num));
  Rat c = den.content();
  if (c != 1) {
    Rat inv = Rat(1) / c;
    den = den.mul_scalar(inv);
    num = num.mul_scalar(inv);
  }
  return RatFun(std::move(num), std::move(den));
}

RatFun RatFun::make(const Poly& num, const Poly& den) {
  check_same_table(num.table(), den.table());
  if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  if (num.is_zero()) return zero(num.table());
  Poly g = poly_gcd(num, den);
  if (g.is_constant()) return reduced(num, den);
  return reduced(Poly::exact_div(num, g), Poly::exact_div(den, g));
}

bool RatFun::is_one() const {
  return den_.is_constant() && num_.is_constant() && !num_.is_zero() &&
         num_.constant_value() == den_.constant_value();
}

bool RatFun::is_poly() const { return den_.is_constant() && den_.constant_value() == 1; }

const Poly& RatFun::as_poly() const {
  if (!is_poly()) throw Error("rational function is not polynomial");
  return num_;
}

Rat RatFun::constant_value() const {
  if (!is_constant()) throw Error("rational function is not constant");
  if (num_.is_zero()) return Rat(0);
  return num_.constant_value() / den_.constant_value();
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  check_same_table(a.table(), b.table());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFun::make(a.num_ + b.num_, a.den_);
  Poly g = poly_gcd(a.den_, b.den_);
  if (g.is_constant()) {
    return RatFun::reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  Poly bp = Poly::exact_div(a.den_, g);
  Poly dp = Poly::exact_div(b.den_, g);
  Poly e = a.num_ * dp + b.num_ * bp;
  if (e.is_zero()) return RatFun::zero(a.table());
  Poly h = poly_gcd(e, g);
  if (h.is_constant()) return RatFun::reduced(std::move(e), g * bp * dp);
  return RatFun::reduced(Poly::exact_div(e, h), Poly::exact_div(g, h) * bp * dp);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  check_same_table(a.table(), b.table());
  if (a.is_zero() || b.is_zero()) return RatFun::zero(a.table());
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  Poly g1 = poly_gcd(a.num_, b.den_);
  Poly g2 = poly_gcd(b.num_, a.den_);
  const bool t1 = g1.is_constant(), t2 = g2.is_constant();
  Poly n1 = t1 ? a.num_ : Poly::exact_div(a.num_, g1);
  Poly d2 = t1 ? b.den_ : Poly::exact_div(b.den_, g1);
  Poly n2 = t2 ? b.num_ : Poly::exact_div(b.num_, g2);
  Poly d1 = t2 ? a.den_ : Poly::exact_div(a.den_, g2);
  return RatFun::reduced(n1 * n2, d1 * d2);
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return reduced(den_, num_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero");
  return a * b.inverse();
}

RatFun RatFun::pow(unsigned k) const {
  RatFun r = one(table());
  RatFun base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

RatFun RatFun::derive(std::size_t var) const {
  if (var >= table()->nderiv())
    throw Error("derivation index " + std::to_string(var) + " is not a derivation variable");
  return derive_any(var);
}

RatFun RatFun::derive_any(std::size_t var) const {
  if (var >= table()->arity()) throw Error("variable index out of range");
  if (is_poly()) return from_poly(num_.derive(var));
  // (p/q)' = (p' qh - p w) / (q qh)  with  q = g qh, q' = g w, g = gcd(q, q').
  Poly qd = den_.derive(var);
  Poly g = poly_gcd(den_, qd);
  Poly qh = g.is_constant() ? den_ : Poly::exact_div(den_, g);
  Poly w = g.is_constant() ? qd : Poly::exact_div(qd, g);
  return make(num_.derive(var) * qh - num_ * w, den_ * qh);
}

Rat RatFun::eval(const std::vector<Rat>& point) const {
  Rat d = den_.eval(point);
  if (d == 0) throw ZeroDenominator("evaluation at a pole");
  return num_.eval(point) / d;
}

RatFun RatFun::subst(const VarTableP& target, const std::vector<Poly>& images) const {
  Poly n = num_.subst(target, images);
  Poly d = den_.subst(target, images);
  return make(n, d);
}

}  // namespace weylbb
