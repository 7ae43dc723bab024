#include "weylbb/poly.hpp"

#include <algorithm>
#include <map>

#include "weylbb/error.hpp"

namespace weylbb {

unsigned totdeg(const Expv& a) {
  unsigned d = 0;
  for (unsigned e : a) d += e;
  return d;
}

int mono_cmp(const Expv& a, const Expv& b) {
  unsigned da = totdeg(a), db = totdeg(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

bool expv_divides(const Expv& a, const Expv& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expv expv_add(const Expv& a, const Expv& b) {
  Expv r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Expv expv_sub(const Expv& a, const Expv& b) {
  Expv r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) throw Error("exponent vector subtraction underflow");
    r[i] = a[i] - b[i];
  }
  return r;
}

Poly Poly::zero(VarTableP tab) { return Poly(std::move(tab), {}); }

Poly Poly::constant(VarTableP tab, const Rat& c) {
  if (c == 0) return zero(std::move(tab));
  Expv e(tab->arity(), 0);
  return Poly(std::move(tab), {{std::move(e), c}});
}

Poly Poly::variable(VarTableP tab, std::size_t var, unsigned exp) {
  if (var >= tab->arity()) throw Error("variable index out of range");
  Expv e(tab->arity(), 0);
  e[var] = exp;
  return Poly(std::move(tab), {{std::move(e), Rat(1)}});
}

Poly Poly::monomial(VarTableP tab, Expv e, const Rat& c) {
  if (e.size() != tab->arity()) throw Error("exponent vector has wrong length");
  if (c == 0) return zero(std::move(tab));
  return Poly(std::move(tab), {{std::move(e), c}});
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && totdeg(terms_[0].first) == 0);
}

const Rat& Poly::constant_value() const {
  static const Rat kZero(0);
  if (terms_.empty()) return kZero;
  if (!is_constant()) throw Error("polynomial is not constant");
  return terms_[0].second;
}

const Poly::Term& Poly::leading() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return terms_.back();
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(totdeg(terms_.back().first));
}

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool Poly::depends_on(std::size_t var) const {
  for (const auto& [e, c] : terms_)
    if (e[var] != 0) return true;
  return false;
}

Rat Poly::coeff(const Expv& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Expv& k) { return mono_cmp(t.first, k) < 0; });
  if (it != terms_.end() && it->first == e) return it->second;
  return Rat(0);
}

Poly Poly::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& [e, c] : t) c = -c;
  return Poly(tab_, std::move(t));
}

namespace {

// Merge two ascending term lists, combining equal monomials.
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a,
                                    const std::vector<Poly::Term>& b, bool negate_b) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = mono_cmp(a[i].first, b[j].first);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.emplace_back(b[j].first, negate_b ? Rat(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rat s = negate_b ? Rat(a[i].second - b[j].second) : Rat(a[i].second + b[j].second);
      if (s != 0) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j)
    out.emplace_back(b[j].first, negate_b ? Rat(-b[j].second) : b[j].second);
  return out;
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  check_same_table(a.tab_, b.tab_);
  return Poly(a.tab_, merge_terms(a.terms_, b.terms_, false));
}

Poly operator-(const Poly& a, const Poly& b) {
  check_same_table(a.tab_, b.tab_);
  return Poly(a.tab_, merge_terms(a.terms_, b.terms_, true));
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_table(a.tab_, b.tab_);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.tab_);
  std::map<Expv, Rat, MonoLess> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Expv e = expv_add(ea, eb);
      auto [it, fresh] = acc.emplace(std::move(e), ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  }
  std::vector<Poly::Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) out.emplace_back(e, c);
  return Poly(a.tab_, std::move(out));
}

Poly Poly::mul_term(const Expv& e, const Rat& c) const {
  if (c == 0) return zero(tab_);
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& [me, mc] : terms_) t.emplace_back(expv_add(me, e), mc * c);
  return Poly(tab_, std::move(t));
}

Poly Poly::mul_scalar(const Rat& c) const {
  if (c == 0) return zero(tab_);
  std::vector<Term> t = terms_;
  for (auto& [e, k] : t) k *= c;
  return Poly(tab_, std::move(t));
}

Poly Poly::pow(unsigned k) const {
  Poly r = constant(tab_, Rat(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

Poly Poly::derive(std::size_t var) const {
  if (var >= tab_->arity()) throw Error("variable index out of range");
  std::vector<Term> t;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Expv d = e;
    d[var] -= 1;
    t.emplace_back(std::move(d), c * Rat(static_cast<long>(e[var])));
  }
  std::sort(t.begin(), t.end(),
            [](const Term& x, const Term& y) { return mono_cmp(x.first, y.first) < 0; });
  return Poly(tab_, std::move(t));
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  if (point.size() != tab_->arity()) throw Error("evaluation point has wrong arity");
  Rat sum(0);
  for (const auto& [e, c] : terms_) {
    Rat m = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) m *= point[i];
    }
    sum += m;
  }
  return sum;
}

Poly Poly::subst(const VarTableP& target, const std::vector<Poly>& images) const {
  if (images.size() != tab_->arity()) throw Error("substitution image list has wrong arity");
  for (const auto& im : images) check_same_table(im.table(), target);
  Poly sum = Poly::zero(target);
  for (const auto& [e, c] : terms_) {
    Poly m = Poly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) m = m * images[i].pow(e[i]);
    sum = sum + m;
  }
  return sum;
}

Rat Poly::content() const {
  if (terms_.empty()) return Rat(0);
  mpz_class g(0), l(1);
  for (const auto& [e, c] : terms_) {
    g = gcd(g, c.get_num());
    l = lcm(l, c.get_den());
  }
  Rat cont(g, l);
  cont.canonicalize();
  if (sgn(terms_.back().second) < 0) cont = -cont;
  return cont;
}

Poly Poly::primitive() const {
  if (terms_.empty()) return *this;
  return mul_scalar(Rat(1) / content());
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  check_same_table(a.tab_, b.tab_);
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return a;
  Poly r = a;
  std::vector<Term> q;
  const Term& lb = b.leading();
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!expv_divides(lb.first, lr.first))
      throw NotDivisible("polynomial division leaves a remainder");
    Expv e = expv_sub(lr.first, lb.first);
    Rat c = lr.second / lb.second;
    r = r - b.mul_term(e, c);
    q.emplace_back(std::move(e), std::move(c));
  }
  std::sort(q.begin(), q.end(),
            [](const Term& x, const Term& y) { return mono_cmp(x.first, y.first) < 0; });
  return Poly(a.tab_, std::move(q));
}

}  // namespace weylbb
