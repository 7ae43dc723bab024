#include "weylbb/weyl.hpp"

#include <algorithm>
#include <map>

#include "weylbb/error.hpp"

namespace weylbb {

WeylOp WeylOp::zero(VarTableP tab) { return WeylOp(std::move(tab), {}); }

WeylOp WeylOp::from_coeff(RatFun c) {
  VarTableP tab = c.table();
  if (c.is_zero()) return zero(std::move(tab));
  Expv e(tab->nderiv(), 0);
  std::vector<Term> t;
  t.emplace_back(std::move(e), std::move(c));
  return WeylOp(std::move(tab), std::move(t));
}

WeylOp WeylOp::dmono(VarTableP tab, Expv e, RatFun c) {
  if (e.size() != tab->nderiv()) throw Error("operator exponent vector has wrong length");
  check_same_table(tab, c.table());
  if (c.is_zero()) return zero(std::move(tab));
  std::vector<Term> t;
  t.emplace_back(std::move(e), std::move(c));
  return WeylOp(std::move(tab), std::move(t));
}

WeylOp WeylOp::dmono(VarTableP tab, Expv e) {
  RatFun one = RatFun::one(tab);
  return dmono(std::move(tab), std::move(e), std::move(one));
}

WeylOp WeylOp::dvar(VarTableP tab, std::size_t i) {
  if (i >= tab->nderiv()) throw Error("derivation index out of range");
  Expv e(tab->nderiv(), 0);
  e[i] = 1;
  return dmono(std::move(tab), std::move(e));
}

RatFun WeylOp::coeff(const Expv& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Expv& k) { return mono_cmp(t.first, k) < 0; });
  if (it != terms_.end() && it->first == e) return it->second;
  return RatFun::zero(tab_);
}

std::vector<Expv> WeylOp::support() const {
  std::vector<Expv> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

int WeylOp::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(totdeg(terms_.back().first));
}

WeylOp WeylOp::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& [e, c] : t) c = -c;
  return WeylOp(tab_, std::move(t));
}

namespace {

std::vector<WeylOp::Term> merge_wterms(const std::vector<WeylOp::Term>& a,
                                       const std::vector<WeylOp::Term>& b) {
  std::vector<WeylOp::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = mono_cmp(a[i].first, b[j].first);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(b[j++]);
    } else {
      RatFun s = a[i].second + b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

}  // namespace

WeylOp operator+(const WeylOp& a, const WeylOp& b) {
  check_same_table(a.tab_, b.tab_);
  return WeylOp(a.tab_, merge_wterms(a.terms_, b.terms_));
}

WeylOp operator-(const WeylOp& a, const WeylOp& b) { return a + (-b); }

WeylOp WeylOp::scale(const RatFun& c) const {
  if (c.is_zero()) return zero(tab_);
  std::vector<Term> t = terms_;
  for (auto& [e, k] : t) k = k * c;
  return WeylOp(tab_, std::move(t));
}

bool WeylOp::coeffs_const() const {
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < tab_->nderiv(); ++i)
      if (c.depends_on(i)) return false;
  }
  return true;
}

std::vector<Expv> submultiindices(const Expv& a) {
  std::vector<Expv> out;
  Expv g(a.size(), 0);
  while (true) {
    out.push_back(g);
    std::size_t i = 0;
    while (i < a.size() && g[i] == a[i]) {
      g[i] = 0;
      ++i;
    }
    if (i == a.size()) break;
    g[i] += 1;
  }
  std::sort(out.begin(), out.end(), [](const Expv& x, const Expv& y) { return mono_cmp(x, y) < 0; });
  return out;
}

Rat binom_expv(const Expv& a, const Expv& g) {
  mpz_class prod(1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), a[i], g[i]);
    prod *= b;
  }
  return Rat(prod);
}

WeylOp WeylOp::mul(const WeylOp& a, const WeylOp& b, RingKind ring) {
  check_same_table(a.tab_, b.tab_);
  const VarTableP& tab = a.tab_;
  std::map<Expv, RatFun, MonoLess> acc;
  auto add_to = [&](Expv e, RatFun c) {
    if (c.is_zero()) return;
    auto it = acc.find(e);
    if (it == acc.end()) {
      acc.emplace(std::move(e), std::move(c));
    } else {
      it->second += c;
    }
  };
  if (ring == RingKind::Commutative) {
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) add_to(expv_add(ea, eb), ca * cb);
  } else {
    // d^a (c_b d^b) = sum_{g <= a} binom(a, g) (d^g c_b) d^(a - g + b)
    for (const auto& [eb, cb] : b.terms_) {
      std::map<Expv, RatFun, MonoLess> derivs;
      for (const auto& [ea, ca] : a.terms_) {
        for (const Expv& g : submultiindices(ea)) {
          auto it = derivs.find(g);
          if (it == derivs.end()) {
            // build d^g cb from an already-computed predecessor
            RatFun val = cb;
            if (totdeg(g) > 0) {
              Expv pred = g;
              std::size_t j = 0;
              while (pred[j] == 0) ++j;
              pred[j] -= 1;
              auto pit = derivs.find(pred);
              val = (pit != derivs.end() ? pit->second : cb).derive(j);
              if (pit == derivs.end() && totdeg(pred) > 0) {
                // predecessor absent only when g has degree 1
                throw Error("internal: derivative cache miss");
              }
            }
            it = derivs.emplace(g, std::move(val)).first;
          }
          add_to(expv_add(expv_sub(ea, g), eb), ca * it->second * RatFun::constant(tab, binom_expv(ea, g)));
        }
      }
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.is_zero()) out.emplace_back(e, c);
  return WeylOp(tab, std::move(out));
}

WeylOp WeylOp::commutator(const WeylOp& a, const WeylOp& b, RingKind ring) {
  return mul(a, b, ring) - mul(b, a, ring);
}

WeylOp WeylOp::pow(unsigned k, RingKind ring) const {
  WeylOp r = from_coeff(RatFun::one(tab_));
  for (unsigned i = 0; i < k; ++i) r = mul(r, *this, ring);
  return r;
}

RatFun WeylOp::apply(const RatFun& f) const {
  check_same_table(tab_, f.table());
  RatFun sum = RatFun::zero(tab_);
  std::map<Expv, RatFun, MonoLess> derivs;
  derivs.emplace(Expv(tab_->nderiv(), 0), f);
  for (const auto& [e, c] : terms_) {
    for (const Expv& g : submultiindices(e)) {
      if (derivs.find(g) == derivs.end()) {
        Expv pred = g;
        std::size_t j = 0;
        while (pred[j] == 0) ++j;
        pred[j] -= 1;
        auto pit = derivs.find(pred);
        if (pit == derivs.end()) throw Error("internal: derivative cache miss");
        derivs.emplace(g, pit->second.derive(j));
      }
    }
    sum += c * derivs.at(e);
  }
  return sum;
}

WeylOp WeylOp::group_comm(const RatFun& f) {
  const VarTableP& tab = f.table();
  const std::size_t n = tab->nderiv();
  for (std::size_t i = 0; i < n; ++i)
    if (f.den().depends_on(i))
      throw Error("denominator depends on a ring variable; not a polynomial in them");
  std::map<Expv, Poly, MonoLess> buckets;
  for (const auto& [e, c] : f.num().terms()) {
    Expv key(e.begin(), e.begin() + n);
    Expv rest = e;
    for (std::size_t i = 0; i < n; ++i) rest[i] = 0;
    Poly mono = Poly::monomial(tab, rest, c);
    auto it = buckets.find(key);
    if (it == buckets.end()) {
      buckets.emplace(std::move(key), std::move(mono));
    } else {
      it->second = it->second + mono;
    }
  }
  std::vector<Term> t;
  for (auto& [e, p] : buckets) {
    RatFun c = RatFun::make(p, f.den());
    if (!c.is_zero()) t.emplace_back(e, std::move(c));
  }
  return WeylOp(tab, std::move(t));
}

RatFun WeylOp::ungroup() const {
  RatFun sum = RatFun::zero(tab_);
  for (const auto& [e, c] : terms_) {
    Expv full(tab_->arity(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) full[i] = e[i];
    sum += c * RatFun::from_poly(Poly::monomial(tab_, full, Rat(1)));
  }
  return sum;
}

}  // namespace weylbb
