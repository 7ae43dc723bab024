#include <algorithm>
#include <map>

#include "weylbb/error.hpp"
#include "weylbb/poly.hpp"

// Multivariate GCD over Q: recursive content / primitive-part reduction with a
// subresultant polynomial remainder sequence on the primitive parts. Before
// running the PRS we try to prove the primitive parts coprime from a single
// univariate specialization, which settles the common case cheaply and exactly.

namespace weylbb {

namespace {

Poly one_poly(const VarTableP& tab) { return Poly::constant(tab, Rat(1)); }

// Dense view of p as a univariate polynomial in variable v with Poly
// coefficients (each free of v). Index = degree in v.
std::vector<Poly> to_uni(const Poly& p, std::size_t v) {
  const VarTableP& tab = p.table();
  unsigned d = p.degree_in(v);
  std::vector<std::map<Expv, Rat, MonoLess>> buckets(d + 1);
  for (const auto& [e, c] : p.terms()) {
    Expv r = e;
    unsigned k = r[v];
    r[v] = 0;
    buckets[k].emplace(std::move(r), c);
  }
  std::vector<Poly> out;
  out.reserve(d + 1);
  for (auto& m : buckets) {
    Poly s = Poly::zero(tab);
    for (auto& [e, c] : m) s = s + Poly::monomial(tab, e, c);
    out.push_back(std::move(s));
  }
  return out;
}

Poly from_uni(const std::vector<Poly>& u, std::size_t v, const VarTableP& tab) {
  Poly s = Poly::zero(tab);
  Expv xv(tab->arity(), 0);
  for (std::size_t k = 0; k < u.size(); ++k) {
    xv[v] = static_cast<unsigned>(k);
    s = s + u[k].mul_term(xv, Rat(1));
  }
  return s;
}

int uni_deg(const std::vector<Poly>& u) {
  for (std::size_t k = u.size(); k > 0; --k)
    if (!u[k - 1].is_zero()) return static_cast<int>(k - 1);
  return -1;
}

void uni_trim(std::vector<Poly>& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

std::vector<Poly> uni_exact_div(const std::vector<Poly>& u, const Poly& c) {
  std::vector<Poly> r;
  r.reserve(u.size());
  for (const auto& p : u) r.push_back(Poly::exact_div(p, c));
  return r;
}

// Pseudo-remainder of a by b (both dense in the main variable, b nonzero):
// lc(b)^(deg a - deg b + 1) * a = q*b + prem, with every division exact.
std::vector<Poly> uni_prem(std::vector<Poly> a, const std::vector<Poly>& b) {
  int db = uni_deg(b);
  const Poly& lb = b[db];
  int e = uni_deg(a) - db + 1;
  while (true) {
    uni_trim(a);
    int da = uni_deg(a);
    if (da < db) break;
    const Poly la = a.back();
    for (int i = 0; i < da; ++i) {
      Poly t = a[i] * lb;
      int j = i - (da - db);
      if (j >= 0) t = t - la * b[j];
      a[i] = std::move(t);
    }
    a.pop_back();  // leading cancels by construction
    --e;
  }
  Poly f = one_poly(lb.table());
  for (int i = 0; i < e; ++i) f = f * lb;
  if (!(f == one_poly(lb.table()))) {
    for (auto& p : a) p = p * f;
  }
  return a;
}

// Content of a dense univariate view: gcd of its coefficients.
Poly uni_content(const std::vector<Poly>& u, const VarTableP& tab) {
  Poly c = Poly::zero(tab);
  for (const auto& p : u) {
    if (p.is_zero()) continue;
    c = poly_gcd(c, p);
    if (c.is_constant() && !c.is_zero()) return one_poly(tab);
  }
  if (c.is_zero()) throw Error("content of zero polynomial");
  return c;
}

// Univariate Euclid over Q, degrees only.
int uni_rat_gcd_deg(std::vector<Rat> a, std::vector<Rat> b) {
  auto deg = [](const std::vector<Rat>& u) {
    for (std::size_t k = u.size(); k > 0; --k)
      if (u[k - 1] != 0) return static_cast<int>(k - 1);
    return -1;
  };
  while (true) {
    int db = deg(b);
    if (db < 0) return deg(a);
    while (deg(a) >= db) {
      int da = deg(a);
      Rat f = a[da] / b[db];
      for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
      a[da] = 0;
    }
    std::swap(a, b);
  }
}

// Attempt to prove gcd(pa, pb) free of v by specializing every other variable
// at integer points. Valid whenever neither leading coefficient vanishes at
// the point: the specialized gcd degree then bounds the true degree in v.
bool coprime_by_eval(const std::vector<Poly>& pa, const std::vector<Poly>& pb) {
  const VarTableP& tab = pa[0].table();
  for (long attempt = 0; attempt < 2; ++attempt) {
    std::vector<Rat> point(tab->arity());
    for (std::size_t i = 0; i < point.size(); ++i)
      point[i] = Rat(3 + 2 * attempt + static_cast<long>(i * (5 + attempt)) % 17);
    auto eval_uni = [&](const std::vector<Poly>& u) {
      std::vector<Rat> r;
      r.reserve(u.size());
      for (const auto& p : u) r.push_back(p.eval(point));
      return r;
    };
    std::vector<Rat> ua = eval_uni(pa), ub = eval_uni(pb);
    if (ua.back() == 0 || ub.back() == 0) continue;  // degree dropped; try again
    return uni_rat_gcd_deg(std::move(ua), std::move(ub)) == 0;
  }
  return false;
}

// Subresultant PRS on primitive parts; returns the gcd (primitive in v).
Poly subresultant_gcd(std::vector<Poly> A, std::vector<Poly> B, std::size_t v,
                      const VarTableP& tab) {
  if (uni_deg(A) < uni_deg(B)) std::swap(A, B);
  Poly g = one_poly(tab), h = one_poly(tab);
  while (true) {
    int da = uni_deg(A), db = uni_deg(B);
    int delta = da - db;
    std::vector<Poly> R = uni_prem(A, B);
    uni_trim(R);
    if (uni_deg(R) < 0) break;  // B divides A (up to factors): B is the gcd
    if (db == 0) return one_poly(tab);
    Poly divisor = g;
    for (int i = 0; i < delta; ++i) divisor = divisor * h;
    A = std::move(B);
    B = uni_exact_div(R, divisor);
    g = A[uni_deg(A)];
    if (delta > 0) {
      Poly gd = g;
      for (int i = 1; i < delta; ++i) gd = gd * g;
      Poly hd = one_poly(tab);
      for (int i = 1; i < delta; ++i) hd = hd * h;
      h = Poly::exact_div(gd, hd);
    }
    if (uni_deg(B) == 0) return one_poly(tab);
  }
  Poly cont = uni_content(B, tab);
  return from_uni(uni_exact_div(B, cont), v, tab);
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  check_same_table(a.table(), b.table());
  const VarTableP& tab = a.table();
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return one_poly(tab);

  // Common monomial factor.
  const std::size_t N = tab->arity();
  Expv ma(N, ~0u), mb(N, ~0u);
  for (const auto& [e, c] : a.terms())
    for (std::size_t i = 0; i < N; ++i) ma[i] = std::min(ma[i], e[i]);
  for (const auto& [e, c] : b.terms())
    for (std::size_t i = 0; i < N; ++i) mb[i] = std::min(mb[i], e[i]);
  Expv m(N);
  for (std::size_t i = 0; i < N; ++i) m[i] = std::min(ma[i], mb[i]);
  Poly mono = Poly::monomial(tab, m, Rat(1));

  auto strip = [&](const Poly& p, const Expv& me) {
    Poly r = Poly::zero(tab);
    for (const auto& [e, c] : p.terms()) r = r + Poly::monomial(tab, expv_sub(e, me), c);
    return r;
  };
  Poly pa = strip(a, ma).primitive();
  Poly pb = strip(b, mb).primitive();
  if (pa.is_constant() || pb.is_constant()) return mono;
  if (pa == pb) return mono * pa;

  std::size_t v = N;
  unsigned best = ~0u;
  for (std::size_t i = 0; i < N; ++i) {
    if (!pa.depends_on(i) || !pb.depends_on(i)) continue;
    unsigned d = std::min(pa.degree_in(i), pb.degree_in(i));
    if (d < best) {
      best = d;
      v = i;
    }
  }
  if (v == N) return mono;  // no shared variable

  std::vector<Poly> ua = to_uni(pa, v), ub = to_uni(pb, v);
  Poly ca = uni_content(ua, tab), cb = uni_content(ub, tab);
  Poly c = poly_gcd(ca, cb);
  std::vector<Poly> ppa = uni_exact_div(ua, ca), ppb = uni_exact_div(ub, cb);

  Poly g = one_poly(tab);
  if (!coprime_by_eval(ppa, ppb)) {
    g = subresultant_gcd(std::move(ppa), std::move(ppb), v, tab);
  }
  return (mono * c * g).primitive();
}

}  // namespace weylbb
