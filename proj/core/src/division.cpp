#include "weylbb/division.hpp"

#include <cstdlib>
#include <map>

#include "weylbb/error.hpp"

namespace weylbb {

BorderPrebasis BorderPrebasis::from_coeffs(OrderIdeal oi, RingKind ring,
                                           std::vector<std::vector<RatFun>> coeffs) {
  std::vector<Expv> border = oi.border();
  if (coeffs.size() != border.size())
    throw Error("prebasis coefficient grid: expected " + std::to_string(border.size()) +
                " rows, got " + std::to_string(coeffs.size()));
  for (const auto& row : coeffs) {
    if (row.size() != oi.size())
      throw Error("prebasis coefficient grid: expected " + std::to_string(oi.size()) +
                  " columns, got " + std::to_string(row.size()));
    for (const auto& c : row) {
      check_same_table(c.table(), oi.table());
      if (ring == RingKind::Commutative) {
        for (std::size_t v = 0; v < oi.nvars(); ++v)
          if (c.depends_on(v))
            throw Error("commutative prebasis coefficient depends on a ring variable");
      }
    }
  }
  return BorderPrebasis{std::move(oi), ring, std::move(border), std::move(coeffs), false};
}

BorderPrebasis BorderPrebasis::from_ops(OrderIdeal oi, RingKind ring,
                                        const std::vector<WeylOp>& ops) {
  std::vector<Expv> border = oi.border();
  if (ops.size() != border.size())
    throw Error("prebasis needs exactly one generator per border monomial (" +
                std::to_string(border.size()) + " expected, " + std::to_string(ops.size()) +
                " given)");
  std::vector<std::vector<RatFun>> coeffs(
      border.size(), std::vector<RatFun>(oi.size(), RatFun::zero(oi.table())));
  std::vector<bool> seen(border.size(), false);
  for (const auto& op : ops) {
    check_same_table(op.table(), oi.table());
    // the unique border monomial in the support is the marker
    std::size_t marker = border.size();
    for (const auto& [e, c] : op.terms()) {
      if (oi.contains(e)) continue;
      auto it = std::lower_bound(border.begin(), border.end(), e, MonoLess{});
      if (it == border.end() || *it != e)
        throw Error("prebasis generator has support outside the order ideal and its border");
      std::size_t j = static_cast<std::size_t>(it - border.begin());
      if (marker != border.size()) throw Error("prebasis generator has two border monomials");
      if (!c.is_one()) throw Error("border monomial of a prebasis generator must have coefficient 1");
      marker = j;
    }
    if (marker == border.size()) throw Error("prebasis generator has no border monomial");
    if (seen[marker]) throw Error("two prebasis generators share one border monomial");
    seen[marker] = true;
    for (const auto& [e, c] : op.terms()) {
      if (oi.contains(e)) coeffs[marker][oi.position(e)] = -c;
    }
  }
  return from_coeffs(std::move(oi), ring, std::move(coeffs));
}

WeylOp BorderPrebasis::element(std::size_t j) const {
  WeylOp g = WeylOp::dmono(table(), border.at(j));
  for (std::size_t i = 0; i < oi.size(); ++i) {
    if (coeffs[j][i].is_zero()) continue;
    g -= WeylOp::dmono(table(), oi.elem(i), coeffs[j][i]);
  }
  return g;
}

namespace {

unsigned long division_cap(const OrderIdeal& oi, unsigned ind, int degf) {
  if (const char* env = std::getenv("WEYLBB_DIVISION_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  // 10 * (number of monomials of degree <= ind + deg f in n variables)
  unsigned long d = ind + static_cast<unsigned long>(degf < 0 ? 0 : degf);
  unsigned long n = oi.nvars();
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), d + n, n);
  mpz_class capped = 10 * c;
  if (!capped.fits_ulong_p()) return ~0ul;
  return capped.get_ui();
}

}  // namespace

DivisionResult border_divide(const WeylOp& f, const BorderPrebasis& G) {
  check_same_table(f.table(), G.table());
  const OrderIdeal& oi = G.oi;
  DivisionResult res;
  res.quotients.assign(G.nelems(), WeylOp::zero(G.table()));
  res.remainder.assign(oi.size(), RatFun::zero(G.table()));
  if (f.is_zero()) return res;
  if (G.ring == RingKind::Commutative) {
    for (const auto& [e, c] : f.terms()) {
      for (std::size_t v = 0; v < oi.nvars(); ++v)
        if (c.depends_on(v))
          throw Error("commutative division input has a coefficient depending on a ring variable");
    }
  }

  std::map<Expv, unsigned, MonoLess> index_cache;
  auto index_of = [&](const Expv& e) {
    auto it = index_cache.find(e);
    if (it == index_cache.end()) it = index_cache.emplace(e, oi.index_mono(e)).first;
    return it->second;
  };

  WeylOp h = f;
  const unsigned ind_f = oi.index_op(f);
  const unsigned long cap = division_cap(oi, ind_f, f.degree());
  unsigned long steps = 0;

  // strict lexicographic descent of (max index, max degree there, count there)
  auto measure = [&](const WeylOp& w) {
    unsigned I = 0, D = 0;
    unsigned long C = 0;
    for (const auto& [e, c] : w.terms()) {
      unsigned k = index_of(e);
      unsigned d = totdeg(e);
      if (k > I || (k == I && d > D)) {
        I = k;
        D = d;
        C = 1;
      } else if (k == I && d == D) {
        ++C;
      }
    }
    return std::tuple<unsigned, unsigned, unsigned long>(I, D, C);
  };

  auto prev = measure(h);
  while (!h.is_zero()) {
    // pick the reduction term: max index, then max degree, then latest in the
    // term order (terms() is ascending, so scan from the back)
    unsigned best_ind = 0;
    std::size_t best = h.nterms();
    for (std::size_t r = h.nterms(); r > 0; --r) {
      const Expv& e = h.terms()[r - 1].first;
      unsigned k = index_of(e);
      if (k == 0) continue;
      unsigned d = totdeg(e);
      if (best == h.nterms() || k > best_ind ||
          (k == best_ind && d > totdeg(h.terms()[best].first))) {
        best = r - 1;
        best_ind = k;
      }
    }
    if (best == h.nterms()) break;  // every term sits inside the order ideal

    const Expv alpha = h.terms()[best].first;
    const RatFun a = h.terms()[best].second;
    const unsigned k = best_ind;
    // smallest border position factoring alpha = t' * b_j with deg t' = k - 1
    std::size_t j = G.nelems();
    for (std::size_t cand = 0; cand < G.nelems(); ++cand) {
      const Expv& b = G.border[cand];
      if (!expv_divides(b, alpha)) continue;
      if (totdeg(alpha) - totdeg(b) == k - 1) {
        j = cand;
        break;
      }
    }
    if (j == G.nelems()) throw Error("internal: no border factorization for a positive-index term");
    Expv tp = expv_sub(alpha, G.border[j]);
    WeylOp mult = WeylOp::dmono(G.table(), std::move(tp), a);
    res.quotients[j] += mult;
    h -= WeylOp::mul(mult, G.element(j), G.ring);

    auto cur = measure(h);
    if (!h.is_zero() && !(cur < prev))
      throw Error("internal: border division measure failed to decrease");
    prev = cur;
    if (++steps > cap)
      throw DivisionCapExceeded("border division exceeded " + std::to_string(cap) + " steps");
  }

  for (const auto& [e, c] : h.terms()) res.remainder[oi.position(e)] = c;
  return res;
}

DivisionResult border_divide(const RatFun& f, const BorderPrebasis& G) {
  if (G.ring != RingKind::Commutative)
    throw Error("scalar division input requires a commutative prebasis");
  return border_divide(WeylOp::group_comm(f), G);
}

WeylOp remainder_op(const std::vector<RatFun>& remainder, const OrderIdeal& oi) {
  if (remainder.size() != oi.size()) throw Error("remainder vector has wrong length");
  WeylOp r = WeylOp::zero(oi.table());
  for (std::size_t i = 0; i < remainder.size(); ++i) {
    if (remainder[i].is_zero()) continue;
    r += WeylOp::dmono(oi.table(), oi.elem(i), remainder[i]);
  }
  return r;
}

std::vector<RatFun> normal_form(const WeylOp& f, const BorderPrebasis& B) {
  if (!B.verified)
    throw PrebasisNotVerified("normal form requires a prebasis that passed the basis check");
  return border_divide(f, B).remainder;
}

}  // namespace weylbb
