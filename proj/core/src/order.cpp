#include "weylbb/order.hpp"

#include <algorithm>

#include "weylbb/error.hpp"

namespace weylbb {

OrderIdeal::OrderIdeal(VarTableP tab, std::vector<Expv> elems) : tab_(std::move(tab)) {
  const std::size_t n = tab_->nderiv();
  for (const auto& e : elems) {
    if (e.size() != n) throw Error("order ideal element has wrong arity");
    lookup_.insert(e);
  }
  if (!is_order_ideal(n, elems)) throw NotOrderIdeal("set is not closed under monomial division");
  elems_.assign(lookup_.begin(), lookup_.end());
}

bool OrderIdeal::is_order_ideal(std::size_t nvars, const std::vector<Expv>& elems) {
  if (elems.empty()) return false;
  std::set<Expv, MonoLess> all(elems.begin(), elems.end());
  for (const auto& e : all) {
    if (e.size() != nvars) return false;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (e[i] == 0) continue;
      Expv p = e;
      p[i] -= 1;
      if (!all.count(p)) return false;
    }
  }
  return true;  // closure under division forces the monomial 1 to be present
}

std::size_t OrderIdeal::position(const Expv& e) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), e, MonoLess{});
  if (it == elems_.end() || *it != e) throw Error("monomial is not in the order ideal");
  return static_cast<std::size_t>(it - elems_.begin());
}

std::vector<Expv> OrderIdeal::border() const {
  std::set<Expv, MonoLess> out;
  for (const auto& t : elems_) {
    for (std::size_t i = 0; i < nvars(); ++i) {
      Expv u = t;
      u[i] += 1;
      if (!lookup_.count(u)) out.insert(std::move(u));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Expv> OrderIdeal::kth_border(unsigned k) const {
  if (k == 0) return elems_;
  std::set<Expv, MonoLess> closure = lookup_;
  std::set<Expv, MonoLess> layer;
  for (unsigned step = 0; step < k; ++step) {
    layer.clear();
    for (const auto& t : closure) {
      for (std::size_t i = 0; i < nvars(); ++i) {
        Expv u = t;
        u[i] += 1;
        if (!closure.count(u)) layer.insert(std::move(u));
      }
    }
    closure.insert(layer.begin(), layer.end());
  }
  return {layer.begin(), layer.end()};
}

std::vector<Expv> OrderIdeal::corners() const {
  std::vector<Expv> out;
  for (const auto& b : border()) {
    bool corner = true;
    for (std::size_t i = 0; i < nvars() && corner; ++i) {
      if (b[i] == 0) continue;
      Expv p = b;
      p[i] -= 1;
      if (!lookup_.count(p)) corner = false;
    }
    if (corner) out.push_back(b);
  }
  return out;
}

unsigned OrderIdeal::index_mono(const Expv& t) const {
  if (t.size() != nvars()) throw Error("monomial has wrong arity");
  if (lookup_.count(t)) return 0;
  std::set<Expv, MonoLess> closure = lookup_;
  for (unsigned k = 1; k <= totdeg(t); ++k) {
    std::set<Expv, MonoLess> layer;
    for (const auto& s : closure) {
      for (std::size_t i = 0; i < nvars(); ++i) {
        Expv u = s;
        u[i] += 1;
        if (!closure.count(u)) layer.insert(std::move(u));
      }
    }
    if (layer.count(t)) return k;
    closure.insert(layer.begin(), layer.end());
  }
  throw Error("internal: index exceeds total degree");
}

unsigned OrderIdeal::index_op(const WeylOp& f) const {
  if (f.is_zero()) throw ZeroOperator("index of the zero operator");
  unsigned k = 0;
  for (const auto& [e, c] : f.terms()) k = std::max(k, index_mono(e));
  return k;
}

}  // namespace weylbb
