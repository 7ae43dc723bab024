#pragma once

#include <set>

#include "weylbb/weyl.hpp"

namespace weylbb {

// Finite downward-closed set of monomials in the n marked variables,
// enumerated ascending in the term order (so element 0 is the monomial 1).
// The enumeration fixes coordinates for every vector and matrix built on top.
class OrderIdeal {
 public:
  // Validates closure under division; throws NotOrderIdeal otherwise.
  OrderIdeal(VarTableP tab, std::vector<Expv> elems);

  static bool is_order_ideal(std::size_t nvars, const std::vector<Expv>& elems);

  const VarTableP& table() const { return tab_; }
  std::size_t nvars() const { return tab_->nderiv(); }
  std::size_t size() const { return elems_.size(); }
  const std::vector<Expv>& elems() const { return elems_; }
  const Expv& elem(std::size_t k) const { return elems_.at(k); }
  bool contains(const Expv& e) const { return lookup_.count(e) != 0; }
  // Position of e in the enumeration; throws when absent.
  std::size_t position(const Expv& e) const;

  friend bool operator==(const OrderIdeal& a, const OrderIdeal& b) {
    return a.elems_ == b.elems_;
  }
  friend bool operator!=(const OrderIdeal& a, const OrderIdeal& b) { return !(a == b); }

  // First border: monomials x_i * t stepping out of the ideal, ascending.
  std::vector<Expv> border() const;
  // k-th border via closures; k = 0 returns the elements themselves.
  std::vector<Expv> kth_border(unsigned k) const;
  // Minimal generators of the complement monomial ideal; a subset of border().
  std::vector<Expv> corners() const;

  // Smallest k with t in the k-th border (0 when t is in the ideal).
  unsigned index_mono(const Expv& t) const;
  // Max of index_mono over the support; throws ZeroOperator on zero.
  unsigned index_op(const WeylOp& f) const;

 private:
  VarTableP tab_;
  std::vector<Expv> elems_;
  std::set<Expv, MonoLess> lookup_;
};

}  // namespace weylbb
