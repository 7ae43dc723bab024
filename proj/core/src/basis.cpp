#include "weylbb/basis.hpp"

#include <algorithm>

#include "weylbb/error.hpp"

namespace weylbb {

std::vector<Matrix> mult_matrices(const BorderPrebasis& G) {
  const OrderIdeal& oi = G.oi;
  const std::size_t m = oi.size();
  std::vector<Matrix> mats;
  mats.reserve(oi.nvars());
  for (std::size_t i = 0; i < oi.nvars(); ++i) {
    Matrix M(G.table(), m, m);
    for (std::size_t k = 0; k < m; ++k) {
      Expv u = oi.elem(k);
      u[i] += 1;
      if (oi.contains(u)) {
        M.at(oi.position(u), k) = RatFun::one(G.table());
      } else {
        auto it = std::lower_bound(G.border.begin(), G.border.end(), u, MonoLess{});
        std::size_t s = static_cast<std::size_t>(it - G.border.begin());
        for (std::size_t r = 0; r < m; ++r) M.at(r, k) = G.coeffs[s][r];
      }
    }
    mats.push_back(std::move(M));
  }
  return mats;
}

bool is_border_basis_comm(BorderPrebasis& G) {
  if (G.ring != RingKind::Commutative)
    throw Error("commutative basis check on a non-commutative prebasis");
  std::vector<Matrix> M = mult_matrices(G);
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = i + 1; j < M.size(); ++j)
      if (!Matrix::commutator(M[i], M[j]).is_zero()) return false;
  G.verified = true;
  return true;
}

bool is_border_basis_weyl(BorderPrebasis& G) {
  if (G.ring != RingKind::Weyl) throw Error("Weyl basis check on a commutative prebasis");
  std::vector<Matrix> M = mult_matrices(G);
  for (std::size_t i = 0; i < M.size(); ++i) {
    for (std::size_t j = i + 1; j < M.size(); ++j) {
      Matrix lhs = Matrix::commutator(M[i], M[j]);
      Matrix rhs = M[i].derive(j) - M[j].derive(i);
      if (lhs != rhs) return false;
    }
  }
  G.verified = true;
  return true;
}

bool verify_basis(BorderPrebasis& G) {
  return G.ring == RingKind::Commutative ? is_border_basis_comm(G) : is_border_basis_weyl(G);
}

bool membership(const WeylOp& f, const BorderPrebasis& B) {
  std::vector<RatFun> r = normal_form(f, B);
  for (const auto& c : r)
    if (!c.is_zero()) return false;
  return true;
}

bool membership(const RatFun& f, const BorderPrebasis& B) {
  if (B.ring != RingKind::Commutative)
    throw Error("scalar membership input requires a commutative prebasis");
  return membership(WeylOp::group_comm(f), B);
}

bool ideal_equal(const BorderPrebasis& A, const BorderPrebasis& B) {
  check_same_table(A.table(), B.table());
  if (A.ring != B.ring) throw Error("ideal comparison across different rings");
  if (!A.verified || !B.verified)
    throw PrebasisNotVerified("ideal comparison requires verified border bases");
  for (std::size_t j = 0; j < A.nelems(); ++j)
    if (!membership(A.element(j), B)) return false;
  for (std::size_t j = 0; j < B.nelems(); ++j)
    if (!membership(B.element(j), A)) return false;
  return true;
}

std::vector<std::pair<Expv, WeylOp>> corner_subset(const BorderPrebasis& B) {
  std::vector<std::pair<Expv, WeylOp>> out;
  for (const Expv& c : B.oi.corners()) {
    auto it = std::lower_bound(B.border.begin(), B.border.end(), c, MonoLess{});
    std::size_t j = static_cast<std::size_t>(it - B.border.begin());
    out.emplace_back(c, B.element(j));
  }
  return out;
}

}  // namespace weylbb
