#include "weylbb/connect.hpp"

#include <algorithm>

#include "weylbb/error.hpp"

namespace weylbb {

const VarTableP& ConnectionSystem::table() const {
  if (mats.empty()) throw Error("connection system has no matrices");
  return mats[0].table();
}

void ConnectionSystem::check_shape() const {
  if (mats.empty()) throw Error("connection system has no matrices");
  const VarTableP& tab = mats[0].table();
  if (mats.size() != tab->nderiv())
    throw Error("connection system needs one matrix per marked variable (" +
                std::to_string(tab->nderiv()) + " expected, " + std::to_string(mats.size()) +
                " given)");
  const std::size_t m = mats[0].rows();
  for (const auto& A : mats) {
    check_same_table(A.table(), tab);
    if (A.rows() != m || A.cols() != m) throw Error("connection matrices must be square of equal size");
  }
  if (basis_oi) {
    if (basis_oi->size() != m) throw Error("basis label size does not match matrix size");
    check_same_table(basis_oi->table(), tab);
  } else if (!basis_labels.empty() && basis_labels.size() != m) {
    throw Error("basis label size does not match matrix size");
  }
}

bool check_integrability(ConnectionSystem& C, IntegrabilityWitness* witness) {
  C.check_shape();
  C.verified_integrable = false;
  const std::size_t n = C.mats.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix res = Matrix::commutator(C.mats[i], C.mats[j]) - C.mats[j].derive(i) + C.mats[i].derive(j);
      for (std::size_t r = 0; r < res.rows(); ++r) {
        for (std::size_t c = 0; c < res.cols(); ++c) {
          if (!res.at(r, c).is_zero()) {
            if (witness) *witness = IntegrabilityWitness{i, j, r, c, res.at(r, c)};
            return false;
          }
        }
      }
    }
  }
  C.verified_integrable = true;
  return true;
}

ConnectionSystem gauge(const ConnectionSystem& C, const Matrix& g,
                       std::optional<OrderIdeal> new_basis, std::vector<std::string> new_labels) {
  C.check_shape();
  check_same_table(g.table(), C.table());
  if (g.rows() != C.rank() || g.cols() != C.rank())
    throw Error("gauge matrix shape does not match the connection rank");
  Matrix ginv = g.inverse();
  ConnectionSystem out;
  out.mats.reserve(C.mats.size());
  for (std::size_t i = 0; i < C.mats.size(); ++i)
    out.mats.push_back(g * C.mats[i] * ginv + g.derive(i) * ginv);
  out.basis_oi = std::move(new_basis);
  if (out.basis_oi) {
    check_same_table(out.basis_oi->table(), C.table());
    if (out.basis_oi->size() != C.rank()) throw Error("basis label size does not match matrix size");
  } else if (!new_labels.empty()) {
    if (new_labels.size() != C.rank()) throw Error("basis label size does not match matrix size");
    out.basis_labels = std::move(new_labels);
  } else {
    for (std::size_t k = 0; k < C.rank(); ++k) out.basis_labels.push_back("e" + std::to_string(k + 1));
  }
  return out;
}

BorderPrebasis ideal_from_connection(const ConnectionSystem& C) {
  C.check_shape();
  if (!C.basis_oi)
    throw BasisNotMonomial("extracting an ideal requires an order-ideal basis label");
  if (!C.verified_integrable)
    throw NotIntegrable("extracting an ideal requires a system that passed the integrability check");
  const OrderIdeal& oi = *C.basis_oi;
  const std::size_t m = oi.size();
  // The basis monomials must actually behave as monomials under the system:
  // whenever d_j carries a basis monomial to another one, the matching row of
  // A_j has to be that unit row. Without this the border rows of the A_j
  // describe no single ideal, however integrable the system is.
  for (std::size_t j = 0; j < oi.nvars(); ++j)
    for (std::size_t k = 0; k < m; ++k) {
      Expv e = oi.elem(k);
      e[j] += 1;
      if (!oi.contains(e)) continue;
      std::size_t k2 = oi.position(e);
      for (std::size_t l = 0; l < m; ++l) {
        RatFun want = l == k2 ? RatFun::one(C.table()) : RatFun::zero(C.table());
        if (C.mats[j].at(k, l) != want)
          throw BasisNotMonomial(
              "connection matrices are not expressed in the monomial frame: row " +
              std::to_string(k + 1) + " of matrix " + std::to_string(j + 1) +
              " must be the unit row of the basis monomial it differentiates to");
      }
    }
  std::vector<Expv> border = oi.border();
  std::vector<std::vector<RatFun>> coeffs(border.size(),
                                          std::vector<RatFun>(m, RatFun::zero(C.table())));
  for (std::size_t s = 0; s < border.size(); ++s) {
    const Expv& b = border[s];
    bool have_row = false;
    std::size_t checked = 0;
    for (std::size_t j = 0; j < oi.nvars() && checked < 2; ++j) {
      if (b[j] == 0) continue;
      Expv t = b;
      t[j] -= 1;
      if (!oi.contains(t)) continue;
      std::size_t k = oi.position(t);
      if (!have_row) {
        for (std::size_t l = 0; l < m; ++l) coeffs[s][l] = C.mats[j].at(k, l);
        have_row = true;
      } else {
        for (std::size_t l = 0; l < m; ++l)
          if (coeffs[s][l] != C.mats[j].at(k, l))
            throw Error("internal: border factorizations disagree for an integrable system");
      }
      ++checked;
    }
    if (!have_row) throw Error("internal: border monomial has no factorization over the order ideal");
  }
  BorderPrebasis G = BorderPrebasis::from_coeffs(oi, RingKind::Weyl, std::move(coeffs));
  if (!is_border_basis_weyl(G))
    throw Error("internal: integrable system produced a prebasis that fails the basis check");
  return G;
}

ConnectionSystem pfaffian_from_basis(const BorderPrebasis& B) {
  if (!B.verified)
    throw PrebasisNotVerified("Pfaffian extraction requires a verified border basis");
  std::vector<Matrix> M = mult_matrices(B);
  ConnectionSystem out;
  out.mats.reserve(M.size());
  for (const auto& Mi : M) out.mats.push_back(Mi.transpose());
  out.basis_oi = B.oi;
  out.verified_integrable = true;  // the basis check is this identity, transposed
  return out;
}

namespace {

void require_commuting_constant(const VarTableP& tab, const std::vector<Matrix>& cmats) {
  if (cmats.empty()) throw Error("connection construction needs at least one matrix");
  if (cmats.size() != tab->nderiv())
    throw Error("need one matrix per marked variable");
  const std::size_t m = cmats[0].rows();
  for (const auto& Cm : cmats) {
    check_same_table(Cm.table(), tab);
    if (Cm.rows() != m || Cm.cols() != m) throw Error("matrices must be square of equal size");
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t v = 0; v < tab->nderiv(); ++v)
          if (Cm.at(r, c).depends_on(v))
            throw Error("matrix entries must be free of the marked variables");
  }
  for (std::size_t i = 0; i < cmats.size(); ++i)
    for (std::size_t j = i + 1; j < cmats.size(); ++j)
      if (!Matrix::commutator(cmats[i], cmats[j]).is_zero())
        throw NotCommuting("matrices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                           " do not commute");
}

}  // namespace

ConnectionSystem frobenius_connection(const VarTableP& tab, const std::vector<Matrix>& cmats,
                                      std::vector<std::string> labels) {
  require_commuting_constant(tab, cmats);
  ConnectionSystem out;
  for (std::size_t i = 0; i < cmats.size(); ++i) {
    RatFun xi_inv = RatFun::variable(tab, i).inverse();
    out.mats.push_back(cmats[i].transpose().scale(xi_inv));
  }
  out.basis_labels = std::move(labels);
  if (!check_integrability(out)) throw Error("internal: Frobenius system failed integrability");
  return out;
}

ConnectionSystem constant_connection(const VarTableP& tab, const std::vector<Matrix>& cmats,
                                     std::vector<std::string> labels) {
  require_commuting_constant(tab, cmats);
  ConnectionSystem out;
  for (const auto& Cm : cmats) out.mats.push_back(Cm.transpose());
  out.basis_labels = std::move(labels);
  if (!check_integrability(out)) throw Error("internal: constant system failed integrability");
  return out;
}

std::optional<std::vector<Matrix>> epsilon_factor(const ConnectionSystem& C, std::size_t param) {
  C.check_shape();
  const VarTableP& tab = C.table();
  if (param < tab->nderiv() || param >= tab->arity())
    throw Error("epsilon factor requires a parameter index");
  RatFun eps_inv = RatFun::variable(tab, param).inverse();
  std::vector<Matrix> out;
  out.reserve(C.mats.size());
  for (const auto& A : C.mats) {
    Matrix B = A.scale(eps_inv);
    for (std::size_t r = 0; r < B.rows(); ++r)
      for (std::size_t c = 0; c < B.cols(); ++c)
        if (B.at(r, c).depends_on(param)) return std::nullopt;
    out.push_back(std::move(B));
  }
  return out;
}

bool is_closed(const ConnectionSystem& C) {
  C.check_shape();
  for (std::size_t i = 0; i < C.mats.size(); ++i)
    for (std::size_t j = i + 1; j < C.mats.size(); ++j)
      if (C.mats[j].derive(i) != C.mats[i].derive(j)) return false;
  return true;
}

bool commuting_check(const ConnectionSystem& C) {
  C.check_shape();
  for (std::size_t i = 0; i < C.mats.size(); ++i)
    for (std::size_t j = i + 1; j < C.mats.size(); ++j)
      if (!Matrix::commutator(C.mats[i], C.mats[j]).is_zero()) return false;
  return true;
}

}  // namespace weylbb
