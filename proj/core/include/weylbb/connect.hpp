#pragma once

#include <optional>

#include "weylbb/basis.hpp"

namespace weylbb {

// First-order system  d_i F = A_i F  given by one square matrix per marked
// variable. The basis label records what the coordinates of F mean: either an
// order ideal of operator monomials (required to extract an annihilating
// ideal) or free-text labels. `verified_integrable` is set by
// check_integrability only and is never trusted from serialized input.
struct ConnectionSystem {
  std::vector<Matrix> mats;
  std::optional<OrderIdeal> basis_oi;
  std::vector<std::string> basis_labels;  // used when basis_oi is absent
  bool verified_integrable = false;

  std::size_t rank() const { return mats.empty() ? 0 : mats[0].rows(); }
  const VarTableP& table() const;
  void check_shape() const;  // n matrices, all square of equal size
};

// First failing entry of the integrability residual
// [A_i, A_j] - (d_i A_j) + (d_j A_i), in scan order i<j, row, column.
struct IntegrabilityWitness {
  std::size_t i = 0, j = 0, row = 0, col = 0;
  std::optional<RatFun> residual;
};

// Tests  [A_i, A_j] = (d_i A_j) - (d_j A_i)  for all pairs; marks the system
// verified on success, records the first violation otherwise.
bool check_integrability(ConnectionSystem& C, IntegrabilityWitness* witness = nullptr);

// Basis change F -> g F:  A_i  ->  g A_i g^-1 + (d_i g) g^-1.  The result
// carries the caller-supplied basis label (it cannot be inferred) and is left
// unverified; gauge transforms preserve integrability, so re-checking is the
// caller's (cheap) responsibility.
ConnectionSystem gauge(const ConnectionSystem& C, const Matrix& g,
                       std::optional<OrderIdeal> new_basis = std::nullopt,
                       std::vector<std::string> new_labels = {});

// Reads a border basis off a verified integrable system whose basis label is
// an order ideal: the generator marked b = d_j t_k (smallest such j) takes row
// k of A_j as its coefficient row; every alternative factorization must give
// the same row. The result passes the Weyl basis check (asserted).
BorderPrebasis ideal_from_connection(const ConnectionSystem& C);

// Transposed multiplication matrices of a verified border basis, labeled by
// its order ideal. Integrability is exactly the basis identity transposed.
ConnectionSystem pfaffian_from_basis(const BorderPrebasis& B);

// System with A_i = (1/x_i) * C_i^T from pairwise commuting matrices C_i whose
// entries are free of the marked variables. Labels name the coordinates.
ConnectionSystem frobenius_connection(const VarTableP& tab, const std::vector<Matrix>& cmats,
                                      std::vector<std::string> labels);

// System with constant A_i = C_i^T from pairwise commuting constant matrices.
ConnectionSystem constant_connection(const VarTableP& tab, const std::vector<Matrix>& cmats,
                                     std::vector<std::string> labels);

// If every A_i = f * B_i with B_i free of the parameter f (given by its
// variable index), returns the B_i; otherwise nullopt.
std::optional<std::vector<Matrix>> epsilon_factor(const ConnectionSystem& C, std::size_t param);

// d_i A_j == d_j A_i for all pairs (the connection one-form is closed).
bool is_closed(const ConnectionSystem& C);

// [A_i, A_j] == 0 for all pairs.
bool commuting_check(const ConnectionSystem& C);

}  // namespace weylbb
