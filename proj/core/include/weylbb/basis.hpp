#pragma once

#include "weylbb/division.hpp"
#include "weylbb/matrix.hpp"

namespace weylbb {

// Formal multiplication matrices of a prebasis, one per marked variable.
// Column k of mats[i] holds the coordinates of x_i * t_k (resp. d_i * t_k):
// a unit vector when the product stays in the order ideal, otherwise the
// coefficient column of the border generator it lands on.
std::vector<Matrix> mult_matrices(const BorderPrebasis& G);

// Full border basis checks. On success the prebasis is marked verified.
// Commutative: the multiplication matrices commute pairwise.
bool is_border_basis_comm(BorderPrebasis& G);
// Weyl: [M_i, M_j] = (d_j M_i) - (d_i M_j) entrywise, matching the failure of
// the formal matrices to commute against the derivatives of their entries.
bool is_border_basis_weyl(BorderPrebasis& G);
// Dispatch on G.ring.
bool verify_basis(BorderPrebasis& G);

// Ideal membership via the (unique) normal form; requires a verified basis.
bool membership(const WeylOp& f, const BorderPrebasis& B);
bool membership(const RatFun& f, const BorderPrebasis& B);

// Mutual membership of all generators; both bases must be verified and share
// one variable table.
bool ideal_equal(const BorderPrebasis& A, const BorderPrebasis& B);

// The sub-prebasis marked by the corner monomials: (marker, generator) pairs.
std::vector<std::pair<Expv, WeylOp>> corner_subset(const BorderPrebasis& B);

}  // namespace weylbb
