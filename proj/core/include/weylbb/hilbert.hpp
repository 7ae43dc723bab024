#pragma once

#include "weylbb/basis.hpp"

namespace weylbb {

// Commutative prebasis over an extended parameter table, with one fresh
// parameter c{i}_{j} per (order ideal position i, border position j) pair:
//   g_j = b_j - sum_i c{i}_{j} t_i.
struct GenericPrebasis {
  VarTableP extended;                             // base table + fresh parameters
  BorderPrebasis G;                               // over the extended table
  std::vector<std::vector<std::string>> names;    // names[j][i], border-major
};

GenericPrebasis generic_prebasis(const OrderIdeal& oi);

// The generic prebasis together with the polynomial relations cutting out its
// coefficient chart: all entries of every [M_i, M_j], i < j, row-major.
struct SymbolicChart {
  GenericPrebasis generic;
  std::vector<Poly> relations;  // polynomials in the fresh parameters
};

SymbolicChart chart_ideal(const OrderIdeal& oi);

// Generators of the pairwise-commutator locus of n generic m x m matrices:
// a table whose variables are the matrix entries m{i}_{r}_{c}, and all entries
// of every pairwise commutator (row-major, pairs in lexicographic order).
struct CommutingVariety {
  VarTableP tab;
  std::vector<Matrix> generic_mats;
  std::vector<Poly> relations;
};

CommutingVariety commuting_variety_gens(std::size_t n, std::size_t m);

}  // namespace weylbb
