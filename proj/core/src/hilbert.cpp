#include "weylbb/hilbert.hpp"

#include "weylbb/error.hpp"

namespace weylbb {

GenericPrebasis generic_prebasis(const OrderIdeal& oi) {
  const VarTableP& base = oi.table();
  std::vector<Expv> border = oi.border();
  std::vector<std::vector<std::string>> names(border.size(),
                                              std::vector<std::string>(oi.size()));
  std::vector<std::string> fresh;
  for (std::size_t j = 0; j < border.size(); ++j) {
    for (std::size_t i = 0; i < oi.size(); ++i) {
      names[j][i] = "c" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      fresh.push_back(names[j][i]);
    }
  }
  VarTableP ext = base->with_params(fresh);
  OrderIdeal oi_ext(ext, oi.elems());
  std::vector<std::vector<RatFun>> coeffs(border.size(),
                                          std::vector<RatFun>(oi.size(), RatFun::zero(ext)));
  for (std::size_t j = 0; j < border.size(); ++j)
    for (std::size_t i = 0; i < oi.size(); ++i)
      coeffs[j][i] = RatFun::variable(ext, *ext->find(names[j][i]));
  BorderPrebasis G =
      BorderPrebasis::from_coeffs(std::move(oi_ext), RingKind::Commutative, std::move(coeffs));
  return GenericPrebasis{std::move(ext), std::move(G), std::move(names)};
}

SymbolicChart chart_ideal(const OrderIdeal& oi) {
  GenericPrebasis gp = generic_prebasis(oi);
  std::vector<Matrix> M = mult_matrices(gp.G);
  std::vector<Poly> rel;
  for (std::size_t i = 0; i < M.size(); ++i) {
    for (std::size_t j = i + 1; j < M.size(); ++j) {
      Matrix com = Matrix::commutator(M[i], M[j]);
      for (std::size_t r = 0; r < com.rows(); ++r)
        for (std::size_t c = 0; c < com.cols(); ++c) rel.push_back(com.at(r, c).as_poly());
    }
  }
  return SymbolicChart{std::move(gp), std::move(rel)};
}

CommutingVariety commuting_variety_gens(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw Error("commuting variety needs n >= 1 matrices of size m >= 1");
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t r = 1; r <= m; ++r)
      for (std::size_t c = 1; c <= m; ++c)
        vars.push_back("m" + std::to_string(i) + "_" + std::to_string(r) + "_" + std::to_string(c));
  VarTableP tab = make_table(std::move(vars));
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix M(tab, m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c)
        M.at(r, c) = RatFun::variable(tab, i * m * m + r * m + c);
    mats.push_back(std::move(M));
  }
  std::vector<Poly> rel;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix com = Matrix::commutator(mats[i], mats[j]);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) rel.push_back(com.at(r, c).as_poly());
    }
  }
  return CommutingVariety{std::move(tab), std::move(mats), std::move(rel)};
}

}  // namespace weylbb
