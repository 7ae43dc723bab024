#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weylbb/error.hpp"

namespace weylbb {

// Shared declaration of a coefficient field C(x_1..x_n; p_1..p_k).
//
// Derivation variables come first (indices 0..n-1) and are the only ones the
// derivations act on; parameters follow (indices n..n+k-1) and behave as
// constants. Each derivation variable also owns an operator token (default
// d1..dn) used by the expression grammar for the corresponding derivation.
// All names and tokens share one namespace and must be distinct.
class VarTable {
 public:
  VarTable(std::vector<std::string> deriv_vars,
           std::vector<std::string> params = {},
           std::vector<std::string> deriv_tokens = {});

  std::size_t nderiv() const { return nderiv_; }
  std::size_t nparams() const { return names_.size() - nderiv_; }
  std::size_t arity() const { return names_.size(); }

  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::string& dtoken(std::size_t i) const { return dtokens_.at(i); }
  bool is_param(std::size_t i) const { return i >= nderiv_; }

  // Variable index by name, or the derivation index by operator token.
  std::optional<std::size_t> find(const std::string& s) const;
  std::optional<std::size_t> find_dtoken(const std::string& s) const;

  bool same(const VarTable& o) const {
    return names_ == o.names_ && nderiv_ == o.nderiv_ && dtokens_ == o.dtokens_;
  }

  // Extended copy with additional parameters appended (used for symbolic
  // coefficient charts). Name clashes raise Error.
  std::shared_ptr<const VarTable> with_params(const std::vector<std::string>& extra) const;

 private:
  std::vector<std::string> names_;    // derivation vars then params
  std::vector<std::string> dtokens_;  // one per derivation var
  std::size_t nderiv_;
};

using VarTableP = std::shared_ptr<const VarTable>;

inline VarTableP make_table(std::vector<std::string> deriv_vars,
                            std::vector<std::string> params = {},
                            std::vector<std::string> deriv_tokens = {}) {
  return std::make_shared<VarTable>(std::move(deriv_vars), std::move(params),
                                    std::move(deriv_tokens));
}

inline void check_same_table(const VarTableP& a, const VarTableP& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same(*b)) throw ArityMismatch("values built over different variable tables");
}

}  // namespace weylbb
