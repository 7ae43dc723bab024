#include "weylbb/vartable.hpp"

#include <cctype>
#include <set>

namespace weylbb {

namespace {

bool valid_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

VarTable::VarTable(std::vector<std::string> deriv_vars, std::vector<std::string> params,
                   std::vector<std::string> deriv_tokens)
    : nderiv_(deriv_vars.size()) {
  if (deriv_vars.empty()) throw Error("variable table needs at least one derivation variable");
  if (!deriv_tokens.empty() && deriv_tokens.size() != deriv_vars.size())
    throw Error("derivation token list must match derivation variable list");
  names_ = std::move(deriv_vars);
  for (auto& p : params) names_.push_back(std::move(p));
  if (deriv_tokens.empty()) {
    for (std::size_t i = 0; i < nderiv_; ++i) dtokens_.push_back("d" + std::to_string(i + 1));
  } else {
    dtokens_ = std::move(deriv_tokens);
  }
  std::set<std::string> seen;
  auto claim = [&](const std::string& s, const char* what) {
    if (!valid_ident(s)) throw Error(std::string("invalid ") + what + " name: '" + s + "'");
    if (!seen.insert(s).second)
      throw Error(std::string("name '") + s + "' declared twice in variable table");
  };
  for (std::size_t i = 0; i < names_.size(); ++i)
    claim(names_[i], i < nderiv_ ? "variable" : "parameter");
  for (const auto& t : dtokens_) claim(t, "derivation token");
}

std::optional<std::size_t> VarTable::find(const std::string& s) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == s) return i;
  return std::nullopt;
}

std::optional<std::size_t> VarTable::find_dtoken(const std::string& s) const {
  for (std::size_t i = 0; i < dtokens_.size(); ++i)
    if (dtokens_[i] == s) return i;
  return std::nullopt;
}

std::shared_ptr<const VarTable> VarTable::with_params(const std::vector<std::string>& extra) const {
  std::vector<std::string> dv(names_.begin(), names_.begin() + nderiv_);
  std::vector<std::string> pv(names_.begin() + nderiv_, names_.end());
  for (const auto& e : extra) pv.push_back(e);
  return std::make_shared<VarTable>(std::move(dv), std::move(pv), dtokens_);
}

}  // namespace weylbb
