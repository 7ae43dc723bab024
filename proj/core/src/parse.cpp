#include "weylbb/parse.hpp"

#include <cctype>

#include "weylbb/error.hpp"

namespace weylbb {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  Lexer(const std::string& src, int line0, int col0) : src_(src), line_(line0), col_(col0) {}

  Token next() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) advance();
    if (pos_ >= src_.size()) return {Tok::End, "", line_, col_};
    int l = line_, c = col_;
    char ch = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        num += src_[pos_];
        advance();
      }
      return {Tok::Number, num, l, c};
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string id;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        id += src_[pos_];
        advance();
      }
      return {Tok::Ident, id, l, c};
    }
    advance();
    switch (ch) {
      case '+': return {Tok::Plus, "+", l, c};
      case '-': return {Tok::Minus, "-", l, c};
      case '*': return {Tok::Star, "*", l, c};
      case '/': return {Tok::Slash, "/", l, c};
      case '^': return {Tok::Caret, "^", l, c};
      case '(': return {Tok::LParen, "(", l, c};
      case ')': return {Tok::RParen, ")", l, c};
      default: break;
    }
    throw SyntaxError(std::string("unexpected character '") + ch + "'", l, c);
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  const std::string& src_;
  std::size_t pos_ = 0;
  int line_, col_;
};

class Parser {
 public:
  Parser(const std::string& src, VarTableP tab, int line0, int col0)
      : lex_(src, line0, col0), tab_(std::move(tab)) {
    cur_ = lex_.next();
  }

  WeylOp parse() {
    WeylOp v = expr();
    if (cur_.kind != Tok::End)
      throw SyntaxError("unexpected '" + cur_.text + "' after expression", cur_.line, cur_.col);
    return v;
  }

 private:
  void bump() { cur_ = lex_.next(); }

  WeylOp expr() {
    WeylOp v = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool minus = cur_.kind == Tok::Minus;
      bump();
      WeylOp r = term();
      v = minus ? v - r : v + r;
    }
    return v;
  }

  WeylOp term() {
    WeylOp v = factor();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      bool div = cur_.kind == Tok::Slash;
      int l = cur_.line, c = cur_.col;
      bump();
      WeylOp r = factor();
      if (div) {
        if (r.is_zero()) throw DivisionByZero("division by zero");
        if (r.degree() > 0)
          throw SyntaxError("division by an expression containing a derivation", l, c);
        v = v.scale(r.coeff(Expv(tab_->nderiv(), 0)).inverse());
      } else {
        v = WeylOp::mul(v, r, RingKind::Weyl);
      }
    }
    return v;
  }

  WeylOp factor() {
    if (cur_.kind == Tok::Plus) {
      bump();
      return factor();
    }
    if (cur_.kind == Tok::Minus) {
      bump();
      return -factor();
    }
    return power();
  }

  WeylOp power() {
    WeylOp v = atom();
    while (cur_.kind == Tok::Caret) {
      bump();
      if (cur_.kind != Tok::Number)
        throw SyntaxError("exponent must be a nonnegative integer literal", cur_.line, cur_.col);
      unsigned long k = std::stoul(cur_.text);
      bump();
      v = v.pow(static_cast<unsigned>(k), RingKind::Weyl);
    }
    return v;
  }

  WeylOp atom() {
    if (cur_.kind == Tok::Number) {
      Rat q(cur_.text);
      q.canonicalize();
      bump();
      return WeylOp::from_coeff(RatFun::constant(tab_, q));
    }
    if (cur_.kind == Tok::Ident) {
      std::string name = cur_.text;
      int l = cur_.line, c = cur_.col;
      bump();
      if (auto dv = tab_->find_dtoken(name)) return WeylOp::dvar(tab_, *dv);
      if (auto v = tab_->find(name)) return WeylOp::from_coeff(RatFun::variable(tab_, *v));
      throw UnknownIdentifier("unknown identifier '" + name + "'", l, c);
    }
    if (cur_.kind == Tok::LParen) {
      bump();
      WeylOp v = expr();
      if (cur_.kind != Tok::RParen) throw SyntaxError("expected ')'", cur_.line, cur_.col);
      bump();
      return v;
    }
    throw SyntaxError("expected a number, identifier, or '('", cur_.line, cur_.col);
  }

  Lexer lex_;
  VarTableP tab_;
  Token cur_;
};

}  // namespace

WeylOp parse_expr(const std::string& src, const VarTableP& tab, int line0, int col0) {
  return Parser(src, tab, line0, col0).parse();
}

RatFun parse_scalar(const std::string& src, const VarTableP& tab, int line0, int col0) {
  WeylOp v = parse_expr(src, tab, line0, col0);
  if (v.degree() > 0)
    throw SyntaxError("expected a derivation-free expression", line0, col0);
  return v.is_zero() ? RatFun::zero(tab) : v.coeff(Expv(tab->nderiv(), 0));
}

// ---- printing ----------------------------------------------------------

std::string print_rat(const Rat& q) { return q.get_str(); }

namespace {

// One monomial with its (positive) coefficient, e.g. "3/2*x1^2*x2".
std::string mono_str(const Expv& e, const Rat& coeff, const VarTable& tab, bool op_tokens) {
  std::string s;
  bool unit = coeff == 1;
  if (!unit || totdeg(e) == 0) s = coeff.get_str();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += op_tokens ? tab.dtoken(i) : tab.name(i);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

std::string poly_str_signed(const Poly& p, bool lead_sign_out, bool* neg_lead) {
  // terms descending; if lead_sign_out, the leading sign is returned via
  // neg_lead and the string holds the magnitude (the negated polynomial when
  // that sign is negative).
  const auto& ts = p.terms();
  std::string s;
  bool flip = false;
  for (std::size_t k = ts.size(); k > 0; --k) {
    const auto& [e, c] = ts[k - 1];
    bool first = k == ts.size();
    bool neg = sgn(c) < 0;
    if (first && lead_sign_out) {
      *neg_lead = neg;
      flip = neg;
    }
    if (flip) neg = !neg;
    Rat mag = (sgn(c) < 0) ? Rat(-c) : c;
    if (first) {
      if (neg && !lead_sign_out) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    s += mono_str(e, mag, *p.table(), false);
  }
  return s;
}

bool den_needs_parens(const Poly& den) {
  if (den.nterms() != 1) return true;
  const auto& [e, c] = den.terms()[0];
  if (totdeg(e) == 0) return false;  // plain integer
  if (c != 1) return true;           // e.g. 2*x
  std::size_t nvars = 0;
  for (unsigned x : e)
    if (x) ++nvars;
  return nvars > 1;  // x^2 fine, x*y not
}

// Magnitude string of f (suitable as a '*'-factor) plus its sign.
std::string ratfun_factor(const RatFun& f, bool* negative) {
  bool neg = false;
  std::string num = poly_str_signed(f.num(), true, &neg);
  *negative = neg;
  if (f.is_poly()) {
    if (f.num().nterms() > 1) return "(" + num + ")";
    return num;
  }
  std::string ns = f.num().nterms() > 1 ? "(" + num + ")" : num;
  std::string ds = print_poly(f.den());
  if (den_needs_parens(f.den())) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

}  // namespace

std::string print_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  return poly_str_signed(p, false, nullptr);
}

std::string print_ratfun(const RatFun& f) {
  if (f.is_zero()) return "0";
  bool neg = false;
  std::string s = ratfun_factor(f, &neg);
  return neg ? "-" + s : s;
}

std::string print_opmono(const Expv& e, const VarTableP& tab) {
  if (totdeg(e) == 0) return "1";
  return mono_str(e, Rat(1), *tab, true);
}

std::string print_op(const WeylOp& w) {
  if (w.is_zero()) return "0";
  const auto& ts = w.terms();
  std::string s;
  for (std::size_t k = ts.size(); k > 0; --k) {
    const auto& [e, c] = ts[k - 1];
    bool first = k == ts.size();
    bool neg = false;
    std::string factor;
    if (totdeg(e) == 0) {
      factor = ratfun_factor(c, &neg);
    } else if (c.is_one()) {
      factor = print_opmono(e, w.table());
    } else if ((-c).is_one()) {
      neg = true;
      factor = print_opmono(e, w.table());
    } else {
      factor = ratfun_factor(c, &neg) + "*" + print_opmono(e, w.table());
    }
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    s += factor;
  }
  return s;
}

std::string print_comm(const WeylOp& w) { return print_ratfun(w.ungroup()); }

}  // namespace weylbb
