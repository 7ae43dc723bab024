#include "weylbb/session.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "weylbb/division.hpp"
#include "weylbb/error.hpp"

namespace weylbb {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

struct Piece {
  std::string text;  // trimmed
  int col;           // 1-based column of the first non-space character
};

// Split s[from..] on `delim`, keeping 1-based column positions for messages.
std::vector<Piece> split_pieces(const std::string& s, std::size_t from, char delim) {
  std::vector<Piece> out;
  std::size_t start = from;
  for (std::size_t k = from; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == delim) {
      std::size_t b = start;
      while (b < k && (s[b] == ' ' || s[b] == '\t')) ++b;
      std::size_t e = k;
      while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
      out.push_back({s.substr(b, e - b), static_cast<int>(b + 1)});
      start = k + 1;
    }
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw SessionError("line " + std::to_string(line) + ": " + msg);
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

// A basis / order-ideal entry: a single operator monomial with coefficient 1
// (written either with derivation tokens or, commutatively, with the ring
// variables). Returns its exponent vector over the derivation slots.
Expv expv_of_monomial(const WeylOp& w, const VarTableP& tab, int line) {
  if (w.nterms() != 1) fail(line, "entry is not a single monomial");
  const auto& [e, c] = w.terms()[0];
  if (totdeg(e) > 0) {
    if (!c.is_one()) fail(line, "monomial entry must have coefficient 1");
    return e;
  }
  if (!c.is_poly()) fail(line, "entry is not a monomial");
  Poly p = c.as_poly();
  if (p.terms().size() != 1) fail(line, "entry is not a single monomial");
  const auto& [pe, pc] = p.terms()[0];
  if (pc != 1) fail(line, "monomial entry must have coefficient 1");
  Expv out(tab->nderiv(), 0);
  for (std::size_t i = 0; i < pe.size(); ++i) {
    if (i < tab->nderiv())
      out[i] = pe[i];
    else if (pe[i] != 0)
      fail(line, "monomial entry must not involve parameters");
  }
  return out;
}

struct Line {
  int no;
  std::string s;  // comment-stripped, not trimmed
};

struct Loader {
  std::vector<Line> lines;
  std::size_t i = 0;
  Session s;
  std::map<std::string, std::string> used;  // name -> kind

  void claim(const std::string& name, const std::string& kind, int line) {
    if (!valid_name(name)) fail(line, "invalid name '" + name + "'");
    auto [it, fresh] = used.emplace(name, kind);
    if (!fresh)
      fail(line, "name '" + name + "' already declared as " + it->second);
  }

  bool blank(std::size_t k) const { return trim(lines[k].s).empty(); }
  void skip_blanks() {
    while (i < lines.size() && blank(i)) ++i;
  }

  // Split "head: rest" at the first colon.
  struct Stmt {
    std::vector<std::string> head;
    std::string rest;
    int rest_col = 1;  // 1-based column where rest begins
    int line = 0;
  };
  Stmt stmt_at(std::size_t k) const {
    const std::string& raw = lines[k].s;
    std::size_t colon = raw.find(':');
    if (colon == std::string::npos)
      fail(lines[k].no, "expected a statement of the form 'keyword ...: ...'");
    Stmt st;
    st.head = split_ws(raw.substr(0, colon));
    st.rest = raw.substr(colon + 1);
    st.rest_col = static_cast<int>(colon) + 2;
    st.line = lines[k].no;
    if (st.head.empty()) fail(st.line, "missing keyword before ':'");
    return st;
  }

  void parse_header() {
    skip_blanks();
    if (i >= lines.size()) throw SessionError("empty session: missing 'vars:' line");
    Stmt st = stmt_at(i);
    if (st.head[0] != "vars")
      fail(st.line, "session must start with a 'vars:' line");
    std::vector<std::string> vars = split_ws(st.rest);
    if (vars.empty()) fail(st.line, "'vars:' lists no variables");
    ++i;
    std::vector<std::string> dvs, pars;
    bool saw_d = false, saw_p = false;
    while (true) {
      skip_blanks();
      if (i >= lines.size()) break;
      Stmt h = stmt_at(i);
      if (h.head[0] == "dvars") {
        if (saw_d) fail(h.line, "duplicate 'dvars:' line");
        saw_d = true;
        dvs = split_ws(h.rest);
        ++i;
      } else if (h.head[0] == "params") {
        if (saw_p) fail(h.line, "duplicate 'params:' line");
        saw_p = true;
        pars = split_ws(h.rest);
        ++i;
      } else if (h.head[0] == "vars") {
        fail(h.line, "duplicate 'vars:' line");
      } else {
        break;
      }
    }
    try {
      s.tab = make_table(vars, pars, dvs);
    } catch (const Error& e) {
      throw SessionError(std::string("session header: ") + e.what());
    }
  }

  Matrix read_matrix_rows(int head_line) {
    std::vector<std::vector<RatFun>> rows;
    while (i < lines.size() && !blank(i) &&
           lines[i].s.find(':') == std::string::npos) {
      std::vector<RatFun> row;
      for (const Piece& p : split_pieces(lines[i].s, 0, '|')) {
        if (p.text.empty()) fail(lines[i].no, "empty matrix entry");
        row.push_back(parse_scalar(p.text, s.tab, lines[i].no, p.col));
      }
      if (!rows.empty() && row.size() != rows[0].size())
        fail(lines[i].no, "matrix rows have different lengths");
      rows.push_back(std::move(row));
      ++i;
    }
    if (rows.empty()) fail(head_line, "matrix has no rows");
    Matrix m(s.tab, rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
  }

  void require_empty_rest(const Stmt& st) {
    if (!trim(st.rest).empty())
      fail(st.line, "unexpected text after ':'");
  }

  void read_connection(const std::string& name, int head_line,
                       const Stmt* basis_stmt) {
    Stmt bst;
    if (basis_stmt) {
      bst = *basis_stmt;
    } else {
      skip_blanks();
      if (i >= lines.size()) fail(head_line, "connection is missing its 'basis:' line");
      bst = stmt_at(i);
      if (bst.head[0] != "basis" || bst.head.size() != 1)
        fail(bst.line, "connection must continue with a 'basis:' line");
      ++i;
    }
    std::vector<Piece> pieces = split_pieces(bst.rest, 0, ',');
    if (pieces.size() == 1 && pieces[0].text.empty())
      fail(bst.line, "'basis:' lists no entries");
    std::vector<Expv> mexps;
    bool all_mono = true;
    for (const Piece& p : pieces) {
      if (p.text.empty()) fail(bst.line, "empty basis entry");
      try {
        WeylOp w = parse_expr(p.text, s.tab, bst.line, bst.rest_col + p.col - 1);
        mexps.push_back(expv_of_monomial(w, s.tab, bst.line));
      } catch (const Error&) {
        all_mono = false;
        break;
      }
    }
    ConnectionSystem C;
    if (all_mono) {
      if (!OrderIdeal::is_order_ideal(s.tab->nderiv(), mexps))
        fail(bst.line,
             "basis entries are operator monomials but not downward closed; "
             "complete the set or use free-text labels");
      OrderIdeal oi(s.tab, mexps);
      if (oi.elems() != mexps) {
        std::string want;
        for (std::size_t k = 0; k < oi.elems().size(); ++k)
          want += (k ? ", " : "") + print_opmono(oi.elems()[k], s.tab);
        fail(bst.line, "basis monomials must be listed in the canonical order: " + want);
      }
      C.basis_oi = std::move(oi);
    } else {
      for (const Piece& p : pieces) {
        if (p.text.empty()) fail(bst.line, "empty basis entry");
        C.basis_labels.push_back(p.text);
      }
    }
    std::size_t n = s.tab->nderiv();
    for (std::size_t k = 1; k <= n; ++k) {
      skip_blanks();
      if (i >= lines.size())
        fail(head_line, "connection is missing 'matrix " + std::to_string(k) + ":'");
      Stmt mst = stmt_at(i);
      if (mst.head.size() != 2 || mst.head[0] != "matrix" ||
          mst.head[1] != std::to_string(k))
        fail(mst.line, "expected 'matrix " + std::to_string(k) + ":' here");
      require_empty_rest(mst);
      ++i;
      skip_blanks();
      C.mats.push_back(read_matrix_rows(mst.line));
    }
    try {
      C.check_shape();
    } catch (const Error& e) {
      fail(head_line, e.what());
    }
    s.connections.emplace_back(name, std::move(C));
  }

  void run() {
    parse_header();
    while (true) {
      skip_blanks();
      if (i >= lines.size()) break;
      Stmt st = stmt_at(i);
      const std::string& kw = st.head[0];
      if (kw == "vars" || kw == "dvars" || kw == "params") {
        fail(st.line, "'" + kw + ":' must appear before the first object");
      } else if (kw == "op") {
        if (st.head.size() != 2) fail(st.line, "expected 'op NAME: EXPR'");
        claim(st.head[1], "op", st.line);
        ++i;
        s.ops.emplace_back(st.head[1],
                           parse_expr(st.rest, s.tab, st.line, st.rest_col));
      } else if (kw == "orderideal") {
        if (st.head.size() != 2) fail(st.line, "expected 'orderideal NAME: M1, M2, ...'");
        claim(st.head[1], "orderideal", st.line);
        ++i;
        std::vector<Expv> exps;
        for (const Piece& p : split_pieces(st.rest, 0, ',')) {
          if (p.text.empty()) fail(st.line, "empty order-ideal entry");
          WeylOp w = parse_expr(p.text, s.tab, st.line, st.rest_col + p.col - 1);
          exps.push_back(expv_of_monomial(w, s.tab, st.line));
        }
        try {
          s.orderideals.emplace_back(st.head[1], OrderIdeal(s.tab, std::move(exps)));
        } catch (const Error& e) {
          fail(st.line, e.what());
        }
      } else if (kw == "prebasis") {
        if (st.head.size() < 2 || st.head.size() > 3)
          fail(st.line, "expected 'prebasis NAME [weyl|comm]: OIDEAL; OP, OP, ...'");
        claim(st.head[1], "prebasis", st.line);
        ++i;
        std::vector<Piece> parts = split_pieces(st.rest, 0, ';');
        if (parts.size() != 2)
          fail(st.line, "expected 'OIDEAL; OP, OP, ...' after ':'");
        const OrderIdeal* oi = nullptr;
        for (const auto& [nm, o] : s.orderideals)
          if (nm == parts[0].text) oi = &o;
        if (!oi) fail(st.line, "unknown order ideal '" + parts[0].text + "'");
        std::vector<WeylOp> ops;
        std::vector<std::string> op_names;
        if (!parts[1].text.empty()) {
          for (const Piece& p : split_pieces(parts[1].text, 0, ',')) {
            const WeylOp* w = nullptr;
            for (const auto& [nm, o] : s.ops)
              if (nm == p.text) w = &o;
            if (!w) fail(st.line, "unknown op '" + p.text + "'");
            ops.push_back(*w);
            op_names.push_back(p.text);
          }
        }
        if (ops.empty()) fail(st.line, "prebasis lists no generators");
        bool any_deriv = false;
        for (const WeylOp& w : ops)
          if (w.degree() > 0) any_deriv = true;
        RingKind ring = any_deriv ? RingKind::Weyl : RingKind::Commutative;
        if (st.head.size() == 3) {
          if (st.head[2] == "weyl")
            ring = RingKind::Weyl;
          else if (st.head[2] == "comm")
            ring = RingKind::Commutative;
          else
            fail(st.line, "ring must be 'weyl' or 'comm'");
        }
        if (ring == RingKind::Commutative) {
          std::vector<WeylOp> gops;
          for (const WeylOp& w : ops) {
            if (w.degree() > 0)
              fail(st.line, "commutative prebasis generator contains a derivation");
            gops.push_back(WeylOp::group_comm(w.ungroup()));
          }
          ops = std::move(gops);
        }
        try {
          s.prebases.emplace_back(st.head[1],
                                  BorderPrebasis::from_ops(*oi, ring, ops));
        } catch (const Error& e) {
          fail(st.line, e.what());
        }
        s.prebasis_srcs.push_back({parts[0].text, std::move(op_names)});
      } else if (kw == "matrix") {
        if (st.head.size() != 2) fail(st.line, "expected 'matrix NAME:'");
        claim(st.head[1], "matrix", st.line);
        require_empty_rest(st);
        ++i;
        skip_blanks();
        s.matrices.emplace_back(st.head[1], read_matrix_rows(st.line));
      } else if (kw == "connection") {
        if (st.head.size() != 2) fail(st.line, "expected 'connection NAME:'");
        claim(st.head[1], "connection", st.line);
        require_empty_rest(st);
        ++i;
        read_connection(st.head[1], st.line, nullptr);
      } else if (kw == "basis") {
        if (st.head.size() != 1) fail(st.line, "expected 'basis: L1, L2, ...'");
        claim("main", "connection", st.line);
        ++i;
        read_connection("main", st.line, &st);
      } else {
        fail(st.line, "unknown keyword '" + kw + "'");
      }
    }
  }
};

}  // namespace

Session load_session(const std::string& text) {
  Loader ld;
  std::istringstream is(text);
  std::string raw;
  int no = 0;
  while (std::getline(is, raw)) {
    ++no;
    std::size_t h = raw.find('#');
    if (h != std::string::npos) raw.erase(h);
    ld.lines.push_back({no, raw});
  }
  ld.run();
  return std::move(ld.s);
}

Session load_session_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SessionError("cannot open session file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_session(ss.str());
}

namespace {
template <class V>
const typename V::value_type::second_type& find_named(const V& v, const std::string& name,
                                                      const char* kind) {
  for (const auto& [nm, obj] : v)
    if (nm == name) return obj;
  throw SessionError(std::string("no ") + kind + " named '" + name + "'");
}
}  // namespace

const WeylOp& Session::op(const std::string& name) const {
  return find_named(ops, name, "op");
}
const OrderIdeal& Session::orderideal(const std::string& name) const {
  return find_named(orderideals, name, "order ideal");
}
const BorderPrebasis& Session::prebasis(const std::string& name) const {
  return find_named(prebases, name, "prebasis");
}
BorderPrebasis& Session::prebasis(const std::string& name) {
  return const_cast<BorderPrebasis&>(find_named(prebases, name, "prebasis"));
}
const Matrix& Session::matrix(const std::string& name) const {
  return find_named(matrices, name, "matrix");
}
const ConnectionSystem& Session::connection(const std::string& name) const {
  return find_named(connections, name, "connection");
}
ConnectionSystem& Session::connection(const std::string& name) {
  return const_cast<ConnectionSystem&>(find_named(connections, name, "connection"));
}

std::string print_orderideal_stmt(const std::string& name, const OrderIdeal& oi) {
  std::string out = "orderideal " + name + ":";
  for (std::size_t k = 0; k < oi.elems().size(); ++k)
    out += (k ? ", " : " ") + print_opmono(oi.elems()[k], oi.table());
  return out;
}

std::string print_op_stmt(const std::string& name, const WeylOp& w) {
  return "op " + name + ": " + print_op(w);
}

std::string print_matrix_rows(const Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += " | ";
      out += print_ratfun(m.at(r, c));
    }
    out += "\n";
  }
  return out;
}

std::string print_matrix_stmt(const std::string& name, const Matrix& m) {
  return "matrix " + name + ":\n" + print_matrix_rows(m);
}

std::vector<std::string> connection_basis_strings(const ConnectionSystem& c) {
  std::vector<std::string> out;
  if (c.basis_oi) {
    for (const Expv& e : c.basis_oi->elems())
      out.push_back(print_opmono(e, c.basis_oi->table()));
  } else {
    out = c.basis_labels;
  }
  return out;
}

std::string print_connection_block(const ConnectionSystem& c) {
  std::string out = "basis:";
  std::vector<std::string> bs = connection_basis_strings(c);
  for (std::size_t k = 0; k < bs.size(); ++k) out += (k ? ", " : " ") + bs[k];
  out += "\n";
  for (std::size_t k = 0; k < c.mats.size(); ++k) {
    out += "matrix " + std::to_string(k + 1) + ":\n";
    out += print_matrix_rows(c.mats[k]);
  }
  return out;
}

std::string print_session(const Session& s) {
  if (s.prebasis_srcs.size() != s.prebases.size())
    throw SessionError("prebasis source names not aligned with prebases");
  std::string out = "vars:";
  for (std::size_t k = 0; k < s.tab->nderiv(); ++k) out += " " + s.tab->name(k);
  out += "\ndvars:";
  for (std::size_t k = 0; k < s.tab->nderiv(); ++k) out += " " + s.tab->dtoken(k);
  out += "\n";
  if (s.tab->arity() > s.tab->nderiv()) {
    out += "params:";
    for (std::size_t k = s.tab->nderiv(); k < s.tab->arity(); ++k)
      out += " " + s.tab->name(k);
    out += "\n";
  }
  for (const auto& [nm, oi] : s.orderideals)
    out += "\n" + print_orderideal_stmt(nm, oi) + "\n";
  for (const auto& [nm, w] : s.ops) out += "\n" + print_op_stmt(nm, w) + "\n";
  for (const auto& [nm, m] : s.matrices) out += "\n" + print_matrix_stmt(nm, m);
  for (std::size_t k = 0; k < s.prebases.size(); ++k) {
    const auto& [nm, b] = s.prebases[k];
    const Session::PrebasisSrc& src = s.prebasis_srcs[k];
    out += "\nprebasis " + nm + (b.ring == RingKind::Weyl ? " weyl: " : " comm: ") +
           src.oi_name + ";";
    for (std::size_t j = 0; j < src.op_names.size(); ++j)
      out += (j ? ", " : " ") + src.op_names[j];
    out += "\n";
  }
  for (const auto& [nm, c] : s.connections)
    out += "\nconnection " + nm + ":\n" + print_connection_block(c);
  return out;
}

std::string session_json(const Session& s) {
  using nlohmann::json;
  json j;
  j["vars"] = json::array();
  j["dvars"] = json::array();
  j["params"] = json::array();
  for (std::size_t k = 0; k < s.tab->nderiv(); ++k) {
    j["vars"].push_back(s.tab->name(k));
    j["dvars"].push_back(s.tab->dtoken(k));
  }
  for (std::size_t k = s.tab->nderiv(); k < s.tab->arity(); ++k)
    j["params"].push_back(s.tab->name(k));

  j["ops"] = json::array();
  for (const auto& [nm, w] : s.ops)
    j["ops"].push_back({{"name", nm}, {"expr", print_op(w)}});

  j["orderideals"] = json::array();
  for (const auto& [nm, oi] : s.orderideals)
    j["orderideals"].push_back({{"name", nm}, {"monomials", oi.elems()}});

  j["prebases"] = json::array();
  for (const auto& [nm, b] : s.prebases) {
    json coeffs = json::array();
    for (const auto& row : b.coeffs) {
      json r = json::array();
      for (const RatFun& c : row) r.push_back(print_ratfun(c));
      coeffs.push_back(std::move(r));
    }
    j["prebases"].push_back({{"name", nm},
                             {"ring", b.ring == RingKind::Weyl ? "weyl" : "comm"},
                             {"orderideal", b.oi.elems()},
                             {"border", b.border},
                             {"coeffs", std::move(coeffs)},
                             {"verified", b.verified}});
  }

  j["matrices"] = json::array();
  for (const auto& [nm, m] : s.matrices) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(print_ratfun(m.at(r, c)));
      rows.push_back(std::move(row));
    }
    j["matrices"].push_back(
        {{"name", nm}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}});
  }

  j["connections"] = json::array();
  for (const auto& [nm, c] : s.connections) {
    json mats = json::array();
    for (const Matrix& m : c.mats) {
      json rows = json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t cc = 0; cc < m.cols(); ++cc)
          row.push_back(print_ratfun(m.at(r, cc)));
        rows.push_back(std::move(row));
      }
      mats.push_back(std::move(rows));
    }
    json jc = {{"name", nm},
               {"basis_labels", connection_basis_strings(c)},
               {"mats", std::move(mats)},
               {"verified_integrable", c.verified_integrable}};
    if (c.basis_oi)
      jc["basis_monomials"] = c.basis_oi->elems();
    else
      jc["basis_monomials"] = nullptr;
    j["connections"].push_back(std::move(jc));
  }
  return j.dump(2);
}

}  // namespace weylbb
