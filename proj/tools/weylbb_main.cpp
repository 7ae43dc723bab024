// weylbb: batch front end for the border-basis / connection library.
//
// Every subcommand reads named objects from a session file, runs one library
// operation, and prints the result to standard output, either as session
// syntax (the default) or as JSON (--format json). Exit status: 0 on success,
// 1 when a decision procedure answers "no" (a failed basis check, unequal
// ideals, a non-integrable system, ...), 2 on malformed input.

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylbb/session.hpp"

using namespace weylbb;
using njson = nlohmann::ordered_json;

namespace {

const char* grammar_help = R"(Expression grammar:
  expr   := term (('+'|'-') term)*
  term   := factor (('*'|'/') factor)*
  factor := ('+'|'-') factor | power
  power  := atom ('^' INT)*
  atom   := INT | IDENT | '(' expr ')'
INT is a nonnegative integer literal; '/' forms rationals and requires a
nonzero derivation-free divisor; IDENT is a declared variable, parameter, or
derivation token.

Session files (named objects over one variable header; '#' starts a comment):
  vars: x1 x2                 derivation variables (required, first)
  dvars: dx1 dx2              derivation tokens (optional; default d1..dn)
  params: s t                 parameters (optional)
  op NAME: EXPR
  orderideal NAME: M1, M2, ...
  prebasis NAME [weyl|comm]: ORDERIDEAL; OPNAME, OPNAME, ...
  matrix NAME:                rows follow, entries separated by '|'
  connection NAME:            followed by 'basis: L1, L2, ...' and one
  matrix K:                   block of rows per derivation variable
)";

// ---------------------------------------------------------------------------
// Output helpers. "session" format prints key: value lines and session
// documents; "json" prints one JSON object per run.

std::string scalar_str(const njson& v) {
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k)
      out += (k ? ", " : "") + scalar_str(v[k]);
    return out;
  }
  return v.dump();
}

void emit_scalars(const std::string& fmt,
                  const std::vector<std::pair<std::string, njson>>& kvs) {
  if (fmt == "json") {
    njson j;
    for (const auto& [k, v] : kvs) j[k] = v;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : kvs) std::cout << k << ": " << scalar_str(v) << "\n";
  }
}

void emit_doc(const std::string& fmt, const Session& out) {
  if (fmt == "json")
    std::cout << session_json(out) << "\n";
  else
    std::cout << print_session(out);
}

std::vector<std::string> split_labels(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  for (std::string& t : out) {
    std::size_t a = t.find_first_not_of(" \t");
    std::size_t b = t.find_last_not_of(" \t");
    t = (a == std::string::npos) ? std::string() : t.substr(a, b - a + 1);
  }
  return out;
}

njson mono_list(const std::vector<Expv>& ms, const VarTableP& tab) {
  njson a = njson::array();
  for (const Expv& e : ms) a.push_back(print_opmono(e, tab));
  return a;
}

// Ring element for division/membership in the prebasis ring: Weyl operators
// pass through; commutative elements must be derivation-free and are grouped.
WeylOp ring_element(const WeylOp& w, RingKind ring) {
  if (ring == RingKind::Weyl) return w;
  if (w.degree() > 0)
    throw Error("expression contains a derivation but the prebasis is commutative");
  return WeylOp::group_comm(w.ungroup());
}

std::string print_ring(const WeylOp& w, RingKind ring) {
  return ring == RingKind::Weyl ? print_op(w) : print_comm(w);
}

// Border markers print in the spelling of their ring: derivation tokens for
// operators, the ring variables commutatively.
std::string marker_str(const Expv& e, const VarTableP& tab, RingKind ring) {
  if (ring == RingKind::Weyl) return print_opmono(e, tab);
  return print_comm(WeylOp::dmono(tab, e));
}

// A failed integrability check prints the first offending entry, 1-based to
// match the session file's matrix labels.
void emit_witness(const std::string& fmt, const IntegrabilityWitness& w) {
  if (fmt == "json") {
    njson jw;
    jw["pair"] = njson::array({w.i + 1, w.j + 1});
    jw["entry"] = njson::array({w.row + 1, w.col + 1});
    jw["residual"] = w.residual ? njson(print_ratfun(*w.residual)) : njson(nullptr);
    njson j;
    j["integrable"] = false;
    j["witness"] = jw;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "integrable: false\n";
    std::cout << "witness: pair (" << w.i + 1 << ", " << w.j + 1 << "), entry (" << w.row + 1
              << ", " << w.col + 1 << ")";
    if (w.residual) std::cout << ", residual " << print_ratfun(*w.residual);
    std::cout << "\n";
  }
}

Session doc_of_matrices(const VarTableP& tab, const std::string& stem,
                        const std::vector<Matrix>& mats) {
  Session out;
  out.tab = tab;
  for (std::size_t k = 0; k < mats.size(); ++k)
    out.matrices.emplace_back(stem + std::to_string(k + 1), mats[k]);
  return out;
}

Session doc_of_connection(const VarTableP& tab, const std::string& name,
                          const ConnectionSystem& c) {
  Session out;
  out.tab = tab;
  out.connections.emplace_back(name, c);
  return out;
}

Session doc_of_prebasis(const std::string& oi_name, const std::string& name,
                        const BorderPrebasis& B) {
  Session out;
  out.tab = B.table();
  out.orderideals.emplace_back(oi_name, B.oi);
  Session::PrebasisSrc src{oi_name, {}};
  for (std::size_t j = 0; j < B.nelems(); ++j) {
    std::string gname = "g" + std::to_string(j + 1);
    WeylOp g = B.element(j);
    if (B.ring == RingKind::Commutative) g = WeylOp::from_coeff(g.ungroup());
    out.ops.emplace_back(gname, g);
    src.op_names.push_back(gname);
  }
  out.prebases.emplace_back(name, B);
  out.prebasis_srcs.push_back(std::move(src));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact border-basis and connection-matrix toolkit", "weylbb"};
  app.require_subcommand(1);
  app.footer(grammar_help);
  std::string fmt = "session";

  std::string sfile, oname, giname, hname, aname, mname, expr, pname, labels;
  unsigned kth = 1;
  std::size_t nmats = 0, msize = 0;

  auto add_common = [&](CLI::App* sub, bool needs_session) {
    sub->add_option("--format", fmt, "Output format")
        ->check(CLI::IsMember({"session", "json"}))
        ->capture_default_str();
    if (needs_session)
      sub->add_option("-s,--session", sfile, "Session file to read")->required();
    return sub;
  };

  CLI::App* c_border = add_common(app.add_subcommand("border", "k-th border of an order ideal"), true);
  c_border->add_option("-O,--orderideal", oname, "Order ideal name")->required();
  c_border->add_option("-k", kth, "Border index (0 = the order ideal itself)")->capture_default_str();

  CLI::App* c_corners = add_common(app.add_subcommand("corners", "Corner monomials of an order ideal"), true);
  c_corners->add_option("-O,--orderideal", oname, "Order ideal name")->required();

  CLI::App* c_index = add_common(app.add_subcommand("index", "Border index of an expression"), true);
  c_index->add_option("-O,--orderideal", oname, "Order ideal name")->required();
  c_index->add_option("-e,--expr", expr, "Expression to measure")->required();

  CLI::App* c_divide = add_common(app.add_subcommand("divide", "Border division by a prebasis"), true);
  c_divide->add_option("-G,--prebasis", giname, "Prebasis name")->required();
  c_divide->add_option("-e,--expr", expr, "Expression to divide")->required();

  CLI::App* c_mult = add_common(app.add_subcommand("multmatrices", "Formal multiplication matrices of a prebasis"), true);
  c_mult->add_option("-G,--prebasis", giname, "Prebasis name")->required();

  CLI::App* c_verify = add_common(app.add_subcommand("verify", "Border-basis check for a prebasis"), true);
  c_verify->add_option("-G,--prebasis", giname, "Prebasis name")->required();

  CLI::App* c_member = add_common(app.add_subcommand("member", "Ideal membership against a verified basis"), true);
  c_member->add_option("-G,--prebasis", giname, "Prebasis name")->required();
  c_member->add_option("-e,--expr", expr, "Expression to test")->required();

  CLI::App* c_ideq = add_common(app.add_subcommand("ideal-eq", "Equality of the ideals of two border bases"), true);
  c_ideq->add_option("-G,--first", giname, "First prebasis name")->required();
  c_ideq->add_option("-H,--second", hname, "Second prebasis name")->required();

  CLI::App* c_gauge = add_common(app.add_subcommand("gauge", "Gauge-transform a connection system"), true);
  c_gauge->add_option("-A,--connection", aname, "Connection system name")->required();
  c_gauge->add_option("-g,--matrix", mname, "Gauge matrix name")->required();
  c_gauge->add_option("-O,--orderideal", oname, "Order ideal naming the new basis");
  c_gauge->add_option("--basis", labels, "Comma-separated labels for the new basis");

  CLI::App* c_int = add_common(app.add_subcommand("check-int", "Integrability of a connection system"), true);
  c_int->add_option("-A,--connection", aname, "Connection system name")->required();

  CLI::App* c_fromc = add_common(app.add_subcommand("from-connection", "Cyclic annihilating ideal of an integrable system"), true);
  c_fromc->add_option("-A,--connection", aname, "Connection system name")->required();
  c_fromc->add_option("-O,--orderideal", oname, "Order ideal giving the basis monomials");

  CLI::App* c_topf = add_common(app.add_subcommand("to-pfaffian", "Connection matrices of a border basis"), true);
  c_topf->add_option("-G,--prebasis", giname, "Prebasis name")->required();

  CLI::App* c_eps = add_common(app.add_subcommand("eps-factor", "Factor a parameter out of a connection system"), true);
  c_eps->add_option("-A,--connection", aname, "Connection system name")->required();
  c_eps->add_option("-p,--param", pname, "Parameter to factor out")->required();

  CLI::App* c_closed = add_common(app.add_subcommand("closed", "Closedness of the connection one-form"), true);
  c_closed->add_option("-A,--connection", aname, "Connection system name")->required();

  CLI::App* c_chart = add_common(app.add_subcommand("chart", "Generic prebasis and chart relations of an order ideal"), true);
  c_chart->add_option("-O,--orderideal", oname, "Order ideal name")->required();

  CLI::App* c_comm = add_common(app.add_subcommand("commuting-gens", "Commutator relations of generic matrices"), false);
  c_comm->add_option("-n,--matrices", nmats, "Number of generic matrices")->required();
  c_comm->add_option("-m,--size", msize, "Matrix size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return 2;
  }

  try {
    if (app.got_subcommand(c_border)) {
      Session s = load_session_file(sfile);
      const OrderIdeal& oi = s.orderideal(oname);
      emit_scalars(fmt, {{"border", mono_list(oi.kth_border(kth), s.tab)}});
      return 0;
    }
    if (app.got_subcommand(c_corners)) {
      Session s = load_session_file(sfile);
      const OrderIdeal& oi = s.orderideal(oname);
      emit_scalars(fmt, {{"corners", mono_list(oi.corners(), s.tab)}});
      return 0;
    }
    if (app.got_subcommand(c_index)) {
      Session s = load_session_file(sfile);
      const OrderIdeal& oi = s.orderideal(oname);
      WeylOp f = parse_expr(expr, s.tab);
      emit_scalars(fmt, {{"index", oi.index_op(f)}});
      return 0;
    }
    if (app.got_subcommand(c_divide)) {
      Session s = load_session_file(sfile);
      const BorderPrebasis& G = s.prebasis(giname);
      WeylOp f = ring_element(parse_expr(expr, s.tab), G.ring);
      DivisionResult dr = border_divide(f, G);
      if (fmt == "json") {
        njson j;
        j["quotients"] = njson::array();
        for (std::size_t k = 0; k < dr.quotients.size(); ++k)
          j["quotients"].push_back({{"marker", marker_str(G.border[k], s.tab, G.ring)},
                                    {"quotient", print_ring(dr.quotients[k], G.ring)}});
        j["remainder_coords"] = njson::array();
        for (const RatFun& c : dr.remainder) j["remainder_coords"].push_back(print_ratfun(c));
        j["remainder"] = print_ring(remainder_op(dr.remainder, G.oi), G.ring);
        std::cout << j.dump(2) << "\n";
      } else {
        for (std::size_t k = 0; k < dr.quotients.size(); ++k)
          std::cout << "quotient " << marker_str(G.border[k], s.tab, G.ring) << ": "
                    << print_ring(dr.quotients[k], G.ring) << "\n";
        std::cout << "remainder: " << print_ring(remainder_op(dr.remainder, G.oi), G.ring)
                  << "\n";
      }
      return 0;
    }
    if (app.got_subcommand(c_mult)) {
      Session s = load_session_file(sfile);
      emit_doc(fmt, doc_of_matrices(s.tab, "M", mult_matrices(s.prebasis(giname))));
      return 0;
    }
    if (app.got_subcommand(c_verify)) {
      Session s = load_session_file(sfile);
      bool ok = verify_basis(s.prebasis(giname));
      emit_scalars(fmt, {{"border basis", ok}});
      return ok ? 0 : 1;
    }
    if (app.got_subcommand(c_member)) {
      Session s = load_session_file(sfile);
      BorderPrebasis& G = s.prebasis(giname);
      if (!verify_basis(G)) {
        emit_scalars(fmt, {{"border basis", false}});
        return 1;
      }
      WeylOp f = ring_element(parse_expr(expr, s.tab), G.ring);
      bool ok = membership(f, G);
      emit_scalars(fmt, {{"member", ok}});
      return ok ? 0 : 1;
    }
    if (app.got_subcommand(c_ideq)) {
      Session s = load_session_file(sfile);
      BorderPrebasis& A = s.prebasis(giname);
      BorderPrebasis& B = s.prebasis(hname);
      if (!verify_basis(A) || !verify_basis(B)) {
        emit_scalars(fmt, {{"border basis", false}});
        return 1;
      }
      bool ok = ideal_equal(A, B);
      emit_scalars(fmt, {{"equal", ok}});
      return ok ? 0 : 1;
    }
    if (app.got_subcommand(c_gauge)) {
      Session s = load_session_file(sfile);
      const ConnectionSystem& C = s.connection(aname);
      const Matrix& g = s.matrix(mname);
      std::optional<OrderIdeal> nb;
      std::vector<std::string> nl;
      if (!oname.empty())
        nb = s.orderideal(oname);
      else if (!labels.empty())
        nl = split_labels(labels);
      else {
        nb = C.basis_oi;
        nl = C.basis_labels;
      }
      ConnectionSystem out = gauge(C, g, std::move(nb), std::move(nl));
      emit_doc(fmt, doc_of_connection(s.tab, "gauged", out));
      return 0;
    }
    if (app.got_subcommand(c_int)) {
      Session s = load_session_file(sfile);
      ConnectionSystem& C = s.connection(aname);
      IntegrabilityWitness w;
      if (check_integrability(C, &w)) {
        emit_scalars(fmt, {{"integrable", true}});
        return 0;
      }
      emit_witness(fmt, w);
      return 1;
    }
    if (app.got_subcommand(c_fromc)) {
      Session s = load_session_file(sfile);
      ConnectionSystem C = s.connection(aname);
      std::string oi_name = oname.empty() ? "O" : oname;
      if (!oname.empty()) {
        const OrderIdeal& oi = s.orderideal(oname);
        if (oi.size() != C.rank())
          throw Error("order ideal size does not match the connection rank");
        C.basis_oi = oi;
        C.verified_integrable = false;
      }
      if (!C.basis_oi)
        throw Error("connection has no monomial basis; name one with -O");
      IntegrabilityWitness w;
      if (!check_integrability(C, &w)) {
        emit_witness(fmt, w);
        return 1;
      }
      emit_doc(fmt, doc_of_prebasis(oi_name, "J", ideal_from_connection(C)));
      return 0;
    }
    if (app.got_subcommand(c_topf)) {
      Session s = load_session_file(sfile);
      BorderPrebasis& G = s.prebasis(giname);
      if (!verify_basis(G)) {
        emit_scalars(fmt, {{"border basis", false}});
        return 1;
      }
      emit_doc(fmt, doc_of_connection(s.tab, "A", pfaffian_from_basis(G)));
      return 0;
    }
    if (app.got_subcommand(c_eps)) {
      Session s = load_session_file(sfile);
      const ConnectionSystem& C = s.connection(aname);
      std::optional<std::size_t> idx = s.tab->find(pname);
      if (!idx || !s.tab->is_param(*idx))
        throw Error("'" + pname + "' is not a declared parameter");
      std::optional<std::vector<Matrix>> B = epsilon_factor(C, *idx);
      if (!B) {
        emit_scalars(fmt, {{"eps-factorized", false}});
        return 1;
      }
      if (fmt == "json") {
        njson j;
        j["eps-factorized"] = true;
        j["factors"] = njson::array();
        for (const Matrix& m : *B) {
          njson rows = njson::array();
          for (std::size_t r = 0; r < m.rows(); ++r) {
            njson row = njson::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(print_ratfun(m.at(r, c)));
            rows.push_back(std::move(row));
          }
          j["factors"].push_back(std::move(rows));
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "eps-factorized: true\n\n";
        emit_doc(fmt, doc_of_matrices(s.tab, "B", *B));
      }
      return 0;
    }
    if (app.got_subcommand(c_closed)) {
      Session s = load_session_file(sfile);
      bool ok = is_closed(s.connection(aname));
      emit_scalars(fmt, {{"closed", ok}});
      return ok ? 0 : 1;
    }
    if (app.got_subcommand(c_chart)) {
      Session s = load_session_file(sfile);
      SymbolicChart ch = chart_ideal(s.orderideal(oname));
      Session out = doc_of_prebasis(oname, "G", ch.generic.G);
      for (std::size_t k = 0; k < ch.relations.size(); ++k)
        out.ops.emplace_back("rel" + std::to_string(k + 1),
                             WeylOp::from_coeff(RatFun::from_poly(ch.relations[k])));
      emit_doc(fmt, out);
      return 0;
    }
    if (app.got_subcommand(c_comm)) {
      CommutingVariety cv = commuting_variety_gens(nmats, msize);
      Session out = doc_of_matrices(cv.tab, "M", cv.generic_mats);
      for (std::size_t k = 0; k < cv.relations.size(); ++k)
        out.ops.emplace_back("rel" + std::to_string(k + 1),
                             WeylOp::from_coeff(RatFun::from_poly(cv.relations[k])));
      emit_doc(fmt, out);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
