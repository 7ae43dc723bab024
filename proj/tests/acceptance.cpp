// End-to-end acceptance runner: one pass/fail line per criterion, each with a
// wall-clock budget, plus a check block for the command-line binary (path
// given as argv[1]). Exits nonzero if any line fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "testutil.hpp"
#include "weylbb/basis.hpp"
#include "weylbb/connect.hpp"
#include "weylbb/division.hpp"
#include "weylbb/hilbert.hpp"
#include "weylbb/parse.hpp"
#include "weylbb/session.hpp"

using namespace weylbb;
using testutil::Rng;

namespace {

int g_failures = 0;

void run_criterion(const std::string& name, double budget_s,
                   const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ok && budget_s > 0 && secs > budget_s) {
    ok = false;
    detail = "over time budget";
  }
  if (!ok) ++g_failures;
  std::printf("%s: %s (%.2fs%s%s%s\n", name.c_str(), ok ? "PASS" : "FAIL", secs,
              budget_s > 0 ? (", budget " + std::to_string((int)budget_s) + "s)").c_str() : ")",
              detail.empty() ? "" : " — ", detail.c_str());
  std::fflush(stdout);
}

std::string fx(const std::string& name) { return testutil::fixture(name); }

// --- subprocess helpers -----------------------------------------------------

struct CmdResult {
  int code = -1;
  std::string out, err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CmdResult run_cmd(const std::string& cmd) {
  std::string out = "/tmp/weylbb_acc_out.txt", err = "/tmp/weylbb_acc_err.txt";
  int status = std::system((cmd + " > " + out + " 2> " + err).c_str());
  CmdResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// --- shared random-instance helpers (match the library's generators) --------

Poly pvar(const VarTableP& t, const std::string& nm) {
  return Poly::variable(t, t->find(nm).value());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-cli-binary>\n", argv[0]);
    return 3;
  }
  const std::string cli = argv[1];

  // 1. Symbolic chart of the three-point staircase: substituting the solved
  //    coordinates kills every commutator entry identically; perturbing any
  //    one of them leaves a nonzero entry.
  run_criterion("criterion 1", 1, [&](std::string& why) {
    VarTableP t = make_table({"X", "Y"});
    OrderIdeal oi(t, {Expv{0, 0}, Expv{1, 0}, Expv{0, 1}});
    SymbolicChart ch = chart_ideal(oi);
    const VarTableP& ext = ch.generic.extended;
    auto P = [&](const std::string& nm) { return pvar(ext, nm); };
    Poly a = P("c2_1"), b = P("c3_1"), d = P("c2_2"), e = P("c3_2");
    Poly g = P("c2_3"), h = P("c3_3");
    std::vector<Poly> images;
    for (std::size_t k = 0; k < ext->arity(); ++k)
      images.push_back(Poly::variable(ext, k));
    auto set = [&](const std::string& nm, const Poly& v) {
      images[ext->find(nm).value()] = v;
    };
    std::vector<Poly> id = images;
    set("c1_2", b * g - d * e);
    set("c1_1", -(a * e) + b * d - b * h + e * e);
    set("c1_3", -(a * g) + d * d - d * h + e * g);
    std::vector<Poly> solved = images;
    for (const Poly& rel : ch.relations)
      if (!rel.subst(ext, solved).is_zero()) {
        why = "a commutator entry survives the substitution";
        return false;
      }
    for (const char* nm : {"c1_2", "c1_1", "c1_3"}) {
      std::vector<Poly> bent = solved;
      bent[ext->find(nm).value()] += Poly::constant(ext, 1);
      bool nonzero = false;
      for (const Poly& rel : ch.relations)
        nonzero = nonzero || !rel.subst(ext, bent).is_zero();
      if (!nonzero) {
        why = std::string("perturbing ") + nm + " left all entries zero";
        return false;
      }
    }
    return true;
  });

  // 2. Four points in the plane: multiplication matrices match the stored
  //    ones, commute, and conjugation by the stored change of basis gives the
  //    stored transformed pair.
  run_criterion("criterion 2", 1, [&](std::string& why) {
    Session s = load_session_file(fx("fourpoints.session"));
    BorderPrebasis& G = s.prebasis("G");
    if (!verify_basis(G)) {
      why = "basis check failed";
      return false;
    }
    std::vector<Matrix> M = mult_matrices(G);
    if (!(M.size() == 2 && M[0] == s.matrix("MX") && M[1] == s.matrix("MY"))) {
      why = "multiplication matrices differ from the stored ones";
      return false;
    }
    if (!(M[0] * M[1] == M[1] * M[0])) {
      why = "matrices do not commute";
      return false;
    }
    const Matrix& B = s.matrix("Bchg");
    Matrix Binv = B.inverse();
    if (!(B * M[0] * Binv == s.matrix("MXt") && B * M[1] * Binv == s.matrix("MYt"))) {
      why = "conjugated matrices differ from the stored ones";
      return false;
    }
    return true;
  });

  // 3. Rank-2 system in two bases: the connection matrices of each stored
  //    basis reproduce that basis exactly, and the two ideals coincide.
  run_criterion("criterion 3", 5, [&](std::string& why) {
    Session s = load_session_file(fx("rank2_hypergeo.session"));
    for (const char* nm : {"JO1", "JO2"}) {
      BorderPrebasis& J = s.prebasis(nm);
      if (!verify_basis(J)) {
        why = std::string(nm) + " failed the basis check";
        return false;
      }
      ConnectionSystem C = pfaffian_from_basis(J);
      BorderPrebasis back = ideal_from_connection(C);
      if (!(back.oi == J.oi && back.coeffs == J.coeffs)) {
        why = std::string("extraction does not reproduce ") + nm;
        return false;
      }
    }
    if (!ideal_equal(s.prebasis("JO1"), s.prebasis("JO2"))) {
      why = "the two ideals differ";
      return false;
    }
    return true;
  });

  // 4. Rank-3 parameterized system: the stored matrix pair is integrable and
  //    commuting; gauging by the stored g1 and extracting reproduces the three
  //    stored generators, which pass the operator-ring basis check.
  run_criterion("criterion 4", 30, [&](std::string& why) {
    Session s = load_session_file(fx("stringy.session"));
    ConnectionSystem& A = s.connection("A");
    if (!check_integrability(A)) {
      why = "stored system not integrable";
      return false;
    }
    if (!commuting_check(A)) {
      why = "stored matrices do not commute";
      return false;
    }
    ConnectionSystem Ag = gauge(A, s.matrix("g1"), s.orderideal("O1"));
    if (!check_integrability(Ag)) {
      why = "gauged system not integrable";
      return false;
    }
    BorderPrebasis J = ideal_from_connection(Ag);
    const BorderPrebasis& JO1 = s.prebasis("JO1");
    if (!(J.oi == JO1.oi && J.coeffs == JO1.coeffs)) {
      why = "extracted generators differ from the stored ones";
      return false;
    }
    BorderPrebasis Jcheck = JO1;
    if (!is_border_basis_weyl(Jcheck)) {
      why = "stored generators fail the basis check";
      return false;
    }
    return true;
  });

  // 5. Rank-4 three-variable system with a symbolic parameter: the eight
  //    stored generators pass the operator-ring basis check, the staircase
  //    corners are as expected, and each generator's border marker is the
  //    listed one.
  run_criterion("criterion 5", 60, [&](std::string& why) {
    Session s = load_session_file(fx("twosite.session"));
    BorderPrebasis& J = s.prebasis("JO2");
    if (!is_border_basis_weyl(J)) {
      why = "basis check failed";
      return false;
    }
    const OrderIdeal& oi = s.orderideal("O2");
    std::vector<std::string> corner_str;
    for (const Expv& e : oi.corners()) corner_str.push_back(print_opmono(e, s.tab));
    if (corner_str != std::vector<std::string>{"dY", "dX1^2", "dX2^2"}) {
      why = "unexpected corners";
      return false;
    }
    // marker of each stored generator, in the order the generators are listed
    const std::vector<std::string> listed = {"dX1^2",  "dX1^2*dX2", "dX2^2",
                                             "dX1*dX2^2", "dY",     "dX1*dY",
                                             "dX2*dY", "dX1*dX2*dY"};
    std::vector<std::string> markers;
    for (int k = 1; k <= 8; ++k) {
      const WeylOp& p = s.op("P" + std::to_string(k));
      std::string found;
      for (const auto& [e, c] : p.terms())
        if (!oi.contains(e) && c.is_one()) found = print_opmono(e, s.tab);
      markers.push_back(found);
    }
    if (markers != listed) {
      why = "generator markers differ from the listed border";
      return false;
    }
    std::vector<std::string> border_str;
    for (const Expv& e : J.border) border_str.push_back(print_opmono(e, s.tab));
    std::vector<std::string> sorted_markers = markers, sorted_border = border_str;
    std::sort(sorted_markers.begin(), sorted_markers.end());
    std::sort(sorted_border.begin(), sorted_border.end());
    if (sorted_markers != sorted_border) {
      why = "markers do not cover the border";
      return false;
    }
    return true;
  });

  // 6. One-variable regular-singular system: the connection of the stored
  //    constant matrix is (1/x) times its transpose, and gauging to the
  //    monomial basis recovers the stored second-order operator, a basis.
  run_criterion("criterion 6", 1, [&](std::string& why) {
    Session s = load_session_file(fx("frobenius.session"));
    ConnectionSystem C =
        frobenius_connection(s.tab, {s.matrix("Mtheta")}, testutil::coord_labels(2));
    if (!(C.mats.size() == 1 && C.mats[0] == s.matrix("Aexp"))) {
      why = "connection matrix differs from the stored one";
      return false;
    }
    ConnectionSystem Cg = gauge(C, s.matrix("gchg"), s.orderideal("O"));
    if (!check_integrability(Cg)) {
      why = "gauged system not integrable";
      return false;
    }
    BorderPrebasis J = ideal_from_connection(Cg);
    if (!(J.nelems() == 1 && J.element(0) == s.op("Pexp"))) {
      why = "extracted operator differs from the stored one";
      return false;
    }
    return true;
  });

  // 7. Factoring the parameter out of the parameterized rank-3 pair: the
  //    factored form exists, the one-form is closed, and the matrices commute.
  run_criterion("criterion 7", 10, [&](std::string& why) {
    Session s = load_session_file(fx("stringy_eps.session"));
    const ConnectionSystem& A = s.connection("A");
    std::size_t eps = s.tab->find("eps").value();
    if (!epsilon_factor(A, eps).has_value()) {
      why = "no factored form";
      return false;
    }
    if (!is_closed(A)) {
      why = "one-form not closed";
      return false;
    }
    if (!commuting_check(A)) {
      why = "matrices do not commute";
      return false;
    }
    return true;
  });

  // 8. Randomized property suites at full count.
  run_criterion("criterion 8", 120, [&](std::string& why) {
    // (a) border division: reconstruction identity and quotient degree bound,
    //     200 instances in each ring.
    {
      Rng rng(2026'81);
      for (RingKind ring : {RingKind::Weyl, RingKind::Commutative}) {
        for (int k = 0; k < 200; ++k) {
          VarTableP t = k % 2 ? make_table({"x1", "x2"}, {"s"})
                              : make_table({"x1"}, {"s"});
          BorderPrebasis G = testutil::rand_prebasis(t, rng, ring, 4);
          WeylOp f = ring == RingKind::Weyl
                         ? testutil::rand_op(t, rng, 2, 2)
                         : WeylOp::group_comm(
                               RatFun::from_poly(testutil::rand_poly(t, rng, 3, 3)));
          DivisionResult dr = border_divide(f, G);
          WeylOp sum = remainder_op(dr.remainder, G.oi);
          for (std::size_t j = 0; j < G.nelems(); ++j)
            sum = sum + WeylOp::mul(dr.quotients[j], G.element(j), G.ring);
          if (!(sum == f)) {
            why = "reconstruction identity failed";
            return false;
          }
          int ind = static_cast<int>(G.oi.index_op(f));
          for (const WeylOp& q : dr.quotients)
            if (q.degree() > ind - 1) {
              why = "quotient degree bound violated";
              return false;
            }
        }
      }
    }
    // (b) operator arithmetic: action fidelity and associativity on 100
    //     random triples.
    {
      Rng rng(2026'82);
      VarTableP t = make_table({"x1", "x2"}, {"s"});
      for (int k = 0; k < 100; ++k) {
        WeylOp P = testutil::rand_op(t, rng, 2, 2);
        WeylOp Q = testutil::rand_op(t, rng, 2, 2);
        WeylOp R = testutil::rand_op(t, rng, 2, 2);
        RatFun f = testutil::rand_ratfun(t, rng, 2);
        if (!(WeylOp::mul(P, Q, RingKind::Weyl).apply(f) == P.apply(Q.apply(f)))) {
          why = "action fidelity failed";
          return false;
        }
        WeylOp left = WeylOp::mul(WeylOp::mul(P, Q, RingKind::Weyl), R, RingKind::Weyl);
        WeylOp right = WeylOp::mul(P, WeylOp::mul(Q, R, RingKind::Weyl), RingKind::Weyl);
        if (!(left == right)) {
          why = "associativity failed";
          return false;
        }
      }
    }
    // (c) gauge transforms act as a group and preserve integrability,
    //     rank <= 3.
    {
      Rng rng(2026'83);
      VarTableP t = make_table({"x1", "x2"});
      for (std::size_t m : {2u, 3u}) {
        for (int k = 0; k < 5; ++k) {
          ConnectionSystem A = testutil::rand_integrable(t, rng, m);
          Matrix g = testutil::rand_unimodular(t, rng, m);
          Matrix h = testutil::rand_unimodular(t, rng, m);
          ConnectionSystem Ag = gauge(A, g);
          if (!check_integrability(Ag)) {
            why = "gauge broke integrability";
            return false;
          }
          ConnectionSystem Agh = gauge(Ag, h);
          ConnectionSystem Ahg = gauge(A, h * g);
          if (!(Agh.mats == Ahg.mats)) {
            why = "gauge composition failed";
            return false;
          }
          ConnectionSystem back = gauge(Ag, g.inverse());
          if (!(back.mats == A.mats)) {
            why = "inverse gauge did not undo";
            return false;
          }
          ConnectionSystem idg = gauge(A, Matrix::identity(t, m));
          if (!(idg.mats == A.mats)) {
            why = "identity gauge moved the system";
            return false;
          }
        }
      }
    }
    // (d) staircase invariants on 100 random order ideals.
    {
      Rng rng(2026'84);
      for (int k = 0; k < 100; ++k) {
        VarTableP t = k % 2 ? make_table({"x1", "x2", "x3"}) : make_table({"x1", "x2"});
        OrderIdeal oi = testutil::rand_order_ideal(t, rng, 3 + (unsigned)(k % 5));
        std::vector<Expv> border = oi.border();
        for (const Expv& e : border)
          if (oi.contains(e)) {
            why = "border meets the staircase";
            return false;
          }
        // union is downward closed
        std::vector<Expv> all = oi.elems();
        all.insert(all.end(), border.begin(), border.end());
        if (!OrderIdeal::is_order_ideal(t->nderiv(), all)) {
          why = "staircase plus border is not downward closed";
          return false;
        }
        // border = one variable step out of the staircase
        std::vector<Expv> steps;
        for (const Expv& e : oi.elems())
          for (std::size_t j = 0; j < t->nderiv(); ++j) {
            Expv f = e;
            f[j] += 1;
            if (!oi.contains(f)) steps.push_back(f);
          }
        std::sort(steps.begin(), steps.end(), MonoLess{});
        steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
        if (!(steps == border)) {
          why = "border is not the set of variable steps";
          return false;
        }
        // corners: minimal border elements generating the border
        std::vector<Expv> corners = oi.corners();
        for (const Expv& c : corners) {
          bool in_border = false;
          for (const Expv& e : border) in_border = in_border || e == c;
          if (!in_border) {
            why = "corner outside the border";
            return false;
          }
        }
        for (std::size_t i = 0; i < corners.size(); ++i)
          for (std::size_t j = 0; j < corners.size(); ++j)
            if (i != j && expv_divides(corners[i], corners[j])) {
              why = "corners are not pairwise incomparable";
              return false;
            }
        for (const Expv& e : border) {
          bool covered = false;
          for (const Expv& c : corners) covered = covered || expv_divides(c, e);
          if (!covered) {
            why = "border element not under any corner";
            return false;
          }
        }
      }
    }
    return true;
  });

  // 9. Out-of-scope confirmations: the rank-7 four-variable system ships as a
  //    staircase only (its matrices live in an external dataset), the
  //    dimension/degree of the commuting variety and external Gröbner-engine
  //    cross-checks are not computed here. Corner factorizations are instead
  //    verified structurally: the factored markers are exactly the corners.
  run_criterion("criterion 9", 10, [&](std::string& why) {
    Session sun = load_session_file(fx("sunrise_order.session"));
    const OrderIdeal& oi = sun.orderideal("O");
    if (oi.size() != 7) {
      why = "stored staircase is not rank 7";
      return false;
    }
    if (!sun.connections.empty()) {
      why = "unexpected connection data for the excluded pipeline";
      return false;
    }
    Session two = load_session_file(fx("twosite.session"));
    BorderPrebasis& J = two.prebasis("JO2");
    if (!verify_basis(J)) {
      why = "basis check failed";
      return false;
    }
    auto sub = corner_subset(J);
    std::vector<Expv> markers;
    for (const auto& [e, op] : sub) markers.push_back(e);
    std::sort(markers.begin(), markers.end(), MonoLess{});
    std::vector<Expv> corners = J.oi.corners();
    std::sort(corners.begin(), corners.end(), MonoLess{});
    if (!(markers == corners)) {
      why = "corner factorization markers are not the corners";
      return false;
    }
    return true;
  });

  // Command-line surface: every subcommand, the exit-code convention, output
  // determinism, and the json mirror.
  run_criterion("cli surface", 60, [&](std::string& why) {
    auto need = [&](const CmdResult& r, int code, const std::string& out_needle,
                    const std::string& what) {
      if (r.code != code) {
        why = what + ": exit " + std::to_string(r.code) + ", want " + std::to_string(code);
        return false;
      }
      if (!out_needle.empty() && !contains(r.out, out_needle)) {
        why = what + ": output lacks '" + out_needle + "'";
        return false;
      }
      return true;
    };
    std::string q = "'";  // fixture paths carry no quotes to escape

    if (!need(run_cmd(cli + " verify -s " + fx("stringy.session") + " -G JO1"), 0,
              "border basis: true", "verify"))
      return false;
    if (!need(run_cmd(cli + " ideal-eq -s " + fx("rank2_hypergeo.session") + " -G JO1 -H JO2"),
              0, "equal: true", "ideal-eq"))
      return false;
    if (!need(run_cmd(cli + " verify -s " + fx("chart3.session") + " -G G"), 1,
              "border basis: false", "verify negative"))
      return false;

    // zero matrices are an integrable system
    {
      std::ofstream z("/tmp/weylbb_acc_zero.session");
      z << "vars: x y\nconnection Z:\nbasis: 1, d1\n"
           "matrix 1:\n0 | 0\n0 | 0\nmatrix 2:\n0 | 0\n0 | 0\n";
    }
    if (!need(run_cmd(cli + " check-int -s /tmp/weylbb_acc_zero.session -A Z"), 0,
              "integrable: true", "check-int zeros"))
      return false;

    // exit 2 on malformed invocations and bad input, with grammar help
    {
      CmdResult r = run_cmd(cli + " verify");
      if (r.code != 2 || !contains(r.err, "Usage")) {
        why = "missing options did not exit 2 with help";
        return false;
      }
      r = run_cmd(cli + " verify -s /nonexistent.session -G G");
      if (r.code != 2 || !contains(r.err, "error:")) {
        why = "unreadable session did not exit 2";
        return false;
      }
      r = run_cmd(cli + " verify -s " + fx("stringy.session") + " -G nope");
      if (r.code != 2 || !contains(r.err, "no prebasis named")) {
        why = "unknown name did not exit 2";
        return false;
      }
    }

    // remaining subcommands, one smoke invocation each
    if (!need(run_cmd(cli + " border -s " + fx("twosite.session") + " -O O2"), 0, "border:",
              "border"))
      return false;
    if (!need(run_cmd(cli + " corners -s " + fx("twosite.session") + " -O O2"), 0,
              "corners: dY, dX1^2, dX2^2", "corners"))
      return false;
    if (!need(run_cmd(cli + " index -s " + fx("stringy.session") + " -O O1 -e " + q +
                      "d1*d2" + q),
              0, "index: 1", "index"))
      return false;
    if (!need(run_cmd(cli + " divide -s " + fx("fourpoints.session") + " -G G -e " + q +
                      "X^2*Y^2" + q),
              0, "remainder:", "divide"))
      return false;
    if (!need(run_cmd(cli + " multmatrices -s " + fx("fourpoints.session") + " -G G"), 0,
              "matrix M1:", "multmatrices"))
      return false;
    if (!need(run_cmd(cli + " member -s " + fx("fourpoints.session") + " -G G -e 0"), 0,
              "member: true", "member"))
      return false;
    if (!need(run_cmd(cli + " member -s " + fx("fourpoints.session") + " -G G -e 1"), 1,
              "member: false", "member negative"))
      return false;
    if (!need(run_cmd(cli + " gauge -s " + fx("stringy.session") + " -A A -g g1 -O O1"), 0,
              "matrix 1:", "gauge"))
      return false;
    if (!need(run_cmd(cli + " eps-factor -s " + fx("stringy_eps.session") + " -A A -p eps"), 0,
              "eps-factorized: true", "eps-factor"))
      return false;
    if (!need(run_cmd(cli + " closed -s " + fx("stringy_eps.session") + " -A A"), 0,
              "closed: true", "closed"))
      return false;
    if (!need(run_cmd(cli + " chart -s " + fx("fourpoints.session") + " -O O"), 0, "op rel1:",
              "chart"))
      return false;
    if (!need(run_cmd(cli + " commuting-gens -n 2 -m 2"), 0, "op rel1:", "commuting-gens"))
      return false;

    // a produced connection document feeds straight back in
    {
      CmdResult pf = run_cmd(cli + " to-pfaffian -s " + fx("rank2_hypergeo.session") + " -G JO1");
      if (!need(pf, 0, "connection A:", "to-pfaffian")) return false;
      std::ofstream("/tmp/weylbb_acc_pf.session") << pf.out;
      CmdResult back = run_cmd(cli + " from-connection -s /tmp/weylbb_acc_pf.session -A A");
      if (!need(back, 0, "prebasis J weyl:", "from-connection")) return false;
    }

    // byte determinism on repeated runs
    for (const std::string& cmd :
         {cli + " to-pfaffian -s " + fx("rank2_hypergeo.session") + " -G JO1",
          cli + " chart -s " + fx("fourpoints.session") + " -O O",
          cli + " multmatrices -s " + fx("twosite.session") + " -G JO2"}) {
      CmdResult r1 = run_cmd(cmd);
      CmdResult r2 = run_cmd(cmd);
      if (r1.code != 0 || r1.out != r2.out) {
        why = "repeated run differed: " + cmd;
        return false;
      }
    }

    // the json format parses and mirrors the text output
    {
      CmdResult r = run_cmd(cli + " multmatrices -s " + fx("fourpoints.session") +
                            " -G G --format json");
      if (r.code != 0) {
        why = "json run failed";
        return false;
      }
      nlohmann::json j = nlohmann::json::parse(r.out);
      if (j["matrices"].size() != 2) {
        why = "json output lacks the two matrices";
        return false;
      }
      r = run_cmd(cli + " verify -s " + fx("stringy.session") + " -G JO1 --format json");
      j = nlohmann::json::parse(r.out);
      if (!(r.code == 0 && j["border basis"] == true)) {
        why = "json verify mismatch";
        return false;
      }
    }
    return true;
  });

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
