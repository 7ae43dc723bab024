#include "doctest.h"
#include "testutil.hpp"
#include "weylbb/basis.hpp"
#include "weylbb/connect.hpp"
#include "weylbb/parse.hpp"
#include "weylbb/session.hpp"

using namespace weylbb;
using testutil::Rng;

namespace {
Matrix constmat(const VarTableP& t, std::vector<std::vector<int>> rows) {
  Matrix M(t, rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      M.at(r, c) = RatFun::constant(t, rows[r][c]);
  return M;
}
}  // namespace

TEST_CASE("exact inverses: symbolic, identity, random, and singular input") {
  Session s = load_session_file(testutil::fixture("stringy.session"));
  const VarTableP& t = s.tab;
  const Matrix& g1 = s.matrix("g1");
  Matrix id3 = Matrix::identity(t, 3);
  CHECK(g1 * g1.inverse() == id3);
  CHECK(g1.inverse() * g1 == id3);
  CHECK(id3.inverse() == id3);

  Rng rng(2026'51);
  VarTableP t2 = make_table({"x", "y"});
  int done = 0;
  while (done < 5) {
    Matrix M(t2, 4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) M.at(r, c) = testutil::rand_ratfun(t2, rng, 1);
    try {
      Matrix Minv = M.inverse();
      CHECK(M * Minv == Matrix::identity(t2, 4));
      ++done;
    } catch (const SingularMatrix&) {
    }
  }

  // a rank-deficient matrix reports the column where elimination stalls
  Matrix S(t2, 2, 2);
  S.at(0, 0) = RatFun::one(t2);
  S.at(1, 0) = RatFun::one(t2);
  try {
    S.inverse();
    CHECK(false);
  } catch (const SingularMatrix& e) {
    CHECK(e.column == 1);
  }
}

TEST_CASE("integrability of the bundled logarithmic system, and a witnessed failure") {
  Session s = load_session_file(testutil::fixture("stringy.session"));
  ConnectionSystem A = s.connection("A");
  CHECK(check_integrability(A));
  CHECK(A.verified_integrable);
  CHECK(commuting_check(A));  // this pair even commutes

  VarTableP t = make_table({"x1", "x2"});
  ConnectionSystem Z;
  Z.mats = {Matrix(t, 2, 2), Matrix(t, 2, 2)};
  CHECK(check_integrability(Z));

  ConnectionSystem N;
  N.mats = {constmat(t, {{0, 1}, {0, 0}}), constmat(t, {{0, 0}, {1, 0}})};
  IntegrabilityWitness w;
  CHECK(!check_integrability(N, &w));
  CHECK(!N.verified_integrable);
  CHECK(w.i == 0);
  CHECK(w.j == 1);
  REQUIRE(w.residual.has_value());
  // [A1, A2] = diag(1, -1) while both derivative terms vanish
  CHECK(w.row == 0);
  CHECK(w.col == 0);
  CHECK(*w.residual == RatFun::one(t));
  CHECK(!commuting_check(N));
  CHECK(is_closed(N));  // constant matrices always give a closed form
}

TEST_CASE("gauge transforms form a group action and preserve integrability") {
  Session s = load_session_file(testutil::fixture("stringy.session"));
  ConnectionSystem A = s.connection("A");
  REQUIRE(check_integrability(A));
  const VarTableP& t = s.tab;

  // identity gauge changes nothing
  ConnectionSystem A1 = gauge(A, Matrix::identity(t, 3));
  CHECK(A1.mats == A.mats);

  Rng rng(2026'52);
  for (int k = 0; k < 5; ++k) {
    Matrix g = testutil::rand_unimodular(t, rng, 3);
    Matrix h = testutil::rand_unimodular(t, rng, 3);
    ConnectionSystem Ag = gauge(A, g);
    CHECK(check_integrability(Ag));

    // undoing the gauge returns the original system
    ConnectionSystem back = gauge(Ag, g.inverse());
    CHECK(back.mats == A.mats);

    // composing gauges equals gauging by the product
    ConnectionSystem two = gauge(Ag, h);
    ConnectionSystem one = gauge(A, h * g);
    CHECK(two.mats == one.mats);
  }
}

TEST_CASE("a rank-one system annihilates the function it was built from") {
  VarTableP t = make_table({"x"});
  // logarithmic derivative of f = x^3: the operator d - f'/f kills f
  RatFun f = parse_scalar("x^3", t);
  RatFun logd = f.derive(0) / f;
  ConnectionSystem C;
  Matrix A(t, 1, 1);
  A.at(0, 0) = logd;
  C.mats = {A};
  OrderIdeal one(t, {Expv{0}});
  C.basis_oi = one;
  REQUIRE(check_integrability(C));
  BorderPrebasis B = ideal_from_connection(C);
  REQUIRE(B.nelems() == 1);
  WeylOp g = B.element(0);
  CHECK(g == parse_expr("d1 - 3/x", t));
  CHECK(g.apply(f) == RatFun::zero(t));
}

TEST_CASE("extraction matches the printed generators of the running system") {
  Session s = load_session_file(testutil::fixture("rank2_hypergeo.session"));
  BorderPrebasis B1 = s.prebasis("JO1");
  REQUIRE(verify_basis(B1));
  ConnectionSystem C = pfaffian_from_basis(B1);
  REQUIRE(C.basis_oi.has_value());
  BorderPrebasis back = ideal_from_connection(C);
  CHECK(back.oi == B1.oi);
  CHECK(back.coeffs == B1.coeffs);
}

TEST_CASE("the transported frame of the logarithmic system is its operator basis") {
  Session s = load_session_file(testutil::fixture("stringy.session"));
  ConnectionSystem A = s.connection("A");
  REQUIRE(check_integrability(A));
  BorderPrebasis B = s.prebasis("JO1");
  REQUIRE(verify_basis(B));

  ConnectionSystem Ag = gauge(A, s.matrix("g1"), B.oi);
  REQUIRE(check_integrability(Ag));
  ConnectionSystem P = pfaffian_from_basis(B);
  CHECK(Ag.mats == P.mats);

  BorderPrebasis extracted = ideal_from_connection(Ag);
  CHECK(extracted.coeffs == B.coeffs);
}

TEST_CASE("Euler-operator systems scale their matrix by the coordinate") {
  Session s = load_session_file(testutil::fixture("frobenius.session"));
  const VarTableP& t = s.tab;
  ConnectionSystem C = frobenius_connection(t, {s.matrix("Mtheta")}, {"f", "t*f"});
  REQUIRE(C.mats.size() == 1);
  CHECK(C.mats[0] == s.matrix("Aexp"));
  CHECK(C.verified_integrable);

  // changing to the derivative frame exposes the order-ideal basis {1, d1}
  OrderIdeal O = s.orderideal("O");
  ConnectionSystem Cg = gauge(C, s.matrix("gchg"), O);
  REQUIRE(check_integrability(Cg));
  BorderPrebasis B = ideal_from_connection(Cg);
  REQUIRE(B.nelems() == 1);
  CHECK(B.element(0) == s.op("Pexp"));

  // zero matrices give the zero connection
  VarTableP t2 = make_table({"x1", "x2"});
  ConnectionSystem Z = frobenius_connection(
      t2, {Matrix(t2, 2, 2), Matrix(t2, 2, 2)}, {"a", "b"});
  for (const Matrix& M : Z.mats) CHECK(M.is_zero());

  // polynomials in one matrix commute, so they are accepted and integrable
  Rng rng(2026'53);
  for (int k = 0; k < 5; ++k) {
    std::vector<Matrix> pq = testutil::rand_commuting_mats(t2, rng, 2, 3);
    ConnectionSystem F = frobenius_connection(t2, pq, {"u", "v", "w"});
    ConnectionSystem F2 = F;
    CHECK(check_integrability(F2));
  }

  // a noncommuting pair is rejected
  std::vector<Matrix> bad = {constmat(t2, {{0, 1}, {0, 0}}),
                             constmat(t2, {{0, 0}, {1, 0}})};
  CHECK_THROWS_AS(frobenius_connection(t2, bad, {"a", "b"}), NotCommuting);
}

TEST_CASE("constant systems transpose their commuting matrices") {
  Session s = load_session_file(testutil::fixture("fourpoints.session"));
  const VarTableP& t = s.tab;
  ConnectionSystem C =
      constant_connection(t, {s.matrix("MX"), s.matrix("MY")}, {});
  CHECK(C.mats[0] == s.matrix("MX").transpose());
  CHECK(C.mats[1] == s.matrix("MY").transpose());
  ConnectionSystem C2 = C;
  CHECK(check_integrability(C2));

  VarTableP t2 = make_table({"x1", "x2"});
  ConnectionSystem Z = constant_connection(t2, {Matrix(t2, 3, 3), Matrix(t2, 3, 3)}, {});
  ConnectionSystem Z2 = Z;
  CHECK(check_integrability(Z2));

  std::vector<Matrix> bad = {constmat(t2, {{0, 1}, {0, 0}}),
                             constmat(t2, {{0, 0}, {1, 0}})};
  CHECK_THROWS_AS(constant_connection(t2, bad, {}), NotCommuting);
}

TEST_CASE("factoring out a parameter succeeds exactly when the quotient drops it") {
  Session s = load_session_file(testutil::fixture("stringy_eps.session"));
  const VarTableP& t = s.tab;
  std::size_t eps = t->find("eps").value();
  ConnectionSystem A = s.connection("A");
  auto B = epsilon_factor(A, eps);
  REQUIRE(B.has_value());
  REQUIRE(B->size() == 2);
  RatFun e = RatFun::variable(t, eps);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t r = 0; r < (*B)[i].rows(); ++r)
      for (std::size_t c = 0; c < (*B)[i].cols(); ++c)
        CHECK(!(*B)[i].at(r, c).depends_on(eps));
    CHECK((*B)[i].scale(e) == A.mats[i]);
  }

  // zero matrices factor trivially
  ConnectionSystem Z;
  Z.mats = {Matrix(t, 2, 2), Matrix(t, 2, 2)};
  auto BZ = epsilon_factor(Z, eps);
  REQUIRE(BZ.has_value());
  for (const Matrix& M : *BZ) CHECK(M.is_zero());

  // a quadratic term in the parameter blocks the factorization
  VarTableP t1 = make_table({"x"}, {"ep"});
  ConnectionSystem Q;
  Matrix M(t1, 1, 1);
  M.at(0, 0) = parse_scalar("ep + ep^2*x", t1);
  Q.mats = {M};
  CHECK(!epsilon_factor(Q, t1->find("ep").value()).has_value());
}

TEST_CASE("closedness of the connection one-form") {
  Session s = load_session_file(testutil::fixture("stringy.session"));
  ConnectionSystem A = s.connection("A");
  CHECK(is_closed(A));

  // an x-dependent gauge generally destroys closedness
  const VarTableP& t = s.tab;
  Matrix g = Matrix::identity(t, 3);
  g.at(0, 1) = RatFun::variable(t, 0);
  ConnectionSystem Ag = gauge(A, g);
  CHECK(!is_closed(Ag));
  REQUIRE(check_integrability(Ag));  // integrability survives any gauge
}

TEST_CASE("a factored integrable system is closed with commuting matrices") {
  Session s = load_session_file(testutil::fixture("stringy_eps.session"));
  ConnectionSystem A = s.connection("A");
  std::size_t eps = s.tab->find("eps").value();
  REQUIRE(check_integrability(A));
  REQUIRE(epsilon_factor(A, eps).has_value());
  CHECK(is_closed(A));
  CHECK(commuting_check(A));
}
