#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "testutil.hpp"
#include "weylbb/session.hpp"

using namespace weylbb;

namespace {
const std::vector<std::string> kFixtures = {
    "fourpoints",     "stringy",   "stringy_eps",    "twosite",
    "sunrise_order",  "frobenius", "rank2_hypergeo", "chart3"};

void check_equal_sessions(const Session& a, const Session& b) {
  REQUIRE(a.ops.size() == b.ops.size());
  REQUIRE(a.orderideals.size() == b.orderideals.size());
  REQUIRE(a.prebases.size() == b.prebases.size());
  REQUIRE(a.matrices.size() == b.matrices.size());
  REQUIRE(a.connections.size() == b.connections.size());
  CHECK(a.tab->same(*b.tab));
  for (std::size_t i = 0; i < a.ops.size(); ++i) {
    CHECK(a.ops[i].first == b.ops[i].first);
    CHECK(a.ops[i].second == b.ops[i].second);
  }
  for (std::size_t i = 0; i < a.orderideals.size(); ++i) {
    CHECK(a.orderideals[i].first == b.orderideals[i].first);
    CHECK(a.orderideals[i].second == b.orderideals[i].second);
  }
  for (std::size_t i = 0; i < a.prebases.size(); ++i) {
    CHECK(a.prebases[i].first == b.prebases[i].first);
    CHECK(a.prebases[i].second.oi == b.prebases[i].second.oi);
    CHECK(a.prebases[i].second.ring == b.prebases[i].second.ring);
    CHECK(a.prebases[i].second.coeffs == b.prebases[i].second.coeffs);
  }
  for (std::size_t i = 0; i < a.matrices.size(); ++i) {
    CHECK(a.matrices[i].first == b.matrices[i].first);
    CHECK(a.matrices[i].second == b.matrices[i].second);
  }
  for (std::size_t i = 0; i < a.connections.size(); ++i) {
    const ConnectionSystem& x = a.connections[i].second;
    const ConnectionSystem& y = b.connections[i].second;
    CHECK(a.connections[i].first == b.connections[i].first);
    CHECK(x.mats == y.mats);
    CHECK(x.basis_labels == y.basis_labels);
    REQUIRE(x.basis_oi.has_value() == y.basis_oi.has_value());
    if (x.basis_oi) CHECK(*x.basis_oi == *y.basis_oi);
  }
}
}  // namespace

TEST_CASE("every shipped session reloads from its own print") {
  for (const std::string& nm : kFixtures) {
    CAPTURE(nm);
    Session s1 = load_session_file(testutil::fixture(nm + ".session"));
    std::string text = print_session(s1);
    Session s2 = load_session(text);
    check_equal_sessions(s1, s2);
    CHECK(print_session(s2) == text);  // printing is a fixed point
  }
}

TEST_CASE("the json mirror carries every object field-for-field") {
  for (const std::string& nm : kFixtures) {
    CAPTURE(nm);
    Session s = load_session_file(testutil::fixture(nm + ".session"));
    nlohmann::json j = nlohmann::json::parse(session_json(s));
    REQUIRE(j["vars"].size() == s.tab->nderiv());
    REQUIRE(j["ops"].size() == s.ops.size());
    REQUIRE(j["orderideals"].size() == s.orderideals.size());
    REQUIRE(j["prebases"].size() == s.prebases.size());
    REQUIRE(j["matrices"].size() == s.matrices.size());
    REQUIRE(j["connections"].size() == s.connections.size());
    for (std::size_t i = 0; i < s.ops.size(); ++i) {
      CHECK(j["ops"][i]["name"] == s.ops[i].first);
      CHECK(parse_expr(j["ops"][i]["expr"].get<std::string>(), s.tab) == s.ops[i].second);
    }
    for (std::size_t i = 0; i < s.matrices.size(); ++i) {
      const Matrix& m = s.matrices[i].second;
      REQUIRE(j["matrices"][i]["rows"].get<std::size_t>() == m.rows());
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          CHECK(parse_scalar(j["matrices"][i]["entries"][r][c].get<std::string>(), s.tab) ==
                m.at(r, c));
    }
  }

  Session st = load_session_file(testutil::fixture("stringy.session"));
  nlohmann::json j = nlohmann::json::parse(session_json(st));
  CHECK(j["params"] == nlohmann::json({"s12", "s23", "s24", "s25"}));
  CHECK(j["connections"][0]["name"] == "A");
  CHECK(j["connections"][0]["mats"].size() == 2);
}

TEST_CASE("a bare basis line opens a connection named main") {
  Session s = load_session(
      "vars: x\n"
      "basis: 1, d1\n"
      "matrix 1:\n"
      "0 | 1\n"
      "1/x | 0\n");
  const ConnectionSystem& c = s.connection("main");
  CHECK(c.mats.size() == 1);
  CHECK(c.rank() == 2);
  REQUIRE(c.basis_oi.has_value());
  CHECK(c.basis_oi->size() == 2);
}

TEST_CASE("free-text basis labels survive when entries are not monomials") {
  Session s = load_session(
      "vars: x\n"
      "connection C:\n"
      "basis: f, df/dx\n"
      "matrix 1:\n"
      "0 | 1\n"
      "0 | 0\n");
  const ConnectionSystem& c = s.connection("C");
  CHECK(!c.basis_oi.has_value());
  CHECK(c.basis_labels == std::vector<std::string>{"f", "df/dx"});
  std::string text = print_session(s);
  Session s2 = load_session(text);
  CHECK(s2.connection("C").basis_labels == c.basis_labels);
  CHECK(print_session(s2) == text);
}

TEST_CASE("malformed session files are rejected with the offending line") {
  auto expect_fail = [](const std::string& text, const std::string& needle) {
    try {
      load_session(text);
      FAIL_CHECK("accepted: " << text);
    } catch (const SessionError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_fail("", "missing 'vars:'");
  expect_fail("op f: 1\n", "must start with a 'vars:' line");
  expect_fail("vars: x\nvars: y\n", "duplicate 'vars:'");
  expect_fail("vars: x\nop f: 1\nop f: 2\n", "already declared");
  expect_fail("vars: x\norderideal O: 1, d1^2\n", "closed under monomial division");
  expect_fail("vars: x\norderideal O: 2*d1\n", "coefficient 1");
  expect_fail("vars: x\norderideal O: 1\nprebasis G weyl: O; nope\n", "unknown op");
  expect_fail("vars: x\nmatrix M:\n1 | 2\n3\n", "different lengths");
  expect_fail("vars: x\nmatrix M:\n", "no rows");
  expect_fail("vars: x\nconnection C:\nbasis: d1, 1\nmatrix 1:\n0 | 0\n0 | 0\n",
              "canonical order");
  expect_fail("vars: x\nconnection C:\nbasis: 1, d1\n", "missing 'matrix 1:'");
  expect_fail("vars: x\nwibble W: 1\n", "unknown keyword");

  // expression errors surface with positions mapped into the file
  try {
    load_session("vars: x\nop f: (x\n");
    FAIL_CHECK("unbalanced expression accepted");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 9);
  }
  expect_fail("vars: x\nop f: 1\norderideal O: 1\nprebasis G zzz: O; f\n",
              "'weyl' or 'comm'");
  expect_fail("vars: x\nop f: d1\norderideal O: 1\nprebasis G comm: O; f\n",
              "contains a derivation");
  CHECK_THROWS_AS(load_session_file("/nonexistent/no.session"), SessionError);

  Session s = load_session("vars: x\n");
  CHECK_THROWS_AS(s.op("missing"), SessionError);
  CHECK_THROWS_AS(s.orderideal("missing"), SessionError);
  CHECK_THROWS_AS(s.matrix("missing"), SessionError);
}

TEST_CASE("prebasis generators must carry distinct border markers") {
  // d1^2 marks the border of O = {1, d1}; an op marked by a monomial outside
  // the border, or two ops with the same marker, cannot assemble
  auto expect_fail = [](const std::string& text, const std::string& needle) {
    try {
      load_session(text);
      FAIL_CHECK("accepted: " << text);
    } catch (const SessionError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  std::string head =
      "vars: x\n"
      "orderideal O: 1, d1\n";
  expect_fail(head + "op g: d1^3\nprebasis G weyl: O; g\n", "outside the order ideal");
  expect_fail(head + "op g1: d1^2\nop g2: d1^2 + 1\nprebasis G weyl: O; g1, g2\n",
              "exactly one generator per border monomial");
  expect_fail(
      "vars: x y\norderideal O: 1\nop g1: d1 + 1\nop g2: d1 + 2\n"
      "prebasis G weyl: O; g1, g2\n",
      "share one border monomial");
}
