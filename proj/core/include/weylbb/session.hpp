#pragma once

#include "weylbb/connect.hpp"
#include "weylbb/hilbert.hpp"
#include "weylbb/parse.hpp"

namespace weylbb {

// A parsed session file: a variable header followed by named objects.
//
//   # comment
//   vars: x1 x2            declared derivation variables (required, first)
//   dvars: dx1 dx2         operator tokens (optional; default d1..dn)
//   params: s12 s23        parameters (optional)
//
//   op NAME: EXPR
//   orderideal NAME: M1, M2, ...          (operator or variable monomials)
//   prebasis NAME [weyl|comm]: OIDEAL; OPNAME, OPNAME, ...
//   matrix NAME:                          (rows of '|'-separated entries)
//   ROW...
//   connection NAME:
//   basis: L1, L2, ...
//   matrix 1:
//   ROW...
//   matrix 2:
//   ROW...
//
// A bare top-level "basis:" line opens an anonymous connection named "main",
// so a file holding nothing but a basis line and matrix blocks is itself a
// valid connection-system file. A basis whose entries are all operator
// monomials must list the order ideal in its canonical enumeration; any other
// entries are kept as free-text labels.
struct Session {
  // Names a prebasis statement was assembled from, so the statement can be
  // printed back as written (the prebasis itself only keeps coefficients).
  struct PrebasisSrc {
    std::string oi_name;
    std::vector<std::string> op_names;
  };

  VarTableP tab;
  std::vector<std::pair<std::string, WeylOp>> ops;
  std::vector<std::pair<std::string, OrderIdeal>> orderideals;
  std::vector<std::pair<std::string, BorderPrebasis>> prebases;
  std::vector<Session::PrebasisSrc> prebasis_srcs;  // aligned with prebases
  std::vector<std::pair<std::string, Matrix>> matrices;
  std::vector<std::pair<std::string, ConnectionSystem>> connections;

  const WeylOp& op(const std::string& name) const;
  const OrderIdeal& orderideal(const std::string& name) const;
  const BorderPrebasis& prebasis(const std::string& name) const;
  BorderPrebasis& prebasis(const std::string& name);
  const Matrix& matrix(const std::string& name) const;
  const ConnectionSystem& connection(const std::string& name) const;
  ConnectionSystem& connection(const std::string& name);
};

Session load_session(const std::string& text);
Session load_session_file(const std::string& path);

// Canonical statement printers (valid session syntax).
std::string print_orderideal_stmt(const std::string& name, const OrderIdeal& oi);
std::string print_op_stmt(const std::string& name, const WeylOp& w);
std::string print_matrix_stmt(const std::string& name, const Matrix& m);
std::string print_matrix_rows(const Matrix& m);
// "basis: ...\nmatrix 1:\n...\nmatrix 2:\n..." block (no leading keyword).
std::string print_connection_block(const ConnectionSystem& c);
std::vector<std::string> connection_basis_strings(const ConnectionSystem& c);

// Whole session as a canonical document: header, then order ideals, ops,
// matrices, prebases, connections, each in insertion order. The output parses
// back to an equal session, and printing is idempotent from the first
// normalization on. Requires prebasis_srcs to be aligned with prebases.
std::string print_session(const Session& s);

// Field-for-field JSON mirror of a whole session.
std::string session_json(const Session& s);

}  // namespace weylbb
