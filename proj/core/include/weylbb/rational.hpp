#pragma once

#include <gmpxx.h>

#include <string>

namespace weylbb {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator) under arithmetic; only raw constructions need canonicalize().
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline int rat_sign(const Rat& q) { return sgn(q); }

}  // namespace weylbb
