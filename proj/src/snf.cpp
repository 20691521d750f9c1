#include "pptower/snf.hpp"

#include <stdexcept>

namespace pptower {

namespace {

bool abs_less(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

}  // namespace

SmithForm smith_normal_form(IntMatrix a) {
  const long rows = a.rows();
  const long cols = a.cols();
  SmithForm out;

  long t = 0;
  while (t < rows && t < cols) {
    // Move a nonzero entry of minimal absolute value to the pivot position.
    long pi = -1, pj = -1;
    for (long i = t; i < rows; ++i) {
      for (long j = t; j < cols; ++j) {
        if (a(i, j) != 0 && (pi < 0 || abs_less(a(i, j), a(pi, pj)))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;  // trailing block is zero
    if (pi != t) a.row(t).swap(a.row(pi));
    if (pj != t) a.col(t).swap(a.col(pj));

    for (;;) {
      // Clear the pivot column. A nonzero remainder is strictly smaller than
      // the pivot, so swapping it up makes progress and we restart.
      bool dirty = false;
      for (long i = t + 1; i < rows && !dirty; ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);  // truncated division
        if (q != 0) a.row(i) -= q * a.row(t);
        if (a(i, t) != 0) {
          a.row(t).swap(a.row(i));
          dirty = true;
        }
      }
      if (dirty) continue;
      for (long j = t + 1; j < cols && !dirty; ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        if (q != 0) a.col(j) -= q * a.col(t);
        if (a(t, j) != 0) {
          a.col(t).swap(a.col(j));
          dirty = true;
        }
      }
      if (dirty) continue;

      // Row and column are clear. Enforce divisibility of the trailing block
      // by folding an offending row into the pivot row; the eventual pivot is
      // the gcd, strictly smaller, so this terminates.
      long oi = -1;
      for (long i = t + 1; i < rows && oi < 0; ++i) {
        for (long j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            oi = i;
            break;
          }
        }
      }
      if (oi < 0) break;
      a.row(t) += a.row(oi);
    }

    if (a(t, t) < 0) a(t, t) = -a(t, t);
    ++t;
  }

  out.rank = t;
  out.invariants.reserve(t);
  for (long i = 0; i < t; ++i) out.invariants.push_back(a(i, i));
  return out;
}

}  // namespace pptower
