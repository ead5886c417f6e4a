#pragma once

#include "pellwalk/word.hpp"

namespace pellwalk {

/// 2x2 integer matrix, row-major. Products of step matrices have
/// determinant 1 and non-negative entries; a full cycle matrix N is
/// strictly positive of shape (u, Dv; v, u).
struct Mat2 {
  BigInt e11, e12, e21, e22;

  static Mat2 identity() { return Mat2{1, 0, 0, 1}; }

  Mat2 operator*(const Mat2& o) const {
    return Mat2{e11 * o.e11 + e12 * o.e21, e11 * o.e12 + e12 * o.e22,
                e21 * o.e11 + e22 * o.e21, e21 * o.e12 + e22 * o.e22};
  }

  Mat2 transpose() const { return Mat2{e11, e21, e12, e22}; }

  BigInt det() const { return e11 * e22 - e12 * e21; }

  bool operator==(const Mat2&) const = default;
};

/// Matrix of one run: R^n = (1 n; 0 1), L^m = (1 0; m 1).
Mat2 mat_of_run(const Run& r);

/// Ordered product of the run matrices; the empty word gives the identity.
Mat2 mat_of_word(const StepWord& w);

}  // namespace pellwalk
