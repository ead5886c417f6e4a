#pragma once

#include "pellwalk/bigint.hpp"

namespace pellwalk {

enum class StepDir : unsigned char { L, R };

StepDir opposite(StepDir dir);
char letter_of(StepDir dir);

/// Binary quadratic form a*x^2 + 2*b*x*y + c*y^2 (even middle coefficient).
/// Its matrix is (a b; b c). A form is "balanced" when a > 0 and c < 0; the
/// Pell walk only ever visits balanced forms of determinant -D, but the step
/// operations themselves are total and place no constraint on the triple.
struct Form {
  BigInt a, b, c;

  bool operator==(const Form&) const = default;
};

/// a + 2b + c. On a balanced walk its sign selects the next step: left when
/// positive, right when negative; zero only happens when D is a square.
BigInt total(const Form& f);

/// a*c - b^2; invariant under left and right steps.
BigInt determinant(const Form& f);

bool is_balanced(const Form& f);

/// (a,b,c) -> (a, a+b, a+2b+c), the form with matrix R^T A R.
Form step_right(const Form& f);

/// (a,b,c) -> (a+2b+c, b+c, c), the form with matrix L^T A L.
Form step_left(const Form& f);

Form step(const Form& f, StepDir dir);

/// n right steps at once: (a, b+a*n, c+2b*n+a*n^2). Requires n >= 0.
Form run_right(const Form& f, const BigInt& n);

/// m left steps at once: (a+2b*m+c*m^2, b+c*m, c). Requires m >= 0.
Form run_left(const Form& f, const BigInt& m);

Form run(const Form& f, StepDir dir, const BigInt& len);

/// Undoes one step: invert_step(step(f, dir), dir) == f for every f.
Form invert_step(const Form& f, StepDir dir);

/// Recovers the direction of a step from its successor alone: a left step
/// leaves a' - 2b' + c' = a > 0, a right step leaves c < 0. Throws
/// std::invalid_argument when a' - 2b' + c' == 0.
StepDir classify_step(const Form& pred, const Form& succ);

/// A run of `len` consecutive steps in one direction, len >= 1.
struct Run {
  StepDir dir;
  BigInt len;

  bool operator==(const Run&) const = default;
};

/// The maximal run from a balanced form of determinant -D (D nonsquare):
/// right while the total is negative, left while it is positive, as long as
/// every intermediate form stays balanced. The length comes from the closed
/// forms n = floor((-b + sqrt(D))/a), m = floor((b + sqrt(D))/(-c)) using
/// isqrt, is validated by evaluating the boundary quadratic directly, and
/// falls back to a linear search if that validation fails. Throws
/// std::invalid_argument if f is unbalanced, determinant(f) != -D, D is a
/// square, or total(f) == 0.
Run max_run(const Form& f, const BigInt& d);

/// Same, with sqrt_d = isqrt(d) precomputed by the caller.
Run max_run(const Form& f, const BigInt& d, const BigInt& sqrt_d);

}  // namespace pellwalk
