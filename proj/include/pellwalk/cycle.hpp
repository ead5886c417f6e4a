#pragma once

#include "pellwalk/mat2.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pellwalk {

class DNotPositiveError : public std::invalid_argument {
 public:
  explicit DNotPositiveError(const BigInt& d);
};

class DIsSquareError : public std::invalid_argument {
 public:
  explicit DIsSquareError(const BigInt& d);
};

/// A walk reached an unbalanced form, a zero total, or the run budget; this
/// signals an implementation bug, never bad input.
class InternalStateError : public std::logic_error {
 public:
  explicit InternalStateError(const std::string& what);
};

/// Rejects d <= 0 (DNotPositiveError) and perfect squares including 1
/// (DIsSquareError); returns d unchanged otherwise.
BigInt validate_d(const BigInt& d);

/// A solution of x^2 - D*y^2 = sign, sign being +1 or -1.
struct PellSolution {
  BigInt d;
  BigInt x;
  BigInt y;
  int sign = 1;

  bool operator==(const PellSolution&) const = default;
};

/// Witness that x^2 - D*y^2 = -1 is solvable, read off at the cycle's
/// center form (D, 0, -1).
struct NegPellCertificate {
  BigInt u1;           // u1^2 - D*v1^2 = -1
  BigInt v1;
  Mat2 m;              // product of half_word; shape (D*v1, u1; u1, v1)
  StepWord half_word;  // walk prefix ending exactly at the center; equals
                       // its own reversal with L and R interchanged

  bool operator==(const NegPellCertificate&) const = default;
};

/// Everything one cycle walk produces. N = mat_of_word(word) satisfies
/// N^T A N = A for A = (1, 0; 0, -D) and carries the fundamental solution
/// in its first column. With P = (u1, D*v1; v1, u1) from the certificate,
/// P*P == N.
struct CycleResult {
  BigInt d;
  StepWord word;
  Mat2 n;
  PellSolution fundamental;
  std::optional<NegPellCertificate> negative;
  /// Run-boundary states (form before each run, run taken), kept only on
  /// request; the final form is again (1, 0, -D).
  std::optional<std::vector<std::pair<Form, Run>>> trace;
};

struct SolveOptions {
  bool keep_trace = false;
  /// 0 = unbounded (the walk provably terminates); a positive bound turns a
  /// runaway walk into an InternalStateError.
  std::uint64_t max_runs = 0;
};

/// Walks the cycle of balanced forms from (1, 0, -D) back to itself with
/// maximal L/R runs, accumulating the step word and the matrix N. An R run
/// is truncated at offset -b when a == 1 and b < 0, which is exactly the
/// first return to the start form; an L run passing c == -1 with 0 < b < len
/// crosses the center (D, 0, -1) at offset b and yields the negative-Pell
/// certificate. Throws validate_d errors for bad d.
CycleResult solve(const BigInt& d, const SolveOptions& opts = {});

/// Reference walk: one step at a time by the sign of the total, recording
/// every intermediate form. Its letters aggregate to solve(d).word.
struct SingleStepWalk {
  StepWord word;
  std::vector<Form> forms;  // form after each step; the last is (1, 0, -D)
};
SingleStepWalk walk_single_step(const BigInt& d);

/// [Ne, N^2 e, ..., N^k e] with e = (1, 0); strictly increasing +1
/// solutions. k = 0 gives an empty list.
std::vector<PellSolution> iterate(const CycleResult& res, std::uint64_t k);

/// (x, y) -> (alpha*x + beta*y, gamma*x + delta*y) for N = (alpha, beta;
/// gamma, delta). When N^T A N = A this preserves x^2 - D*y^2.
std::pair<BigInt, BigInt> act(const Mat2& n, const std::pair<BigInt, BigInt>& v);

/// Test oracle: scans y = 1..y_bound for the first y making D*y^2 + 1 a
/// perfect square; by construction the minimal positive solution in range.
std::optional<PellSolution> brute_force_fundamental(const BigInt& d, const BigInt& y_bound);

/// Same scan for D*y^2 - 1 (the negative equation).
std::optional<PellSolution> brute_force_negative(const BigInt& d, const BigInt& y_bound);

struct CycleCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CycleCheck> checks;

  bool all_passed() const;
  std::string first_failure() const;
};

/// Re-derives every invariant of a cycle result and reports each as a named
/// pass/fail check; nothing is thrown. Trace checks run only when the trace
/// was kept, certificate checks only when one is present.
VerificationReport verify_cycle(const CycleResult& res);

}  // namespace pellwalk
