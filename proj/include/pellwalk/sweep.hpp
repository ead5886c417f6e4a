#pragma once

#include "pellwalk/cycle.hpp"

namespace pellwalk {

/// One solved D from a range sweep.
struct SweepRow {
  BigInt d;
  BigInt x;
  BigInt y;
  BigInt letters;        // cycle word length in single letters
  bool negative = false;  // negative-Pell certificate present

  bool operator==(const SweepRow&) const = default;
};

/// Rows for every nonsquare D in [d_min, d_max], ascending; perfect squares
/// are skipped silently. OpenMP-parallel over D with deterministic output
/// order. Throws std::invalid_argument unless 2 <= d_min <= d_max and the
/// range has fewer than 2^31 values.
std::vector<SweepRow> sweep_range(const BigInt& d_min, const BigInt& d_max);

/// Serial reference for sweep_range; byte-identical output, kept for
/// testing and benchmarking.
std::vector<SweepRow> sweep_range_serial(const BigInt& d_min, const BigInt& d_max);

}  // namespace pellwalk
