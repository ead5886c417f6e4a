#include "pellwalk/sweep.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace pellwalk {

namespace {

std::int64_t range_size(const BigInt& d_min, const BigInt& d_max) {
  if (d_min < 2 || d_min > d_max) {
    throw std::invalid_argument("sweep: need 2 <= d_min <= d_max, got [" + d_min.get_str() +
                                ", " + d_max.get_str() + "]");
  }
  BigInt count = d_max - d_min + 1;
  if (count >= (BigInt(1) << 31)) {
    throw std::invalid_argument("sweep: range of " + count.get_str() + " values is too large");
  }
  return count.get_si();
}

SweepRow row_for(const BigInt& d) {
  CycleResult res = solve(d);
  return SweepRow{d, res.fundamental.x, res.fundamental.y, res.word.letters(),
                  res.negative.has_value()};
}

std::vector<SweepRow> collect(std::vector<std::optional<SweepRow>>&& slots) {
  std::vector<SweepRow> rows;
  rows.reserve(slots.size());
  for (auto& slot : slots) {
    if (slot) {
      rows.push_back(std::move(*slot));
    }
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> sweep_range(const BigInt& d_min, const BigInt& d_max) {
  const std::int64_t n = range_size(d_min, d_max);
  std::vector<std::optional<SweepRow>> slots(static_cast<std::size_t>(n));

  bool failed = false;
  std::string error;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    BigInt d = d_min + i;
    if (is_square(d)) {
      continue;
    }
    try {
      slots[static_cast<std::size_t>(i)] = row_for(d);
    } catch (const std::exception& e) {
#pragma omp critical(pellwalk_sweep_error)
      {
        failed = true;
        if (error.empty()) {
          error = e.what();
        }
      }
    }
  }
  if (failed) {
    throw InternalStateError("sweep worker failed: " + error);
  }
  return collect(std::move(slots));
}

std::vector<SweepRow> sweep_range_serial(const BigInt& d_min, const BigInt& d_max) {
  const std::int64_t n = range_size(d_min, d_max);
  std::vector<std::optional<SweepRow>> slots(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    BigInt d = d_min + i;
    if (!is_square(d)) {
      slots[static_cast<std::size_t>(i)] = row_for(d);
    }
  }
  return collect(std::move(slots));
}

}  // namespace pellwalk
