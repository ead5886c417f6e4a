#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pellwalk/sweep.hpp"

#include <stdexcept>

using namespace pellwalk;

TEST_CASE("parallel sweep matches the serial reference") {
  std::vector<SweepRow> parallel = sweep_range(BigInt(2), BigInt(400));
  std::vector<SweepRow> serial = sweep_range_serial(BigInt(2), BigInt(400));
  REQUIRE(parallel.size() == serial.size());
  CHECK(parallel == serial);
}

TEST_CASE("sweep rows carry the solve results in ascending order") {
  std::vector<SweepRow> rows = sweep_range(BigInt(2), BigInt(30));
  BigInt prev = 1;
  for (const SweepRow& row : rows) {
    CHECK(row.d > prev);
    prev = row.d;
    CHECK_FALSE(is_square(row.d));
    CHECK(row.x * row.x - row.d * row.y * row.y == 1);

    CycleResult res = solve(row.d);
    CHECK(row.x == res.fundamental.x);
    CHECK(row.y == res.fundamental.y);
    CHECK(row.letters == res.word.letters());
    CHECK(row.negative == res.negative.has_value());
  }

  // 29 values in [2,30] minus the squares 4, 9, 16, 25.
  CHECK(rows.size() == 25);
  CHECK(rows.front().d == 2);
  CHECK(rows.front().x == 3);
  CHECK(rows.front().y == 2);
  CHECK(rows.front().letters == 4);
  CHECK(rows.front().negative);

  std::vector<SweepRow> just61 = sweep_range(BigInt(61), BigInt(61));
  REQUIRE(just61.size() == 1);
  CHECK(just61[0].x == BigInt("1766319049"));
  CHECK(just61[0].letters == 72);
}

TEST_CASE("square-only ranges give empty sweeps") {
  CHECK(sweep_range(BigInt(4), BigInt(4)).empty());
  CHECK(sweep_range(BigInt(9), BigInt(9)).empty());
}

TEST_CASE("sweep rejects malformed ranges") {
  CHECK_THROWS_AS(sweep_range(BigInt(3), BigInt(2)), std::invalid_argument);
  CHECK_THROWS_AS(sweep_range(BigInt(1), BigInt(5)), std::invalid_argument);
  CHECK_THROWS_AS(sweep_range(BigInt(0), BigInt(5)), std::invalid_argument);
  CHECK_THROWS_AS(sweep_range_serial(BigInt(-2), BigInt(5)), std::invalid_argument);
}
