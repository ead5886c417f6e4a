#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pellwalk/cycle.hpp"

#include <set>
#include <vector>

using namespace pellwalk;

namespace {

const char* kWord61 =
    "R^7 L R^4 L^3 R L^2 R^2 L R^3 L^4 R L^14 R L^4 R^3 L R^2 L^2 R L^3 R^4 L R^7";

std::vector<long> nonsquares(long lo, long hi) {
  std::vector<long> out;
  for (long d = lo; d <= hi; ++d) {
    if (!is_square(BigInt(d))) {
      out.push_back(d);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("validate_d") {
  CHECK(validate_d(BigInt(61)) == 61);
  CHECK(validate_d(BigInt(2)) == 2);
  CHECK_THROWS_AS(validate_d(BigInt(4)), DIsSquareError);
  CHECK_THROWS_AS(validate_d(BigInt(9)), DIsSquareError);
  CHECK_THROWS_AS(validate_d(BigInt(1)), DIsSquareError);
  CHECK_THROWS_AS(validate_d(BigInt(0)), DNotPositiveError);
  CHECK_THROWS_AS(validate_d(BigInt(-7)), DNotPositiveError);
}

TEST_CASE("solve D=2 golden") {
  CycleResult res = solve(BigInt(2));
  CHECK(res.word.str() == "R L^2 R");
  CHECK(res.n == Mat2{3, 4, 2, 3});
  CHECK(res.fundamental == PellSolution{2, 3, 2, +1});

  REQUIRE(res.negative.has_value());
  CHECK(res.negative->u1 == 1);
  CHECK(res.negative->v1 == 1);
  CHECK(res.negative->m == Mat2{2, 1, 1, 1});
  CHECK(res.negative->half_word.str() == "R L");

  std::vector<PellSolution> sols = iterate(res, 4);
  REQUIRE(sols.size() == 4);
  CHECK(sols[0] == PellSolution{2, 3, 2, +1});
  CHECK(sols[1] == PellSolution{2, 17, 12, +1});
  CHECK(sols[2] == PellSolution{2, 99, 70, +1});
  CHECK(sols[3] == PellSolution{2, 577, 408, +1});
}

TEST_CASE("solve D=7 golden") {
  CycleResult res = solve(BigInt(7));
  CHECK(res.word.str() == "R^2 L R L R^2");
  CHECK(res.n == Mat2{8, 21, 3, 8});
  CHECK(res.fundamental == PellSolution{7, 8, 3, +1});
  CHECK_FALSE(res.negative.has_value());

  std::vector<PellSolution> sols = iterate(res, 3);
  REQUIRE(sols.size() == 3);
  CHECK(sols[0] == PellSolution{7, 8, 3, +1});
  CHECK(sols[1] == PellSolution{7, 127, 48, +1});
  CHECK(sols[2] == PellSolution{7, 2024, 765, +1});
}

TEST_CASE("solve D=61 golden") {
  CycleResult res = solve(BigInt(61));
  CHECK(res.word.str() == kWord61);
  CHECK(res.fundamental.x == BigInt("1766319049"));
  CHECK(res.fundamental.y == BigInt("226153980"));
  CHECK(res.n.e12 == BigInt("13795392780"));

  REQUIRE(res.negative.has_value());
  CHECK(res.negative->u1 == 29718);
  CHECK(res.negative->v1 == 3805);
  CHECK(res.negative->m == Mat2{232105, 29718, 29718, 3805});
  CHECK(res.negative->half_word.str() == "R^7 L R^4 L^3 R L^2 R^2 L R^3 L^4 R L^7");

  Mat2 p{res.negative->u1, 61 * res.negative->v1, res.negative->v1, res.negative->u1};
  CHECK(p * p == res.n);
}

TEST_CASE("walk_single_step golden walks") {
  SUBCASE("D=2") {
    SingleStepWalk walk = walk_single_step(BigInt(2));
    CHECK(walk.word.str() == "R L^2 R");
    std::vector<Form> expect{{1, 1, -1}, {2, 0, -1}, {1, -1, -1}, {1, 0, -2}};
    CHECK(walk.forms == expect);
  }
  SUBCASE("D=3") {
    SingleStepWalk walk = walk_single_step(BigInt(3));
    CHECK(walk.word.str() == "R L R");
    std::vector<Form> expect{{1, 1, -2}, {1, -1, -2}, {1, 0, -3}};
    CHECK(walk.forms == expect);

    CycleResult res = solve(BigInt(3));
    CHECK(res.n == Mat2{2, 3, 1, 2});
    CHECK(res.fundamental == PellSolution{3, 2, 1, +1});
  }
  SUBCASE("D=7") {
    SingleStepWalk walk = walk_single_step(BigInt(7));
    CHECK(walk.word.str() == "R^2 L R L R^2");
    std::vector<Form> expect{{1, 1, -6}, {1, 2, -3}, {2, -1, -3}, {2, 1, -3},
                             {1, -2, -3}, {1, -1, -6}, {1, 0, -7}};
    CHECK(walk.forms == expect);
  }
}

TEST_CASE("accelerated walk matches the single-step reference") {
  for (long d : nonsquares(2, 200)) {
    SingleStepWalk reference = walk_single_step(BigInt(d));
    CycleResult res = solve(BigInt(d));
    CHECK(reference.word == res.word);

    // Replaying the accelerated word letter by letter visits the same forms.
    std::set<std::string> walked;
    for (const Form& f : reference.forms) {
      walked.insert(f.a.get_str() + "," + f.b.get_str() + "," + f.c.get_str());
    }
    std::set<std::string> replayed;
    Form f{1, 0, -d};
    for (StepDir dir : res.word.expand()) {
      f = step(f, dir);
      replayed.insert(f.a.get_str() + "," + f.b.get_str() + "," + f.c.get_str());
    }
    CHECK(walked == replayed);
  }
}

TEST_CASE("act") {
  Mat2 n{3, 4, 2, 3};
  CHECK(act(n, {1, 0}) == std::pair<BigInt, BigInt>{3, 2});
  CHECK(act(n, {1, 1}) == std::pair<BigInt, BigInt>{7, 5});
  BigInt before = 1 * 1 - 2 * (1 * 1);
  BigInt after = 7 * 7 - 2 * (5 * 5);
  CHECK(before == after);
  CHECK(after == -1);
  CHECK(act(Mat2::identity(), {41, -3}) == std::pair<BigInt, BigInt>{41, -3});

  // e = (1,0) always maps to the first column.
  for (long d : {3L, 13L, 61L, 109L}) {
    Mat2 m = solve(BigInt(d)).n;
    CHECK(act(m, {1, 0}) == std::pair<BigInt, BigInt>{m.e11, m.e21});
  }
}

TEST_CASE("iterate") {
  CycleResult res = solve(BigInt(10));
  CHECK(iterate(res, 0).empty());

  std::vector<PellSolution> sols = iterate(res, 6);
  BigInt prev_x = 1;
  BigInt prev_y = 0;
  for (const PellSolution& s : sols) {
    CHECK(s.x * s.x - s.d * s.y * s.y == 1);
    CHECK(s.x > prev_x);
    CHECK(s.y > prev_y);
    prev_x = s.x;
    prev_y = s.y;
  }
  CHECK(act(res.n, {1, 0}) == std::pair<BigInt, BigInt>{res.n.e11, res.n.e21});
}

TEST_CASE("brute force oracles") {
  CHECK(*brute_force_fundamental(BigInt(2), BigInt(10)) == PellSolution{2, 3, 2, +1});
  CHECK(*brute_force_fundamental(BigInt(3), BigInt(10)) == PellSolution{3, 2, 1, +1});
  CHECK(*brute_force_fundamental(BigInt(5), BigInt(10)) == PellSolution{5, 9, 4, +1});
  CHECK_FALSE(brute_force_fundamental(BigInt(61), BigInt(1000)).has_value());

  CHECK(*brute_force_negative(BigInt(2), BigInt(10)) == PellSolution{2, 1, 1, -1});
  CHECK(*brute_force_negative(BigInt(5), BigInt(10)) == PellSolution{5, 2, 1, -1});
  CHECK_FALSE(brute_force_negative(BigInt(7), BigInt(10000)).has_value());

  CHECK_THROWS_AS(brute_force_fundamental(BigInt(4), BigInt(10)), DIsSquareError);
  CHECK_THROWS_AS(brute_force_negative(BigInt(-1), BigInt(10)), DNotPositiveError);
}

TEST_CASE("solve sweep invariants") {
  for (long d : nonsquares(2, 300)) {
    CAPTURE(d);
    CycleResult res = solve(BigInt(d));
    const PellSolution& s = res.fundamental;
    REQUIRE(s.x > 0);
    REQUIRE(s.y > 0);
    CHECK(s.x * s.x - d * s.y * s.y == 1);

    Mat2 a{1, 0, 0, -d};
    CHECK(res.n.transpose() * a * res.n == a);
    CHECK(res.n.e11 == res.n.e22);
    CHECK(res.n.e12 == d * res.n.e21);

    VerificationReport rep = verify_cycle(res);
    CHECK(rep.all_passed());
  }
}

TEST_CASE("negative certificates are sound and complete at small scale") {
  for (long d : nonsquares(2, 300)) {
    CycleResult res = solve(BigInt(d));
    if (res.negative) {
      CAPTURE(d);
      const NegPellCertificate& c = *res.negative;
      CHECK(c.u1 * c.u1 - d * c.v1 * c.v1 == -1);
      Mat2 p{c.u1, d * c.v1, c.v1, c.u1};
      CHECK(p * p == res.n);
    }
  }
  for (long d : {2L, 5L, 10L, 13L, 17L, 26L, 29L}) {
    CAPTURE(d);
    CHECK(brute_force_negative(BigInt(d), BigInt(1000)).has_value());
    CHECK(solve(BigInt(d)).negative.has_value());
  }
  for (long d : {3L, 7L, 11L, 12L, 15L, 19L, 23L}) {
    CAPTURE(d);
    CHECK_FALSE(brute_force_negative(BigInt(d), BigInt(10000)).has_value());
    CHECK_FALSE(solve(BigInt(d)).negative.has_value());
  }
}

TEST_CASE("no proper prefix of the word returns to the start") {
  for (long d : nonsquares(2, 200)) {
    CAPTURE(d);
    Form start{1, 0, -d};
    Form f = start;
    std::vector<StepDir> letters = solve(BigInt(d)).word.expand();
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      f = step(f, letters[i]);
      CHECK(f != start);
    }
    CHECK(step(f, letters.back()) == start);
  }
}

TEST_CASE("trace records the run boundaries") {
  SolveOptions opts;
  opts.keep_trace = true;
  CycleResult res = solve(BigInt(61), opts);
  REQUIRE(res.trace.has_value());
  const auto& tr = *res.trace;
  REQUIRE(tr.size() == 23);
  CHECK(tr[0].first == Form{1, 0, -61});
  CHECK(tr[0].second == Run{StepDir::R, 7});
  CHECK(tr[1].first == Form{1, 7, -12});
  CHECK(tr[11].first == Form{12, 7, -1});
  CHECK(tr[11].second == Run{StepDir::L, 14});
  CHECK(tr[12].first == Form{12, -7, -1});
  CHECK(tr[22].first == Form{1, -7, -12});

  VerificationReport rep = verify_cycle(res);
  CHECK(rep.all_passed());
  bool saw_trace_checks = false;
  for (const CycleCheck& c : rep.checks) {
    if (c.name == "trace_form_palindrome") {
      saw_trace_checks = true;
    }
  }
  CHECK(saw_trace_checks);
}

TEST_CASE("verify_cycle catches tampering") {
  CycleResult res = solve(BigInt(61));
  CHECK(verify_cycle(res).all_passed());

  CycleResult bad = res;
  bad.n.e12 += 1;
  VerificationReport rep = verify_cycle(bad);
  CHECK_FALSE(rep.all_passed());
  std::set<std::string> failed;
  for (const CycleCheck& c : rep.checks) {
    if (!c.passed) {
      failed.insert(c.name);
    }
  }
  CHECK(failed.count("n_fixes_pell_form") == 1);
  CHECK(failed.count("n_matches_word_product") == 1);

  CycleResult bad_word = res;
  bad_word.word = StepWord::parse("R L^2 R");
  rep = verify_cycle(bad_word);
  CHECK_FALSE(rep.all_passed());
}

TEST_CASE("run budget guards against runaway walks") {
  CHECK_THROWS_AS(solve(BigInt(61), SolveOptions{false, 5}), InternalStateError);
  CHECK_NOTHROW(solve(BigInt(61), SolveOptions{false, 23}));
}

TEST_CASE("solve handles a huge D with a short cycle") {
  // D = s^2 + 1 has word R^s L^2s R^s; x = 2s^2 + 1, y = 2s. Run lengths
  // this size are only reachable through the closed forms.
  BigInt s = 1;
  for (int i = 0; i < 20; ++i) {
    s *= 10;
  }
  BigInt d = s * s + 1;
  CycleResult res = solve(d);
  CHECK(res.fundamental.x == 2 * s * s + 1);
  CHECK(res.fundamental.y == 2 * s);
  REQUIRE(res.negative.has_value());
  CHECK(res.negative->u1 == s);   // s^2 - (s^2+1) = -1
  CHECK(res.negative->v1 == 1);
  CHECK(verify_cycle(res).all_passed());
}
