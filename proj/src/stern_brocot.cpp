#include "pellwalk/stern_brocot.hpp"

#include <stdexcept>

namespace pellwalk {

Fraction fraction_of_word(const StepWord& w) {
  Mat2 m = mat_of_word(w);
  return Fraction{m.e11 + m.e12, m.e21 + m.e22};
}

std::vector<Fraction> convergents(const BigInt& d, std::size_t count) {
  if (count == 0) {
    throw std::invalid_argument("convergents: count must be positive");
  }
  CycleResult res = solve(d);

  std::vector<Fraction> out;
  out.reserve(count);
  Mat2 m = Mat2::identity();
  while (out.size() < count) {
    for (const Run& r : res.word.runs()) {
      const Mat2 letter = mat_of_run(Run{r.dir, 1});
      for (BigInt i = 0; i < r.len; ++i) {
        m = m * letter;
        out.push_back(Fraction{m.e11 + m.e12, m.e21 + m.e22});
        if (out.size() == count) {
          return out;
        }
      }
    }
  }
  return out;
}

BigInt prefix_value(const BigInt& d, const StepWord& w_prefix) {
  validate_d(d);
  Fraction f = fraction_of_word(w_prefix);
  return f.p * f.p - d * f.q * f.q;
}

}  // namespace pellwalk
