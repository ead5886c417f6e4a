#include "pellwalk/mat2.hpp"

namespace pellwalk {

Mat2 mat_of_run(const Run& r) {
  if (r.dir == StepDir::R) {
    return Mat2{1, r.len, 0, 1};
  }
  return Mat2{1, 0, r.len, 1};
}

Mat2 mat_of_word(const StepWord& w) {
  Mat2 m = Mat2::identity();
  for (const Run& r : w.runs()) {
    m = m * mat_of_run(r);
  }
  return m;
}

}  // namespace pellwalk
