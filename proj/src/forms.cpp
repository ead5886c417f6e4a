#include "pellwalk/forms.hpp"

#include <stdexcept>

namespace pellwalk {

StepDir opposite(StepDir dir) {
  return dir == StepDir::L ? StepDir::R : StepDir::L;
}

char letter_of(StepDir dir) {
  return dir == StepDir::L ? 'L' : 'R';
}

BigInt total(const Form& f) {
  return f.a + 2 * f.b + f.c;
}

BigInt determinant(const Form& f) {
  return f.a * f.c - f.b * f.b;
}

bool is_balanced(const Form& f) {
  return f.a > 0 && f.c < 0;
}

Form step_right(const Form& f) {
  return Form{f.a, f.a + f.b, f.a + 2 * f.b + f.c};
}

Form step_left(const Form& f) {
  return Form{f.a + 2 * f.b + f.c, f.b + f.c, f.c};
}

Form step(const Form& f, StepDir dir) {
  return dir == StepDir::R ? step_right(f) : step_left(f);
}

Form run_right(const Form& f, const BigInt& n) {
  if (n < 0) {
    throw std::invalid_argument("run_right: negative length");
  }
  return Form{f.a, f.b + f.a * n, f.c + 2 * f.b * n + f.a * n * n};
}

Form run_left(const Form& f, const BigInt& m) {
  if (m < 0) {
    throw std::invalid_argument("run_left: negative length");
  }
  return Form{f.a + 2 * f.b * m + f.c * m * m, f.b + f.c * m, f.c};
}

Form run(const Form& f, StepDir dir, const BigInt& len) {
  return dir == StepDir::R ? run_right(f, len) : run_left(f, len);
}

Form invert_step(const Form& f, StepDir dir) {
  if (dir == StepDir::L) {
    return Form{f.a - 2 * f.b + f.c, f.b - f.c, f.c};
  }
  return Form{f.a, f.b - f.a, f.a - 2 * f.b + f.c};
}

StepDir classify_step(const Form& /*pred*/, const Form& succ) {
  BigInt marker = succ.a - 2 * succ.b + succ.c;
  if (marker == 0) {
    throw std::invalid_argument("classify_step: a' - 2b' + c' is zero");
  }
  return marker > 0 ? StepDir::L : StepDir::R;
}

namespace {

// Trailing coefficient after R^k: c + 2bk + ak^2.
BigInt quad_after_right(const Form& f, const BigInt& k) {
  return f.c + 2 * f.b * k + f.a * k * k;
}

// Leading coefficient after L^l: a + 2bl + cl^2.
BigInt quad_after_left(const Form& f, const BigInt& l) {
  return f.a + 2 * f.b * l + f.c * l * l;
}

BigInt search_right(const Form& f) {
  BigInt k = 1;
  while (quad_after_right(f, k) < 0) {
    ++k;
  }
  return k - 1;
}

BigInt search_left(const Form& f) {
  BigInt l = 1;
  while (quad_after_left(f, l) > 0) {
    ++l;
  }
  return l - 1;
}

}  // namespace

Run max_run(const Form& f, const BigInt& d) {
  if (d < 0) {
    throw std::invalid_argument("max_run: D must be positive");
  }
  return max_run(f, d, isqrt(d));
}

Run max_run(const Form& f, const BigInt& d, const BigInt& sqrt_d) {
  if (!is_balanced(f)) {
    throw std::invalid_argument("max_run: form is not balanced");
  }
  if (determinant(f) != -d) {
    throw std::invalid_argument("max_run: determinant is not -D");
  }
  if (sqrt_d * sqrt_d == d) {
    throw std::invalid_argument("max_run: D is a square");
  }
  BigInt t = total(f);
  if (t == 0) {
    throw std::invalid_argument("max_run: total is zero");
  }
  if (t < 0) {
    // Largest n keeping the trailing coefficient negative. sqrt(D) is
    // irrational here, so flooring with isqrt(D) is exact; the boundary
    // check guards the closed form anyway.
    BigInt n = floor_div(sqrt_d - f.b, f.a);
    if (n < 1 || quad_after_right(f, n) >= 0 || quad_after_right(f, n + 1) <= 0) {
      n = search_right(f);
    }
    return Run{StepDir::R, n};
  }
  BigInt m = floor_div(sqrt_d + f.b, -f.c);
  if (m < 1 || quad_after_left(f, m) <= 0 || quad_after_left(f, m + 1) >= 0) {
    m = search_left(f);
  }
  return Run{StepDir::L, m};
}

}  // namespace pellwalk
