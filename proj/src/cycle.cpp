#include "pellwalk/cycle.hpp"

namespace pellwalk {

DNotPositiveError::DNotPositiveError(const BigInt& d)
    : std::invalid_argument("DNotPositive: D must be positive, got " + d.get_str()) {}

DIsSquareError::DIsSquareError(const BigInt& d)
    : std::invalid_argument("DIsSquare: D must not be a perfect square, got " + d.get_str() +
                            " = " + isqrt(d).get_str() + "^2") {}

InternalStateError::InternalStateError(const std::string& what)
    : std::logic_error("InternalStateError: " + what) {}

BigInt validate_d(const BigInt& d) {
  if (d <= 0) {
    throw DNotPositiveError(d);
  }
  BigInt r = isqrt(d);
  if (r * r == d) {
    throw DIsSquareError(d);
  }
  return d;
}

namespace {

std::string form_str(const Form& f) {
  return "(" + f.a.get_str() + "," + f.b.get_str() + "," + f.c.get_str() + ")";
}

void check_walk_state(const Form& f, const BigInt& d) {
  if (!is_balanced(f)) {
    throw InternalStateError("unbalanced form " + form_str(f) + " on the walk for D=" +
                             d.get_str());
  }
  if (total(f) == 0) {
    throw InternalStateError("zero total at " + form_str(f) + " on the walk for D=" +
                             d.get_str());
  }
}

}  // namespace

CycleResult solve(const BigInt& d, const SolveOptions& opts) {
  validate_d(d);
  const BigInt sqrt_d = isqrt(d);
  const Form start{1, 0, -d};

  Form f = start;
  StepWord word;
  Mat2 n = Mat2::identity();
  std::optional<NegPellCertificate> negative;
  std::optional<std::vector<std::pair<Form, Run>>> trace;
  if (opts.keep_trace) {
    trace.emplace();
  }

  std::uint64_t runs_taken = 0;
  for (;;) {
    if (opts.max_runs != 0 && runs_taken >= opts.max_runs) {
      throw InternalStateError("run budget " + std::to_string(opts.max_runs) +
                               " exceeded for D=" + d.get_str());
    }
    check_walk_state(f, d);
    Run r = max_run(f, d, sqrt_d);
    bool finishing = false;
    if (r.dir == StepDir::R) {
      // The walk returns to (1,0,-D) only inside an R run: b climbs by
      // a == 1 per step and hits zero at offset -b, where the determinant
      // forces c = -D. Truncate there.
      BigInt back = -f.b;
      if (f.a == 1 && f.b < 0 && back <= r.len) {
        r.len = back;
        finishing = true;
      }
    } else if (f.c == -1 && f.b > 0 && f.b < r.len) {
      // Center crossing: after b left steps from (a, b, -1) the middle
      // entry vanishes and the determinant forces (D, 0, -1). The total
      // there is D - 1 > 0, so the run always continues past it.
      if (negative) {
        throw InternalStateError("second center crossing for D=" + d.get_str());
      }
      StepWord half = word;
      half.append(StepDir::L, f.b);
      Mat2 m = n * mat_of_run(Run{StepDir::L, f.b});
      negative = NegPellCertificate{m.e12, m.e22, m, half};
    }
    if (trace) {
      trace->emplace_back(f, r);
    }
    f = run(f, r.dir, r.len);
    n = n * mat_of_run(r);
    word.append(r);
    ++runs_taken;
    if (finishing) {
      if (f != start) {
        throw InternalStateError("truncated run missed the start form for D=" + d.get_str());
      }
      break;
    }
  }

  PellSolution fundamental{d, n.e11, n.e21, +1};
  return CycleResult{d, std::move(word), std::move(n), std::move(fundamental),
                     std::move(negative), std::move(trace)};
}

SingleStepWalk walk_single_step(const BigInt& d) {
  validate_d(d);
  const Form start{1, 0, -d};

  SingleStepWalk out;
  Form f = start;
  for (;;) {
    check_walk_state(f, d);
    StepDir dir = total(f) < 0 ? StepDir::R : StepDir::L;
    f = step(f, dir);
    out.word.append(dir, 1);
    out.forms.push_back(f);
    if (f == start) {
      return out;
    }
  }
}

std::vector<PellSolution> iterate(const CycleResult& res, std::uint64_t k) {
  std::vector<PellSolution> out;
  out.reserve(k);
  std::pair<BigInt, BigInt> v{1, 0};
  for (std::uint64_t i = 0; i < k; ++i) {
    v = act(res.n, v);
    out.push_back(PellSolution{res.d, v.first, v.second, +1});
  }
  return out;
}

std::pair<BigInt, BigInt> act(const Mat2& n, const std::pair<BigInt, BigInt>& v) {
  return {n.e11 * v.first + n.e12 * v.second, n.e21 * v.first + n.e22 * v.second};
}

std::optional<PellSolution> brute_force_fundamental(const BigInt& d, const BigInt& y_bound) {
  validate_d(d);
  for (BigInt y = 1; y <= y_bound; ++y) {
    BigInt t = d * y * y + 1;
    BigInt x = isqrt(t);
    if (x * x == t) {
      return PellSolution{d, x, y, +1};
    }
  }
  return std::nullopt;
}

std::optional<PellSolution> brute_force_negative(const BigInt& d, const BigInt& y_bound) {
  validate_d(d);
  for (BigInt y = 1; y <= y_bound; ++y) {
    BigInt t = d * y * y - 1;
    BigInt x = isqrt(t);
    if (x * x == t) {
      return PellSolution{d, x, y, -1};
    }
  }
  return std::nullopt;
}

namespace {

// Replays a word run by run from (1,0,-D), requiring every run-boundary
// form to be balanced of determinant -D. That covers the interiors too:
// along an R run the trailing coefficient is convex in the offset and
// negative at both ends, along an L run the leading coefficient is concave
// and positive at both ends, so neither can change sign strictly inside.
bool replay_balanced(const BigInt& d, const StepWord& w, Form* final_form) {
  Form f{1, 0, -d};
  for (const Run& r : w.runs()) {
    f = run(f, r.dir, r.len);
    if (!is_balanced(f) || determinant(f) != -d) {
      return false;
    }
  }
  if (final_form) {
    *final_form = f;
  }
  return true;
}

}  // namespace

bool VerificationReport::all_passed() const {
  for (const CycleCheck& c : checks) {
    if (!c.passed) {
      return false;
    }
  }
  return true;
}

std::string VerificationReport::first_failure() const {
  for (const CycleCheck& c : checks) {
    if (!c.passed) {
      return c.detail.empty() ? c.name : c.name + ": " + c.detail;
    }
  }
  return "";
}

VerificationReport verify_cycle(const CycleResult& res) {
  VerificationReport rep;
  auto add = [&rep](std::string name, bool ok, std::string detail = "") {
    rep.checks.push_back(CycleCheck{std::move(name), ok, std::move(detail)});
  };

  const BigInt& d = res.d;
  const Mat2 a{1, 0, 0, -d};

  add("n_matches_word_product", res.n == mat_of_word(res.word));

  Mat2 conj = res.n.transpose() * a * res.n;
  add("n_fixes_pell_form", conj == a, "N^T A N != A");

  bool shape = res.n.e11 > 0 && res.n.e12 > 0 && res.n.e21 > 0 && res.n.e22 > 0 &&
               res.n.e11 == res.n.e22 && res.n.e12 == d * res.n.e21;
  add("n_shape", shape, "N is not a positive (u, Dv; v, u)");

  const PellSolution& s = res.fundamental;
  bool fund = s.d == d && s.sign == 1 && s.x == res.n.e11 && s.y == res.n.e21 && s.x > 0 &&
              s.y > 0 && s.x * s.x - d * s.y * s.y == 1;
  add("fundamental_solution", fund);

  add("word_run_palindrome", res.word.is_run_palindrome());
  bool ends = !res.word.empty() && res.word.runs().front().dir == StepDir::R &&
              res.word.runs().back().dir == StepDir::R;
  add("word_starts_and_ends_right", ends);

  Form final_form{0, 0, 0};
  bool replay = !res.word.empty() && replay_balanced(d, res.word, &final_form) &&
                final_form == Form{1, 0, -d};
  add("replay_returns_to_start", replay);

  if (res.negative) {
    const NegPellCertificate& c = *res.negative;
    bool neg = c.u1 > 0 && c.v1 > 0 && c.u1 * c.u1 - d * c.v1 * c.v1 == -1;
    add("certificate_solves_negative_pell", neg);
    add("certificate_matrix_matches_half_word", c.m == mat_of_word(c.half_word));
    bool mshape = c.m.e11 == d * c.m.e22 && c.m.e12 == c.m.e21 && c.m.e12 == c.u1 &&
                  c.m.e22 == c.v1;
    add("certificate_matrix_shape", mshape, "M is not (Dv1, u1; u1, v1)");
    Mat2 p{c.u1, d * c.v1, c.v1, c.u1};
    add("certificate_squares_to_n", p * p == res.n, "P^2 != N");
    add("certificate_half_word_antipalindrome",
        c.half_word == c.half_word.reversed_interchanged());
    Form center{0, 0, 0};
    bool reaches = replay_balanced(d, c.half_word, &center) && center == Form{d, 0, -1};
    add("certificate_half_word_reaches_center", reaches);
  }

  if (res.trace) {
    const auto& tr = *res.trace;
    bool consistent = !tr.empty() && tr.size() == res.word.runs().size();
    Form f{1, 0, -d};
    for (std::size_t i = 0; consistent && i < tr.size(); ++i) {
      consistent = tr[i].first == f && tr[i].second == res.word.runs()[i];
      f = run(f, tr[i].second.dir, tr[i].second.len);
    }
    consistent = consistent && f == Form{1, 0, -d};
    add("trace_consistent", consistent);

    // Boundary forms, the closing start form included, read the same from
    // both ends once the middle coefficient is negated.
    bool palin = consistent;
    if (palin) {
      std::vector<Form> forms;
      forms.reserve(tr.size() + 1);
      for (const auto& [form, _] : tr) {
        forms.push_back(form);
      }
      forms.push_back(Form{1, 0, -d});
      std::size_t k = forms.size() - 1;
      for (std::size_t i = 0; i <= k; ++i) {
        const Form& lhs = forms[i];
        const Form& rhs = forms[k - i];
        if (lhs.a != rhs.a || lhs.b != -rhs.b || lhs.c != rhs.c) {
          palin = false;
          break;
        }
      }
    }
    add("trace_form_palindrome", palin);
  }

  return rep;
}

}  // namespace pellwalk
