// Command-line front end: solve, word, approx, table, verify.
//
// Exit codes: 0 success, 2 usage or input error, 1 internal verification
// failure. Results go to stdout, diagnostics to stderr. --json switches
// every subcommand to a single JSON document with big integers rendered as
// decimal strings.

#include "pellwalk/stern_brocot.hpp"
#include "pellwalk/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace pellwalk;

namespace {

std::string dec(const BigInt& v) {
  return v.get_str();
}

std::string form_str(const Form& f) {
  return "(" + dec(f.a) + "," + dec(f.b) + "," + dec(f.c) + ")";
}

std::string run_str(const Run& r) {
  std::string s(1, letter_of(r.dir));
  if (r.len > 1) {
    s += "^" + dec(r.len);
  }
  return s;
}

json letters_json(const BigInt& letters) {
  // Word lengths are counts; emit a plain number whenever one fits.
  if (letters.fits_ulong_p()) {
    return json(letters.get_ui());
  }
  return json(dec(letters));
}

int cmd_solve(const BigInt& d, std::uint64_t count, bool want_negative, bool want_trace,
              bool as_json) {
  SolveOptions opts;
  opts.keep_trace = want_trace;
  CycleResult res = solve(d, opts);

  VerificationReport rep = verify_cycle(res);
  if (!rep.all_passed()) {
    std::cerr << "internal verification failed for D=" << dec(d) << ": "
              << rep.first_failure() << "\n";
    return 1;
  }
  std::vector<PellSolution> sols = iterate(res, count);

  if (as_json) {
    json doc;
    doc["d"] = dec(d);
    doc["word"] = res.word.str();
    doc["n"] = {dec(res.n.e11), dec(res.n.e12), dec(res.n.e21), dec(res.n.e22)};
    doc["x"] = dec(res.fundamental.x);
    doc["y"] = dec(res.fundamental.y);
    json arr = json::array();
    for (const PellSolution& s : sols) {
      arr.push_back({dec(s.x), dec(s.y)});
    }
    doc["solutions"] = std::move(arr);
    if (res.negative) {
      doc["negative"] = {{"u1", dec(res.negative->u1)}, {"v1", dec(res.negative->v1)}};
    } else {
      doc["negative"] = nullptr;
    }
    if (want_trace && res.trace) {
      json forms = json::array();
      json runs = json::array();
      for (const auto& [form, r] : *res.trace) {
        forms.push_back({dec(form.a), dec(form.b), dec(form.c)});
        runs.push_back(run_str(r));
      }
      forms.push_back({dec(BigInt(1)), dec(BigInt(0)), dec(BigInt(-d))});
      doc["trace"] = {{"forms", std::move(forms)}, {"runs", std::move(runs)}};
    }
    std::cout << doc.dump() << "\n";
    return 0;
  }

  std::cout << "D: " << dec(d) << "\n";
  std::cout << "word: " << res.word.str() << "\n";
  if (want_trace && res.trace) {
    std::cout << "trace:";
    for (const auto& [form, r] : *res.trace) {
      std::cout << " " << form_str(form) << " " << run_str(r);
    }
    std::cout << " " << form_str(Form{1, 0, -d}) << "\n";
  }
  std::cout << "N: " << dec(res.n.e11) << " " << dec(res.n.e12) << " " << dec(res.n.e21)
            << " " << dec(res.n.e22) << "\n";
  std::cout << "fundamental: " << dec(res.fundamental.x) << " " << dec(res.fundamental.y)
            << "\n";
  for (std::size_t i = 0; i < sols.size(); ++i) {
    std::cout << "solution " << (i + 1) << ": " << dec(sols[i].x) << " " << dec(sols[i].y)
              << "\n";
  }
  if (want_negative) {
    if (res.negative) {
      std::cout << "negative: u1=" << dec(res.negative->u1) << " v1=" << dec(res.negative->v1)
                << "\n";
      const Mat2& m = res.negative->m;
      std::cout << "M: " << dec(m.e11) << " " << dec(m.e12) << " " << dec(m.e21) << " "
                << dec(m.e22) << "\n";
    } else {
      std::cout << "negative: none\n";
    }
  }
  return 0;
}

int cmd_word(const BigInt& d, bool as_json) {
  CycleResult res = solve(d);
  if (as_json) {
    json doc;
    doc["d"] = dec(d);
    doc["word"] = res.word.str();
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << res.word.str() << "\n";
  }
  return 0;
}

int cmd_approx(const BigInt& d, std::int64_t count, bool as_json) {
  if (count < 1) {
    throw std::invalid_argument("approx: count must be >= 1");
  }
  std::vector<Fraction> fr = convergents(d, static_cast<std::size_t>(count));
  if (as_json) {
    json doc;
    doc["d"] = dec(d);
    json arr = json::array();
    for (const Fraction& f : fr) {
      arr.push_back(f.str());
    }
    doc["convergents"] = std::move(arr);
    std::cout << doc.dump() << "\n";
  } else {
    for (const Fraction& f : fr) {
      std::cout << f.str() << "\n";
    }
  }
  return 0;
}

int cmd_table(const BigInt& d_min, const BigInt& d_max, bool as_json) {
  std::vector<SweepRow> rows = sweep_range(d_min, d_max);
  if (as_json) {
    json doc;
    doc["d_min"] = dec(d_min);
    doc["d_max"] = dec(d_max);
    json arr = json::array();
    for (const SweepRow& row : rows) {
      json r;
      r["d"] = dec(row.d);
      r["x"] = dec(row.x);
      r["y"] = dec(row.y);
      r["letters"] = letters_json(row.letters);
      r["negative"] = row.negative;
      arr.push_back(std::move(r));
    }
    doc["rows"] = std::move(arr);
    std::cout << doc.dump() << "\n";
  } else {
    for (const SweepRow& row : rows) {
      std::cout << dec(row.d) << " " << dec(row.x) << " " << dec(row.y) << " "
                << dec(row.letters) << " " << (row.negative ? "yes" : "no") << "\n";
    }
  }
  return 0;
}

int cmd_verify(const BigInt& d, const BigInt& x, const BigInt& y, bool as_json) {
  CycleResult res = solve(d);
  BigInt value = x * x - d * y * y;
  std::pair<BigInt, BigInt> next = act(res.n, {x, y});
  if (as_json) {
    json doc;
    doc["d"] = dec(d);
    doc["x"] = dec(x);
    doc["y"] = dec(y);
    doc["value"] = dec(value);
    doc["next"] = {dec(next.first), dec(next.second)};
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "n: " << dec(value) << "\n";
    std::cout << "next: " << dec(next.first) << " " << dec(next.second) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pell equation solver walking the cycle of balanced quadratic forms"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit one JSON document (big integers as decimal strings)");
  auto add_json_flag = [&as_json](CLI::App* sc) {
    sc->add_flag("--json", as_json, "emit one JSON document");
  };

  std::string d_text;
  std::uint64_t count = 1;
  bool want_negative = false;
  bool want_trace = false;
  CLI::App* sc_solve = app.add_subcommand("solve", "solve x^2 - D y^2 = 1");
  sc_solve->add_option("D", d_text, "positive nonsquare integer")->required();
  sc_solve->add_option("--count", count, "number of iterated solutions to print (default 1)");
  sc_solve->add_flag("--negative", want_negative, "report the negative-Pell certificate");
  sc_solve->add_flag("--trace", want_trace, "print the visited forms at run boundaries");
  add_json_flag(sc_solve);

  CLI::App* sc_word = app.add_subcommand("word", "print only the cycle word");
  sc_word->add_option("D", d_text, "positive nonsquare integer")->required();
  add_json_flag(sc_word);

  std::int64_t approx_count = 1;
  CLI::App* sc_approx = app.add_subcommand("approx", "rational approximations to sqrt(D)");
  sc_approx->add_option("D", d_text, "positive nonsquare integer")->required();
  sc_approx->add_option("--count", approx_count, "number of convergents (default 1)");
  add_json_flag(sc_approx);

  std::string d_min_text;
  std::string d_max_text;
  CLI::App* sc_table = app.add_subcommand("table", "solve every nonsquare D in a range");
  sc_table->add_option("D_min", d_min_text, "first D")->required();
  sc_table->add_option("D_max", d_max_text, "last D")->required();
  add_json_flag(sc_table);

  std::string x_text;
  std::string y_text;
  CLI::App* sc_verify =
      app.add_subcommand("verify", "evaluate x^2 - D y^2 and produce the next solution");
  sc_verify->add_option("D", d_text, "positive nonsquare integer")->required();
  sc_verify->add_option("x", x_text, "integer")->required();
  sc_verify->add_option("y", y_text, "integer")->required();
  add_json_flag(sc_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*sc_solve) {
      return cmd_solve(validate_d(parse_bigint(d_text)), count, want_negative, want_trace,
                       as_json);
    }
    if (*sc_word) {
      return cmd_word(validate_d(parse_bigint(d_text)), as_json);
    }
    if (*sc_approx) {
      return cmd_approx(validate_d(parse_bigint(d_text)), approx_count, as_json);
    }
    if (*sc_table) {
      return cmd_table(parse_bigint(d_min_text), parse_bigint(d_max_text), as_json);
    }
    if (*sc_verify) {
      return cmd_verify(validate_d(parse_bigint(d_text)), parse_bigint(x_text),
                        parse_bigint(y_text), as_json);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
