#pragma once

#include "pellwalk/forms.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pellwalk {

/// Run-length encoded L/R step sequence. Canonical form: adjacent runs of
/// the same direction are merged on append, so the stored runs strictly
/// alternate (e.g. appending L^7 twice stores L^14).
///
/// Text format: runs separated by single spaces, each run "R" or "L"
/// optionally followed by '^' and a decimal exponent >= 2; exponent 1 is
/// omitted. The empty word renders as "".
class StepWord {
 public:
  StepWord() = default;

  /// Parses the text format above. Throws std::invalid_argument on anything
  /// outside the grammar (unknown letters, "^1", stray spaces, ...).
  static StepWord parse(std::string_view text);

  /// Appends len steps in one direction, merging with the last run when the
  /// direction matches. Throws std::invalid_argument for len < 1.
  void append(StepDir dir, const BigInt& len = 1);
  void append(const Run& r);
  void append(const StepWord& w);

  const std::vector<Run>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }

  /// Total number of single letters (sum of run lengths).
  BigInt letters() const;

  std::string str() const;

  /// Run sequence reversed equals the run sequence itself.
  bool is_run_palindrome() const;

  /// Run sequence reversed with L and R interchanged; a negative-Pell half
  /// word equals this transform of itself.
  StepWord reversed_interchanged() const;

  /// Expanded letter-by-letter sequence. Throws std::length_error when the
  /// word has more than `cap` letters.
  std::vector<StepDir> expand(std::size_t cap = std::size_t{1} << 22) const;

  bool operator==(const StepWord&) const = default;

 private:
  std::vector<Run> runs_;
};

}  // namespace pellwalk
