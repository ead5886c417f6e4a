#pragma once

#include "pellwalk/cycle.hpp"

namespace pellwalk {

/// Positive reduced fraction p/q. Column sums of determinant-1 non-negative
/// matrices are coprime, so fractions built from words need no reduction.
struct Fraction {
  BigInt p;
  BigInt q;

  std::string str() const { return p.get_str() + "/" + q.get_str(); }

  bool operator==(const Fraction&) const = default;
};

/// The Stern-Brocot node a word leads to: column sums of mat_of_word(w).
/// The empty word gives the root 1/1.
Fraction fraction_of_word(const StepWord& w);

/// Fractions of the first `count` single-letter prefixes of the infinite
/// word formed by repeating solve(d).word. Descends the tree one mediant
/// per letter; successive entries approximate sqrt(D). Throws validate_d
/// errors and std::invalid_argument for count == 0.
std::vector<Fraction> convergents(const BigInt& d, std::size_t count);

/// p^2 - D*q^2 for (p, q) = fraction_of_word(w_prefix). When w_prefix is a
/// prefix of the repeated cycle word this equals the total of the form the
/// prefix reaches from (1, 0, -D).
BigInt prefix_value(const BigInt& d, const StepWord& w_prefix);

}  // namespace pellwalk
