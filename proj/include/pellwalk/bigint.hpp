#pragma once

#include <gmpxx.h>

#include <string_view>

namespace pellwalk {

using BigInt = mpz_class;

/// floor(a / b), rounding toward negative infinity. b must be nonzero.
BigInt floor_div(const BigInt& a, const BigInt& b);

/// floor(sqrt(n)) by integer Newton iteration with a monotone correction
/// loop; the result r satisfies r^2 <= n < (r+1)^2 exactly.
/// Throws std::domain_error for negative n.
BigInt isqrt(const BigInt& n);

/// True iff n >= 0 and isqrt(n)^2 == n.
bool is_square(const BigInt& n);

/// Strict decimal parse: optional leading '-', then digits, nothing else.
/// Throws std::invalid_argument otherwise.
BigInt parse_bigint(std::string_view text);

}  // namespace pellwalk
