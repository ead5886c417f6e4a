#include "pellwalk/bigint.hpp"

#include <stdexcept>
#include <string>

namespace pellwalk {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) {
    throw std::domain_error("isqrt: negative input " + n.get_str());
  }
  if (n == 0) {
    return 0;
  }
  // Start from 2^ceil(bits/2) >= sqrt(n); Newton strictly decreases until it
  // reaches the floor, at which point the next iterate stops shrinking.
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  BigInt r = 1;
  r <<= (bits + 1) / 2;
  for (;;) {
    BigInt next = (r + n / r) >> 1;
    if (next >= r) {
      break;
    }
    r = next;
  }
  while (r * r > n) {
    --r;
  }
  while ((r + 1) * (r + 1) <= n) {
    ++r;
  }
  return r;
}

bool is_square(const BigInt& n) {
  if (n < 0) {
    return false;
  }
  BigInt r = isqrt(n);
  return r * r == n;
}

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') {
    ++i;
  }
  if (i == text.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text), 10);
}

}  // namespace pellwalk
