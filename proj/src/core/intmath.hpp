#pragma once

namespace ruled::detail {

// floor division, denominator must be positive
constexpr long long floordiv(long long a, long long b) {
  const long long q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

constexpr long long ceildiv(long long a, long long b) { return -floordiv(-a, b); }

}  // namespace ruled::detail
