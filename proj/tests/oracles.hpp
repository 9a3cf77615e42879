#pragma once

// Reference computations written without the library's types: plain integer
// arithmetic mod p and boost rationals evaluated straight from the defining
// formulas.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;

inline long long mod(long long a, long long p) { return ((a % p) + p) % p; }

inline std::set<long long> squares_mod(long long p) {
  std::set<long long> s;
  for (long long y = 0; y < p; ++y) s.insert(y * y % p);
  return s;
}

inline std::optional<long long> least_root_mod(long long x, long long p) {
  for (long long y = 0; y < p; ++y) {
    if (y * y % p == mod(x, p)) return y;
  }
  return std::nullopt;
}

inline Q cross_ratio(Q x, Q y, Q u, Q v) { return (x - u) * (y - v) / ((x - v) * (y - u)); }

/// det [[bh, b+h, 1], [cg, c+g, 1], [df, d+f, 1]].
inline Q pairing_det(Q b, Q h, Q c, Q g, Q d, Q f) {
  Q r[3][3] = {{b * h, b + h, 1}, {c * g, c + g, 1}, {d * f, d + f, 1}};
  return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
         r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
}

/// Projective line over F_p as p + 1 points: 0..p-1 and p for infinity.
struct Mat {
  long long a, b, c, d;
};

inline long long apply(const Mat& m, long long x, long long p) {
  long long z = x == p ? 1 : x, t = x == p ? 0 : 1;
  long long nz = mod(m.a * z + m.b * t, p), nt = mod(m.c * z + m.d * t, p);
  if (nt == 0) return p;
  long long inv = 1;
  for (long long e = p - 2, base = nt; e > 0; e >>= 1, base = base * base % p) {
    if (e & 1) inv = inv * base % p;
  }
  return nz * inv % p;
}

/// Every nonscalar invertible M with M² scalar, one per projective class
/// (first nonzero entry 1); returns the fixed-point count of each.
inline std::vector<int> involution_fixed_counts(long long p) {
  std::vector<int> counts;
  for (long long a = 0; a < p; ++a) {
    for (long long b = 0; b < p; ++b) {
      for (long long c = 0; c < p; ++c) {
        for (long long d = 0; d < p; ++d) {
          long long first = a != 0 ? a : b != 0 ? b : c != 0 ? c : d;
          if (first != 1) continue;
          if (mod(a * d - b * c, p) == 0) continue;
          // M² = (a² + bc, b(a + d); c(a + d), d² + bc) is scalar iff a + d = 0
          // or M itself is scalar.
          bool scalar = b == 0 && c == 0 && a == d;
          if (scalar || mod(a + d, p) != 0) continue;
          Mat m{a, b, c, d};
          int n = 0;
          for (long long x = 0; x <= p; ++x) n += apply(m, x, p) == x;
          counts.push_back(n);
        }
      }
    }
  }
  return counts;
}

}  // namespace oracle
