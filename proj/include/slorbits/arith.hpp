#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace slorbits {

using Int = std::int64_t;

// Overflow-checked integer helpers. Orders, totients and census totals all
// funnel through these; overflow raises std::overflow_error instead of
// wrapping.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_pow(Int base, int exp);

/// True iff base^exp > limit, evaluated without ever overflowing.
bool pow_exceeds(Int base, int exp, Int limit);

/// Deterministic trial-division primality test.
bool is_prime(Int n);

/// Inverse of a modulo m via extended Euclid; requires gcd(a, m) = 1.
Int mod_inverse(Int a, Int m);

struct PrimePower {
  Int prime;
  int exp;
  bool operator==(const PrimePower&) const = default;
};

/// A validated modulus n >= 2 together with its prime factorization,
/// ascending by prime. Factorization is deterministic trial division, which
/// is fine at the scales this library targets (n up to ~10^9).
class Modulus {
 public:
  explicit Modulus(Int n);

  Int value() const { return n_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  bool is_prime() const { return factors_.size() == 1 && factors_[0].exp == 1; }
  bool is_prime_power() const { return factors_.size() == 1; }
  bool operator==(const Modulus& other) const { return n_ == other.n_; }

 private:
  Int n_;
  std::vector<PrimePower> factors_;
};

/// A divisor d of some modulus n, kept together with n/d.
struct Divisor {
  Int d;
  Int cofactor;
  bool operator==(const Divisor&) const = default;
};

/// All divisors of n, ascending. Count is prod(k_i + 1).
std::vector<Divisor> divisors(const Modulus& nn);

/// gcd(a_1, ..., a_m, n). The all-zero vector maps to n, so the result always
/// divides n and the zero vector carries the label of the one-point orbit.
Divisor gcd_with_modulus(std::span<const Int> components, const Modulus& nn);

/// Jordan totient phi_m(n) = #{a in Z_n^m : gcd(a, n) = 1}, computed
/// multiplicatively over prime powers (p^(mk) - p^(m(k-1))) in exact integer
/// arithmetic. phi_1 is the Euler totient.
Int jordan_totient(int m, const Modulus& nn);

/// Same, but accepts n >= 1 directly (phi_m(1) = 1). Convenient for n/d.
Int jordan_totient(int m, Int n);

/// sum of phi_m(d) over d | n. Equals n^m; the identity is exposed as a
/// runtime check rather than assumed, so this really sums.
Int jordan_divisor_sum(int m, const Modulus& nn);

}  // namespace slorbits
