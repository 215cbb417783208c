#include "slorbits/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace slorbits {

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in " + std::to_string(a) +
                              " + " + std::to_string(b));
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in " + std::to_string(a) +
                              " * " + std::to_string(b));
  return out;
}

Int checked_pow(Int base, int exp) {
  if (exp < 0) throw std::domain_error("negative exponent");
  Int out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

bool pow_exceeds(Int base, int exp, Int limit) {
  if (limit < 0) return true;
  if (base < 0) throw std::domain_error("negative base");
  Int acc = 1;
  for (int i = 0; i < exp; ++i) {
    if (base == 0) {
      acc = 0;
      break;
    }
    // acc * base > limit  <=>  acc > limit / base  (integer division)
    if (acc > limit / base) return true;
    acc *= base;
  }
  return acc > limit;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Int f = 3; f <= n / f; f += 2)
    if (n % f == 0) return false;
  return true;
}

Int mod_inverse(Int a, Int m) {
  if (m < 2) throw std::domain_error("mod_inverse needs modulus >= 2");
  a %= m;
  if (a < 0) a += m;
  // extended Euclid on (a, m), tracking only the coefficient of a
  Int r0 = a, r1 = m;
  Int s0 = 1, s1 = 0;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1)
    throw std::domain_error(std::to_string(a) + " is not invertible mod " +
                            std::to_string(m));
  s0 %= m;
  if (s0 < 0) s0 += m;
  return s0;
}

Modulus::Modulus(Int n) : n_(n) {
  if (n < 2) throw std::domain_error("modulus must be at least 2");
  Int rest = n;
  for (Int f = 2; f <= rest / f; ++f) {
    if (rest % f != 0) continue;
    int k = 0;
    while (rest % f == 0) {
      rest /= f;
      ++k;
    }
    factors_.push_back({f, k});
  }
  if (rest > 1) factors_.push_back({rest, 1});
}

std::vector<Divisor> divisors(const Modulus& nn) {
  std::vector<Int> ds{1};
  for (const auto& [p, k] : nn.factors()) {
    const std::size_t base_count = ds.size();
    Int pe = 1;
    for (int e = 1; e <= k; ++e) {
      pe = checked_mul(pe, p);
      for (std::size_t i = 0; i < base_count; ++i)
        ds.push_back(checked_mul(ds[i], pe));
    }
  }
  std::sort(ds.begin(), ds.end());
  std::vector<Divisor> out;
  out.reserve(ds.size());
  for (Int d : ds) out.push_back({d, nn.value() / d});
  return out;
}

Divisor gcd_with_modulus(std::span<const Int> components, const Modulus& nn) {
  Int g = nn.value();
  for (Int c : components) g = std::gcd(g, c);
  return {g, nn.value() / g};
}

Int jordan_totient(int m, const Modulus& nn) {
  if (m < 1) throw std::domain_error("totient order must be at least 1");
  Int out = 1;
  for (const auto& [p, k] : nn.factors()) {
    // phi_m(p^k) = p^(m(k-1)) * (p^m - 1)
    const Int pm = checked_pow(p, m);
    out = checked_mul(out, checked_mul(checked_pow(pm, k - 1), pm - 1));
  }
  return out;
}

Int jordan_totient(int m, Int n) {
  if (m < 1) throw std::domain_error("totient order must be at least 1");
  if (n < 1) throw std::domain_error("totient argument must be at least 1");
  if (n == 1) return 1;
  return jordan_totient(m, Modulus(n));
}

Int jordan_divisor_sum(int m, const Modulus& nn) {
  Int sum = 0;
  for (const Divisor& d : divisors(nn))
    sum = checked_add(sum, jordan_totient(m, d.d));
  return sum;
}

}  // namespace slorbits
