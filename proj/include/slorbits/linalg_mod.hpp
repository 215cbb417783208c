#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "slorbits/arith.hpp"
#include "slorbits/errors.hpp"

namespace slorbits {

/// Row vector over Z_n, components kept in [0, n). Immutable value type.
class VectorModN {
 public:
  /// Components are reduced into [0, n); negatives wrap.
  VectorModN(Modulus modulus, std::vector<Int> components);

  static VectorModN zero(const Modulus& modulus, int m);
  static VectorModN unit_last(const Modulus& modulus, int m);  // (0, ..., 0, 1)

  const Modulus& modulus() const { return modulus_; }
  int dim() const { return static_cast<int>(components_.size()); }
  Int operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }
  const std::vector<Int>& components() const { return components_; }
  bool is_zero() const;

  bool operator==(const VectorModN& other) const {
    return modulus_ == other.modulus_ && components_ == other.components_;
  }

 private:
  Modulus modulus_;
  std::vector<Int> components_;
};

/// Square matrix over Z_n, entries row-major in [0, n). Carries no SL
/// guarantee by itself; membership is a det_mod check.
class MatrixModN {
 public:
  MatrixModN(Modulus modulus, const std::vector<std::vector<Int>>& rows);
  MatrixModN(Modulus modulus, int m, std::vector<Int> row_major);

  static MatrixModN identity(const Modulus& modulus, int m);

  const Modulus& modulus() const { return modulus_; }
  int dim() const { return m_; }
  Int at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * m_ + j];
  }
  const std::vector<Int>& entries() const { return entries_; }

  bool operator==(const MatrixModN& other) const {
    return modulus_ == other.modulus_ && m_ == other.m_ &&
           entries_ == other.entries_;
  }

 private:
  Modulus modulus_;
  int m_;
  std::vector<Int> entries_;
};

/// (AB) mod n. Moduli and dimensions must agree.
MatrixModN mat_mul(const MatrixModN& a, const MatrixModN& b);

/// Determinant computed exactly over the integers, reduced mod n at the end.
/// Cofactor expansion up to 4x4, fraction-free Bareiss elimination above; no
/// division by elements of Z_n ever happens (Z_n has zero divisors).
Int det_mod(const MatrixModN& a);

/// Same, on a raw row-major block with entries already in [0, n).
Int det_mod(std::span<const Int> row_major, int m, Int n);

/// Adjugate: (adj A)_{i,j} = (-1)^(i+j) det A(j,i) mod n, where A(j,i) drops
/// row j and column i. Satisfies A * adj(A) = det(A) * I for every matrix.
/// For m = 1 the adjugate is [[1]] so the identity holds degenerately.
MatrixModN adjugate(const MatrixModN& a);

/// Inverse of an SL member, which is just its adjugate. Throws NotInSlError
/// when det != 1 (mod n).
MatrixModN sl_inverse(const MatrixModN& a);

/// Right action a |-> (aA) mod n, component i = sum_j a_j A_{j,i}.
/// Validates det(A) = 1 on every call; use act_unchecked in hot loops where
/// the caller has already certified the matrix.
VectorModN act(const VectorModN& a, const MatrixModN& g);
VectorModN act_unchecked(const VectorModN& a, const MatrixModN& g);

/// Scaling map a |-> (p^j * a) mod p^k on a prime-power modulus, 0 <= j <= k.
VectorModN scale_map(int j, const VectorModN& a);

// CLI literal formats: vectors "1,2", matrices "1,1;0,1" (rows separated by
// ';', entries by ','). parse_* throws std::invalid_argument on bad input.
VectorModN parse_vector(const Modulus& modulus, std::string_view text);
MatrixModN parse_matrix(const Modulus& modulus, std::string_view text);
std::string format_vector(const VectorModN& a);
std::string format_matrix(const MatrixModN& a);

}  // namespace slorbits
