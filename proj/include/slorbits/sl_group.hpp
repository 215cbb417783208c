#pragma once

#include <vector>

#include "slorbits/linalg_mod.hpp"

namespace slorbits {

/// Default cap on exhaustive enumeration, counted in candidate matrices
/// (n^(m^2)) or candidate vectors (n^m) depending on the operation.
inline constexpr Int kDefaultBudget = 100'000'000;

/// The pair (m, n) naming the group SL(m, Z_n) and the module Z_n^m it acts on.
struct GroupSpec {
  GroupSpec(int m, Modulus modulus);
  int m;
  Modulus modulus;
};

/// |SL(m, Z_n)| = n^(m^2 - 1) * prod_{p | n} prod_{j=2..m} (1 - p^-j),
/// folded per prime so every intermediate is an exact integer.
/// For m = 1 the product is empty and the order is 1.
Int group_order(const GroupSpec& spec);

/// Order of the stabilizer of (0, ..., 0, 1):
/// n^(m^2 - m - 1) * prod_{p | n} prod_{j=2..m-1} (1 - p^-j). Needs m >= 2.
Int stabilizer_order(const GroupSpec& spec);

/// group_order / stabilizer_order with an exact-divisibility assertion.
/// Equals jordan_totient(m, n), the size of the coprime orbit.
Int orbit_size_by_lagrange(const GroupSpec& spec);

/// Elementary transvections I + E_ij and I + (n-1) E_ij for all i != j,
/// deduplicated (the two offsets coincide when n = 2). Each has det = 1.
/// Whether they generate the whole group is verified against exhaustive
/// enumeration in the test suite, never assumed.
std::vector<MatrixModN> generators(const GroupSpec& spec);

/// Every matrix with det = 1 (mod n), each exactly once, in lexicographic
/// entry order. Refuses with BudgetError when n^(m^2) exceeds the budget.
std::vector<MatrixModN> enumerate_group(const GroupSpec& spec,
                                        Int budget = kDefaultBudget);

/// Breadth-first closure of generators(spec) under mat_mul, starting from the
/// identity. Deterministic discovery order; same budget rule as
/// enumerate_group.
std::vector<MatrixModN> generator_closure(const GroupSpec& spec,
                                          Int budget = kDefaultBudget);

/// For prime p and nonzero a in Z_p^m, a matrix in SL(m, Z_p) whose last row
/// is a: the column of the first nonzero component a_j is zeroed above a, the
/// remaining columns carry an identity block with one entry scaled to
/// (-1)^(j+m) a_j^{-1} so the determinant comes out 1.
MatrixModN complete_row_prime(const VectorModN& a);

}  // namespace slorbits
