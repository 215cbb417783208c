#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slorbits/sl_group.hpp"

namespace slorbits {

/// One orbit of the closed-form decomposition: label d | n, representative
/// (0, ..., 0, d mod n), and size phi_m(n/d).
struct OrbitDescriptor {
  Divisor divisor;
  VectorModN representative;
  Int size;
};

/// The full partition of Z_n^m into orbits of SL(m, Z_n), one per divisor of
/// n, ascending by label. Sizes sum to n^m. For m = 1 the group is trivial,
/// every point is a singleton orbit, and `warning` says so; orbits are then
/// listed per element with d = gcd(a, n).
struct CensusReport {
  GroupSpec spec;
  std::vector<OrbitDescriptor> orbits;
  Int total;
  std::string warning;
};

/// The orbit label of a point: gcd(a_1, ..., a_m, n). Two points of Z_n^m
/// (m >= 2) lie in the same orbit iff their labels agree, which makes orbit
/// identity an O(m) gcd instead of a search.
Divisor orbit_label(const VectorModN& a);

/// Label equality for m >= 2; plain equality for m = 1 (SL(1) is trivial).
bool same_orbit(const VectorModN& a, const VectorModN& b);

/// Closed-form orbit census: one descriptor per divisor d of n with size
/// phi_m(n/d), totients taken over the primes dividing n/d.
CensusReport census(const GroupSpec& spec);

/// All points with orbit label d, in lexicographic order; count is
/// phi_m(n/d). Enumerates n^m candidates, subject to the budget.
std::vector<VectorModN> orbit_members(const GroupSpec& spec, Int d,
                                      Int budget = kDefaultBudget);

// Chinese-remainder machinery for n = p*q with gcd(p, q) = 1. The split maps
// are componentwise reductions and are ring/group isomorphisms onto the
// product; crt_join inverts crt_split via Bezout coefficients.
std::pair<VectorModN, VectorModN> crt_split(const VectorModN& a,
                                            const Modulus& p, const Modulus& q);
VectorModN crt_join(const VectorModN& a1, const VectorModN& a2);
std::pair<MatrixModN, MatrixModN> crt_matrix_split(const MatrixModN& a,
                                                   const Modulus& p,
                                                   const Modulus& q);

/// Exhaustively checks that the joined product of the d1-stratum of Z_p^m and
/// the d2-stratum of Z_q^m equals the (d1*d2)-stratum of Z_{pq}^m.
bool orbit_product_check(int m, const Modulus& p, const Modulus& q, Int d1,
                         Int d2, Int budget = kDefaultBudget);

/// Tab-separated rows "d <TAB> size <TAB> representative" plus a final
/// "total = n^m" line.
std::string census_to_tsv(const CensusReport& report);

/// JSON lines {"d":...,"size":...,"rep":[...]} plus a final {"total":...}.
std::string census_to_jsonl(const CensusReport& report);

}  // namespace slorbits
