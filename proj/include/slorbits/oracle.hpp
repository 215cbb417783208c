#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "slorbits/orbits.hpp"

namespace slorbits {

/// One exact comparison: integers or sets, never tolerances. Failed set
/// comparisons carry the first offending element in `observed`.
struct CheckResult {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass;
};

struct VerificationReport {
  GroupSpec spec;
  std::vector<CheckResult> checks;  // sorted by name
  std::chrono::duration<double> elapsed{};

  bool all_passed() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Reachability closure of a under right multiplication by the generators,
/// in breadth-first discovery order. Generators are SL-validated once up
/// front; the walk itself runs unchecked.
std::vector<VectorModN> bfs_orbit(const VectorModN& a,
                                  const std::vector<MatrixModN>& gens,
                                  Int budget = kDefaultBudget);

/// Partition of all of Z_n^m into generator-closure blocks, starting each
/// search from the smallest unvisited point. Deterministic.
std::vector<std::vector<VectorModN>> bfs_partition(const GroupSpec& spec,
                                                   Int budget = kDefaultBudget);

/// Asserts that the BFS partition equals the gcd strata: one block per
/// divisor of n, each block equal (as a set) to its stratum, each block of
/// size phi_m(n/d). Failures become report entries, never exceptions.
VerificationReport verify_partition(const GroupSpec& spec,
                                    Int budget = kDefaultBudget);

/// Asserts exhaustive |SL| and stabilizer counts against the closed-form
/// orders, and their quotient against phi_m(n).
VerificationReport verify_group_counts(const GroupSpec& spec,
                                       Int budget = kDefaultBudget);

/// A concrete witness W in SL(m, Z_n) with aW = b, assembled from the
/// generator path found by BFS, or nullopt when b is unreachable from a.
/// Every returned witness is re-checked (det = 1 and aW = b) before return.
std::optional<MatrixModN> find_transform(const VectorModN& a,
                                         const VectorModN& b,
                                         const std::vector<MatrixModN>& gens,
                                         Int budget = kDefaultBudget);

std::string report_to_text(const VerificationReport& report);
std::string report_to_json(const VerificationReport& report);

}  // namespace slorbits
