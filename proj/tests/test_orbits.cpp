#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "slorbits/oracle.hpp"
#include "slorbits/orbits.hpp"

using namespace slorbits;

namespace {

VectorModN vec(Int n, std::vector<Int> comps) {
  return VectorModN(Modulus(n), std::move(comps));
}

std::set<std::vector<Int>> component_set(const std::vector<VectorModN>& vs) {
  std::set<std::vector<Int>> out;
  for (const VectorModN& v : vs) out.insert(v.components());
  return out;
}

// Independent stratum count by brute gcd scan.
Int brute_stratum_count(int m, Int n, Int d) {
  std::vector<Int> comps(static_cast<std::size_t>(m), 0);
  Int count = 0;
  while (true) {
    Int g = n;
    for (Int c : comps) g = std::gcd(g, c);
    if (g == d) ++count;
    int pos = m - 1;
    while (pos >= 0 && ++comps[static_cast<std::size_t>(pos)] == n) {
      comps[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return count;
}

}  // namespace

TEST_CASE("orbit labels") {
  CHECK(orbit_label(vec(9, {0, 0})).d == 9);
  CHECK(orbit_label(vec(6, {2, 4})).d == 2);
  CHECK(orbit_label(vec(8, {0, 0, 1})).d == 1);
}

TEST_CASE("same orbit is label equality") {
  CHECK(same_orbit(vec(4, {1, 0}), vec(4, {0, 1})));
  CHECK_FALSE(same_orbit(vec(4, {2, 0}), vec(4, {0, 1})));
  CHECK(same_orbit(vec(9, {3, 3}), vec(9, {0, 3})));

  // the (3,3) ~ (0,3) claim, rechecked by reachability search
  const auto orbit =
      bfs_orbit(vec(9, {3, 3}), generators(GroupSpec(2, Modulus(9))));
  CHECK(component_set(orbit).count({0, 3}) == 1);

  CHECK_THROWS_AS(same_orbit(vec(4, {1, 0}), vec(5, {1, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(same_orbit(vec(4, {1, 0}), vec(4, {1, 0, 0})),
                  std::invalid_argument);

  // SL(1) is trivial: equality decides
  CHECK(same_orbit(vec(5, {2}), vec(5, {2})));
  CHECK_FALSE(same_orbit(vec(5, {2}), vec(5, {3})));
}

TEST_CASE("census closed form") {
  auto rows = [](const CensusReport& r) {
    std::vector<std::pair<Int, Int>> out;
    for (const OrbitDescriptor& o : r.orbits) out.push_back({o.divisor.d, o.size});
    return out;
  };

  const CensusReport c25 = census(GroupSpec(2, Modulus(5)));
  CHECK(rows(c25) == std::vector<std::pair<Int, Int>>{{1, 24}, {5, 1}});
  CHECK(c25.total == 25);
  CHECK(c25.warning.empty());

  const CensusReport c24 = census(GroupSpec(2, Modulus(4)));
  CHECK(rows(c24) == std::vector<std::pair<Int, Int>>{{1, 12}, {2, 3}, {4, 1}});

  const CensusReport c32 = census(GroupSpec(3, Modulus(2)));
  CHECK(rows(c32) == std::vector<std::pair<Int, Int>>{{1, 7}, {2, 1}});

  const CensusReport c26 = census(GroupSpec(2, Modulus(6)));
  CHECK(rows(c26) ==
        std::vector<std::pair<Int, Int>>{{1, 24}, {2, 8}, {3, 3}, {6, 1}});
  CHECK(c26.total == 36);

  // representatives are (0, ..., 0, d mod n) and carry the right label
  for (const OrbitDescriptor& o : c26.orbits) {
    CHECK(o.representative[0] == 0);
    CHECK(o.representative[1] == o.divisor.d % 6);
    CHECK(orbit_label(o.representative).d == o.divisor.d);
    CHECK(o.size == jordan_totient(2, o.divisor.cofactor));
  }
  // the zero orbit is the n-labelled singleton
  CHECK(c26.orbits.back().size == 1);
  CHECK(c26.orbits.back().representative.is_zero());
}

TEST_CASE("census sizes match brute strata for small n") {
  for (int m = 2; m <= 3; ++m)
    for (Int n = 2; n <= 10; ++n) {
      const CensusReport report = census(GroupSpec(m, Modulus(n)));
      for (const OrbitDescriptor& o : report.orbits)
        CHECK(o.size == brute_stratum_count(m, n, o.divisor.d));
      CHECK(report.total == checked_pow(n, m));
    }
}

TEST_CASE("census for m = 1 degenerates to singletons with a warning") {
  const CensusReport r = census(GroupSpec(1, Modulus(3)));
  CHECK_FALSE(r.warning.empty());
  REQUIRE(r.orbits.size() == 3);
  CHECK(r.total == 3);
  for (Int x = 0; x < 3; ++x) {
    CHECK(r.orbits[static_cast<std::size_t>(x)].size == 1);
    CHECK(r.orbits[static_cast<std::size_t>(x)].representative == vec(3, {x}));
  }
  CHECK(r.orbits[0].divisor.d == 3);  // gcd(0, 3)
  CHECK(r.orbits[1].divisor.d == 1);
  CHECK(r.orbits[2].divisor.d == 1);
}

TEST_CASE("orbit members") {
  const GroupSpec spec(2, Modulus(4));
  const auto zero_orbit = orbit_members(spec, 4);
  REQUIRE(zero_orbit.size() == 1);
  CHECK(zero_orbit[0].is_zero());

  CHECK(component_set(orbit_members(spec, 2)) ==
        std::set<std::vector<Int>>{{0, 2}, {2, 0}, {2, 2}});

  const auto coprime = orbit_members(GroupSpec(2, Modulus(5)), 1);
  CHECK(coprime.size() == 24);
  for (const VectorModN& v : coprime) CHECK_FALSE(v.is_zero());

  for (const Divisor& d : divisors(Modulus(6)))
    CHECK(static_cast<Int>(orbit_members(GroupSpec(2, Modulus(6)), d.d).size()) ==
          jordan_totient(2, d.cofactor));

  CHECK_THROWS_AS(orbit_members(spec, 3), std::domain_error);
  CHECK_THROWS_AS(orbit_members(GroupSpec(4, Modulus(100)), 1, 1'000'000),
                  BudgetError);
}

TEST_CASE("strata partition the module") {
  for (Int n = 2; n <= 12; ++n) {
    const GroupSpec spec(2, Modulus(n));
    std::set<std::vector<Int>> seen;
    Int total = 0;
    for (const Divisor& d : divisors(spec.modulus)) {
      const auto members = orbit_members(spec, d.d);
      total += static_cast<Int>(members.size());
      for (const VectorModN& v : members)
        CHECK(seen.insert(v.components()).second);  // pairwise disjoint
    }
    CHECK(total == n * n);  // covers
  }
}

TEST_CASE("orbit labels are invariant under the action") {
  const auto group = generator_closure(GroupSpec(2, Modulus(6)));
  for (Int x = 0; x < 6; ++x)
    for (Int y = 0; y < 6; ++y) {
      const VectorModN a = vec(6, {x, y});
      const Int label = orbit_label(a).d;
      for (const MatrixModN& g : group)
        CHECK(orbit_label(act_unchecked(a, g)).d == label);
    }
}

TEST_CASE("crt split") {
  const auto [p2, p3] = crt_split(vec(6, {5, 4}), Modulus(2), Modulus(3));
  CHECK(p2 == vec(2, {1, 0}));
  CHECK(p3 == vec(3, {2, 1}));

  const auto [z2, z3] = crt_split(vec(6, {0, 0}), Modulus(2), Modulus(3));
  CHECK(z2.is_zero());
  CHECK(z3.is_zero());

  const auto [q3, q5] = crt_split(vec(15, {7, 11}), Modulus(3), Modulus(5));
  CHECK(q3 == vec(3, {1, 2}));
  CHECK(q5 == vec(5, {2, 1}));

  CHECK_THROWS_AS(crt_split(vec(24, {1, 1}), Modulus(4), Modulus(6)),
                  std::domain_error);
  CHECK_THROWS_AS(crt_split(vec(8, {1, 1}), Modulus(2), Modulus(3)),
                  std::invalid_argument);
}

TEST_CASE("crt join") {
  CHECK(crt_join(vec(2, {1, 0}), vec(3, {2, 1})) == vec(6, {5, 4}));
  CHECK(crt_join(vec(2, {0, 0}), vec(3, {0, 0})).is_zero());
  CHECK(crt_join(vec(3, {1, 1}), vec(5, {4, 0})) == vec(15, {4, 10}));
  CHECK_THROWS_AS(crt_join(vec(4, {1, 1}), vec(6, {1, 1})), std::domain_error);
  CHECK_THROWS_AS(crt_join(vec(2, {1, 1}), vec(3, {1, 1, 1})),
                  std::invalid_argument);
}

TEST_CASE("crt join inverts crt split everywhere") {
  struct Case {
    Int p, q;
  };
  for (const Case c : {Case{2, 3}, Case{3, 5}}) {
    const Int n = c.p * c.q;
    for (Int x = 0; x < n; ++x)
      for (Int y = 0; y < n; ++y) {
        const VectorModN a = vec(n, {x, y});
        const auto [ap, aq] = crt_split(a, Modulus(c.p), Modulus(c.q));
        CHECK(crt_join(ap, aq) == a);
      }
  }
}

TEST_CASE("crt matrix split") {
  const MatrixModN id6 = MatrixModN::identity(Modulus(6), 2);
  const auto [i2, i3] = crt_matrix_split(id6, Modulus(2), Modulus(3));
  CHECK(i2 == MatrixModN::identity(Modulus(2), 2));
  CHECK(i3 == MatrixModN::identity(Modulus(3), 2));

  const MatrixModN shear(Modulus(6), {{1, 1}, {0, 1}});
  const auto [s2, s3] = crt_matrix_split(shear, Modulus(2), Modulus(3));
  CHECK(s2 == MatrixModN(Modulus(2), {{1, 1}, {0, 1}}));
  CHECK(s3 == MatrixModN(Modulus(3), {{1, 1}, {0, 1}}));

  CHECK_THROWS_AS(
      crt_matrix_split(MatrixModN(Modulus(6), {{2, 0}, {0, 2}}), Modulus(2),
                       Modulus(3)),
      NotInSlError);

  for (const MatrixModN& g : generator_closure(GroupSpec(2, Modulus(6)))) {
    const auto [gp, gq] = crt_matrix_split(g, Modulus(2), Modulus(3));
    CHECK(det_mod(gp) == 1);
    CHECK(det_mod(gq) == 1);
  }
}

TEST_CASE("crt split commutes with the action") {
  const Modulus p(2), q(3), pq(6);
  for (const MatrixModN& g : generator_closure(GroupSpec(2, pq))) {
    const auto [gp, gq] = crt_matrix_split(g, p, q);
    for (Int x = 0; x < 6; ++x)
      for (Int y = 0; y < 6; ++y) {
        const VectorModN a = vec(6, {x, y});
        const auto [ap, aq] = crt_split(a, p, q);
        const auto [bp, bq] = crt_split(act_unchecked(a, g), p, q);
        CHECK(bp == act_unchecked(ap, gp));
        CHECK(bq == act_unchecked(aq, gq));
      }
  }
}

TEST_CASE("orbits of a product are products of orbits") {
  CHECK(orbit_product_check(2, Modulus(2), Modulus(3), 1, 1));
  CHECK(orbit_product_check(2, Modulus(2), Modulus(3), 2, 3));
  CHECK(orbit_product_check(2, Modulus(2), Modulus(3), 2, 1));
  for (const Divisor& d1 : divisors(Modulus(2)))
    for (const Divisor& d2 : divisors(Modulus(3)))
      CHECK(orbit_product_check(2, Modulus(2), Modulus(3), d1.d, d2.d));
  CHECK_THROWS_AS(orbit_product_check(2, Modulus(4), Modulus(6), 1, 1),
                  std::domain_error);
}

TEST_CASE("census serialization") {
  const CensusReport report = census(GroupSpec(2, Modulus(4)));
  CHECK(census_to_tsv(report) ==
        "1\t12\t0,1\n"
        "2\t3\t0,2\n"
        "4\t1\t0,0\n"
        "total = 16\n");

  const std::string jsonl = census_to_jsonl(report);
  std::istringstream lines(jsonl);
  std::string line;
  Int sum = 0, total = -1;
  std::size_t records = 0;
  while (std::getline(lines, line)) {
    const auto parsed = nlohmann::json::parse(line);
    if (parsed.contains("total")) {
      total = parsed["total"].get<Int>();
    } else {
      ++records;
      sum += parsed["size"].get<Int>();
      CHECK(parsed["rep"].is_array());
    }
  }
  CHECK(records == 3);
  CHECK(sum == 16);
  CHECK(total == 16);
}
