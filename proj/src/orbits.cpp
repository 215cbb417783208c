#include "slorbits/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace slorbits {

namespace {

void require_coprime(const Modulus& p, const Modulus& q) {
  if (std::gcd(p.value(), q.value()) != 1)
    throw std::domain_error("moduli " + std::to_string(p.value()) + " and " +
                            std::to_string(q.value()) + " are not coprime");
}

VectorModN reduce_vector(const VectorModN& a, const Modulus& p) {
  std::vector<Int> out;
  out.reserve(a.components().size());
  for (Int c : a.components()) out.push_back(c % p.value());
  return VectorModN(p, std::move(out));
}

VectorModN divisor_representative(const GroupSpec& spec, Int d) {
  std::vector<Int> comps(static_cast<std::size_t>(spec.m), 0);
  comps.back() = d % spec.modulus.value();
  return VectorModN(spec.modulus, std::move(comps));
}

}  // namespace

Divisor orbit_label(const VectorModN& a) {
  return gcd_with_modulus(a.components(), a.modulus());
}

bool same_orbit(const VectorModN& a, const VectorModN& b) {
  if (!(a.modulus() == b.modulus()))
    throw std::invalid_argument("modulus mismatch between points");
  if (a.dim() != b.dim())
    throw std::invalid_argument("dimension mismatch between points");
  if (a.dim() == 1) return a == b;
  return orbit_label(a).d == orbit_label(b).d;
}

CensusReport census(const GroupSpec& spec) {
  const Int n = spec.modulus.value();
  CensusReport report{spec, {}, 0, ""};
  if (spec.m == 1) {
    report.warning =
        "m = 1: SL(1, Z_n) is trivial, every point is a singleton orbit; "
        "the divisor-labelled decomposition needs m >= 2";
    for (Int x = 0; x < n; ++x) {
      VectorModN point(spec.modulus, {x});
      report.orbits.push_back({orbit_label(point), point, 1});
    }
    report.total = n;
    return report;
  }
  Int total = 0;
  for (const Divisor& d : divisors(spec.modulus)) {
    const Int size = jordan_totient(spec.m, d.cofactor);
    report.orbits.push_back({d, divisor_representative(spec, d.d), size});
    total = checked_add(total, size);
  }
  report.total = total;
  if (total != checked_pow(n, spec.m))
    throw std::logic_error("orbit sizes do not sum to n^m");
  return report;
}

std::vector<VectorModN> orbit_members(const GroupSpec& spec, Int d,
                                      Int budget) {
  const Int n = spec.modulus.value();
  if (d < 1 || n % d != 0)
    throw std::domain_error(std::to_string(d) + " does not divide " +
                            std::to_string(n));
  if (budget < 1) throw std::domain_error("budget must be at least 1");
  if (pow_exceeds(n, spec.m, budget))
    throw BudgetError("refusing enumeration: " + std::to_string(n) + "^" +
                          std::to_string(spec.m) + " candidates exceed budget " +
                          std::to_string(budget),
                      budget);
  std::vector<VectorModN> out;
  std::vector<Int> comps(static_cast<std::size_t>(spec.m), 0);
  while (true) {
    if (gcd_with_modulus(comps, spec.modulus).d == d)
      out.emplace_back(spec.modulus, comps);
    int pos = spec.m - 1;
    while (pos >= 0 && ++comps[static_cast<std::size_t>(pos)] == n) {
      comps[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

std::pair<VectorModN, VectorModN> crt_split(const VectorModN& a,
                                            const Modulus& p,
                                            const Modulus& q) {
  require_coprime(p, q);
  if (checked_mul(p.value(), q.value()) != a.modulus().value())
    throw std::invalid_argument("moduli do not multiply to the vector's modulus");
  return {reduce_vector(a, p), reduce_vector(a, q)};
}

VectorModN crt_join(const VectorModN& a1, const VectorModN& a2) {
  const Int p = a1.modulus().value();
  const Int q = a2.modulus().value();
  if (std::gcd(p, q) != 1)
    throw std::domain_error("moduli " + std::to_string(p) + " and " +
                            std::to_string(q) + " are not coprime");
  if (a1.dim() != a2.dim())
    throw std::invalid_argument("dimension mismatch between CRT parts");
  const Modulus pq(checked_mul(p, q));
  const Int p_inv = mod_inverse(p % q, q);
  std::vector<Int> out;
  out.reserve(a1.components().size());
  for (int i = 0; i < a1.dim(); ++i) {
    // x = a1 + p * t with t chosen so x = a2 (mod q); x lands in [0, pq)
    Int t = ((a2[i] - a1[i]) % q + q) % q;
    t = static_cast<Int>(static_cast<__int128>(t) * p_inv % q);
    out.push_back(static_cast<Int>(a1[i] + static_cast<__int128>(p) * t));
  }
  return VectorModN(pq, std::move(out));
}

std::pair<MatrixModN, MatrixModN> crt_matrix_split(const MatrixModN& a,
                                                   const Modulus& p,
                                                   const Modulus& q) {
  require_coprime(p, q);
  if (checked_mul(p.value(), q.value()) != a.modulus().value())
    throw std::invalid_argument("moduli do not multiply to the matrix's modulus");
  const Int det = det_mod(a);
  if (det != 1) throw NotInSlError(det, a.dim(), a.modulus().value());
  std::vector<Int> ep, eq;
  ep.reserve(a.entries().size());
  eq.reserve(a.entries().size());
  for (Int x : a.entries()) {
    ep.push_back(x % p.value());
    eq.push_back(x % q.value());
  }
  return {MatrixModN(p, a.dim(), std::move(ep)),
          MatrixModN(q, a.dim(), std::move(eq))};
}

bool orbit_product_check(int m, const Modulus& p, const Modulus& q, Int d1,
                         Int d2, Int budget) {
  require_coprime(p, q);
  const GroupSpec spec_p(m, p);
  const GroupSpec spec_q(m, q);
  const GroupSpec spec_pq(m, Modulus(checked_mul(p.value(), q.value())));
  std::vector<std::vector<Int>> joined;
  for (const VectorModN& x : orbit_members(spec_p, d1, budget))
    for (const VectorModN& y : orbit_members(spec_q, d2, budget))
      joined.push_back(crt_join(x, y).components());
  std::vector<std::vector<Int>> stratum;
  for (const VectorModN& z :
       orbit_members(spec_pq, checked_mul(d1, d2), budget))
    stratum.push_back(z.components());
  std::sort(joined.begin(), joined.end());
  std::sort(stratum.begin(), stratum.end());
  return joined == stratum;
}

std::string census_to_tsv(const CensusReport& report) {
  std::string out;
  for (const OrbitDescriptor& o : report.orbits) {
    out += std::to_string(o.divisor.d);
    out += '\t';
    out += std::to_string(o.size);
    out += '\t';
    out += format_vector(o.representative);
    out += '\n';
  }
  out += "total = " + std::to_string(report.total) + "\n";
  return out;
}

std::string census_to_jsonl(const CensusReport& report) {
  std::string out;
  for (const OrbitDescriptor& o : report.orbits) {
    nlohmann::ordered_json line;
    line["d"] = o.divisor.d;
    line["size"] = o.size;
    line["rep"] = o.representative.components();
    out += line.dump();
    out += '\n';
  }
  out += nlohmann::ordered_json{{"total", report.total}}.dump() + "\n";
  return out;
}

}  // namespace slorbits
