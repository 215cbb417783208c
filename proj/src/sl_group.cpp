#include "slorbits/sl_group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace slorbits {

namespace {

void require_budget(Int base, int exp, Int budget) {
  if (budget < 1) throw std::domain_error("budget must be at least 1");
  if (pow_exceeds(base, exp, budget))
    throw BudgetError("refusing enumeration: " + std::to_string(base) + "^" +
                          std::to_string(exp) + " candidates exceed budget " +
                          std::to_string(budget),
                      budget);
}

// Matrices are keyed by their entry tuple read as a base-n integer. The
// budget pre-check guarantees n^(m^2) fits in Int.
Int matrix_key(std::span<const Int> entries, Int n) {
  Int key = 0;
  for (auto it = entries.rbegin(); it != entries.rend(); ++it)
    key = key * n + *it;
  return key;
}

}  // namespace

GroupSpec::GroupSpec(int m_, Modulus modulus_)
    : m(m_), modulus(std::move(modulus_)) {
  if (m < 1) throw std::domain_error("dimension must be at least 1");
}

Int group_order(const GroupSpec& spec) {
  const int m = spec.m;
  // prod_{j=2..m} p^-j contributes p^-(2+3+...+m); folding it into the
  // n^(m^2-1) power keeps everything integral.
  const int denom_exp = m * (m + 1) / 2 - 1;
  Int order = 1;
  for (const auto& [p, k] : spec.modulus.factors()) {
    Int contrib = checked_pow(p, k * (m * m - 1) - denom_exp);
    for (int j = 2; j <= m; ++j)
      contrib = checked_mul(contrib, checked_pow(p, j) - 1);
    order = checked_mul(order, contrib);
  }
  return order;
}

Int stabilizer_order(const GroupSpec& spec) {
  const int m = spec.m;
  if (m < 2) throw std::domain_error("stabilizer order needs m >= 2");
  const int denom_exp = (m - 1) * m / 2 - 1;
  Int order = 1;
  for (const auto& [p, k] : spec.modulus.factors()) {
    Int contrib = checked_pow(p, k * (m * m - m - 1) - denom_exp);
    for (int j = 2; j <= m - 1; ++j)
      contrib = checked_mul(contrib, checked_pow(p, j) - 1);
    order = checked_mul(order, contrib);
  }
  return order;
}

Int orbit_size_by_lagrange(const GroupSpec& spec) {
  const Int group = group_order(spec);
  const Int stab = stabilizer_order(spec);
  if (group % stab != 0)
    throw std::logic_error("group order " + std::to_string(group) +
                           " is not divisible by stabilizer order " +
                           std::to_string(stab));
  return group / stab;
}

std::vector<MatrixModN> generators(const GroupSpec& spec) {
  const int m = spec.m;
  if (m < 2) throw std::domain_error("transvection generators need m >= 2");
  const Int n = spec.modulus.value();
  std::vector<MatrixModN> gens;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      for (Int c : {Int{1}, n - 1}) {
        std::vector<Int> entries =
            MatrixModN::identity(spec.modulus, m).entries();
        entries[static_cast<std::size_t>(i) * m + j] = c;
        MatrixModN gen(spec.modulus, m, std::move(entries));
        if (std::find(gens.begin(), gens.end(), gen) == gens.end())
          gens.push_back(std::move(gen));
      }
    }
  }
  return gens;
}

std::vector<MatrixModN> enumerate_group(const GroupSpec& spec, Int budget) {
  const int m = spec.m;
  const Int n = spec.modulus.value();
  const int cells = m * m;
  require_budget(n, cells, budget);
  std::vector<Int> entries(static_cast<std::size_t>(cells), 0);
  std::vector<MatrixModN> out;
  while (true) {
    if (det_mod(entries, m, n) == 1)
      out.emplace_back(spec.modulus, m, entries);
    int pos = cells - 1;
    while (pos >= 0 && ++entries[static_cast<std::size_t>(pos)] == n) {
      entries[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

std::vector<MatrixModN> generator_closure(const GroupSpec& spec, Int budget) {
  const int m = spec.m;
  const Int n = spec.modulus.value();
  require_budget(n, m * m, budget);
  const std::vector<MatrixModN> gens = generators(spec);
  std::vector<MatrixModN> found;
  std::unordered_set<Int> seen;
  std::deque<std::size_t> frontier;
  found.push_back(MatrixModN::identity(spec.modulus, m));
  seen.insert(matrix_key(found.front().entries(), n));
  frontier.push_back(0);
  while (!frontier.empty()) {
    const std::size_t cur = frontier.front();
    frontier.pop_front();
    for (const MatrixModN& g : gens) {
      MatrixModN next = mat_mul(found[cur], g);
      if (seen.insert(matrix_key(next.entries(), n)).second) {
        found.push_back(std::move(next));
        frontier.push_back(found.size() - 1);
      }
    }
  }
  return found;
}

MatrixModN complete_row_prime(const VectorModN& a) {
  const Modulus& nn = a.modulus();
  if (!nn.is_prime())
    throw std::domain_error("row completion is only defined for prime moduli");
  if (a.is_zero())
    throw std::domain_error("zero vector is a fixed point");
  const Int p = nn.value();
  const int m = a.dim();
  if (m == 1) {
    if (a[0] != 1)
      throw std::domain_error("SL(1, Z_p) = {(1)} cannot reach " +
                              std::to_string(a[0]));
    return MatrixModN(nn, 1, {1});
  }
  int j = 0;
  while (a[j] == 0) ++j;
  // Columns other than j hold an identity block in rows 0..m-2, except the
  // last of them, which is scaled so that expanding det along column j gives
  // (-1)^(m+j) a_j * (-1)^(m+j) a_j^{-1} = 1. Exponents here are 1-based.
  const Int inv = mod_inverse(a[j], p);
  const Int scaled = (m + j + 1) % 2 == 0 ? inv : (p - inv) % p;
  std::vector<Int> entries(static_cast<std::size_t>(m) * m, 0);
  std::vector<int> other_cols;
  for (int c = 0; c < m; ++c)
    if (c != j) other_cols.push_back(c);
  for (int r = 0; r + 1 < m; ++r)
    entries[static_cast<std::size_t>(r) * m + other_cols[static_cast<std::size_t>(r)]] =
        r == m - 2 ? scaled : 1;
  for (int c = 0; c < m; ++c)
    entries[static_cast<std::size_t>(m - 1) * m + c] = a[c];
  return MatrixModN(nn, m, std::move(entries));
}

}  // namespace slorbits
