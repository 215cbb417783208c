#include "slorbits/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace slorbits {

namespace {

// Vectors are keyed as sum comps[i] * n^i; the budget pre-check guarantees
// n^m fits in Int.
Int vec_key(std::span<const Int> comps, Int n) {
  Int key = 0;
  for (auto it = comps.rbegin(); it != comps.rend(); ++it) key = key * n + *it;
  return key;
}

void vec_from_key(Int key, Int n, int m, std::vector<Int>& comps) {
  comps.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    comps[static_cast<std::size_t>(i)] = key % n;
    key /= n;
  }
}

void require_states_budget(Int n, int m, Int budget) {
  if (budget < 1) throw std::domain_error("budget must be at least 1");
  if (pow_exceeds(n, m, budget))
    throw BudgetError("refusing search: " + std::to_string(n) + "^" +
                          std::to_string(m) + " states exceed budget " +
                          std::to_string(budget),
                      budget);
}

void validate_generators(const Modulus& nn, int m,
                         const std::vector<MatrixModN>& gens) {
  for (const MatrixModN& g : gens) {
    if (!(g.modulus() == nn) || g.dim() != m)
      throw std::invalid_argument("generator shape mismatch");
    const Int det = det_mod(g);
    if (det != 1) throw NotInSlError(det, m, nn.value());
  }
}

// comps -> comps * g, all raw, accumulator wide enough for m * (n-1)^2.
void apply_raw(std::span<const Int> comps, std::span<const Int> g, int m,
               Int n, std::vector<Int>& out) {
  out.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    __int128 acc = 0;
    for (int j = 0; j < m; ++j)
      acc += static_cast<__int128>(comps[static_cast<std::size_t>(j)]) *
             g[static_cast<std::size_t>(j) * m + i];
    out[static_cast<std::size_t>(i)] = static_cast<Int>(acc % n);
  }
}

struct BfsWalk {
  std::vector<Int> order;  // keys in discovery order
  std::unordered_map<Int, std::pair<Int, int>> parent;  // key -> (prev, gen)
};

BfsWalk bfs_from_key(Int start, Int n, int m,
                     const std::vector<MatrixModN>& gens, bool track_parents,
                     const std::optional<Int>& stop_at = std::nullopt) {
  BfsWalk walk;
  std::vector<std::span<const Int>> raw_gens;
  raw_gens.reserve(gens.size());
  for (const MatrixModN& g : gens) raw_gens.emplace_back(g.entries());
  std::unordered_set<Int> seen{start};
  std::deque<Int> frontier{start};
  walk.order.push_back(start);
  std::vector<Int> comps, next;
  while (!frontier.empty()) {
    const Int cur = frontier.front();
    frontier.pop_front();
    vec_from_key(cur, n, m, comps);
    for (std::size_t gi = 0; gi < raw_gens.size(); ++gi) {
      apply_raw(comps, raw_gens[gi], m, n, next);
      const Int key = vec_key(next, n);
      if (seen.insert(key).second) {
        walk.order.push_back(key);
        frontier.push_back(key);
        if (track_parents)
          walk.parent.emplace(key, std::make_pair(cur, static_cast<int>(gi)));
        if (stop_at && key == *stop_at) return walk;
      }
    }
  }
  return walk;
}

std::string format_components(const std::vector<Int>& comps) {
  std::string out = "(";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(comps[i]);
  }
  return out + ")";
}

std::string padded(Int value, Int max_value) {
  std::string s = std::to_string(value);
  const std::size_t width = std::to_string(max_value).size();
  return std::string(width - std::min(width, s.size()), '0') + s;
}

void add_check(std::vector<CheckResult>& checks, std::string name,
               std::string expected, std::string observed) {
  const bool pass = expected == observed;
  checks.push_back({std::move(name), std::move(expected), std::move(observed), pass});
}

}  // namespace

std::vector<VectorModN> bfs_orbit(const VectorModN& a,
                                  const std::vector<MatrixModN>& gens,
                                  Int budget) {
  const Int n = a.modulus().value();
  const int m = a.dim();
  require_states_budget(n, m, budget);
  validate_generators(a.modulus(), m, gens);
  const BfsWalk walk =
      bfs_from_key(vec_key(a.components(), n), n, m, gens, false);
  std::vector<VectorModN> out;
  out.reserve(walk.order.size());
  std::vector<Int> comps;
  for (Int key : walk.order) {
    vec_from_key(key, n, m, comps);
    out.emplace_back(a.modulus(), comps);
  }
  return out;
}

std::vector<std::vector<VectorModN>> bfs_partition(const GroupSpec& spec,
                                                   Int budget) {
  const Int n = spec.modulus.value();
  const int m = spec.m;
  require_states_budget(n, m, budget);
  const std::vector<MatrixModN> gens = generators(spec);
  validate_generators(spec.modulus, m, gens);
  const Int total = checked_pow(n, m);
  std::vector<bool> visited(static_cast<std::size_t>(total), false);
  std::vector<std::vector<VectorModN>> blocks;
  std::vector<Int> comps;
  for (Int start = 0; start < total; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    const BfsWalk walk = bfs_from_key(start, n, m, gens, false);
    std::vector<VectorModN> block;
    block.reserve(walk.order.size());
    for (Int key : walk.order) {
      visited[static_cast<std::size_t>(key)] = true;
      vec_from_key(key, n, m, comps);
      block.emplace_back(spec.modulus, comps);
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

VerificationReport verify_partition(const GroupSpec& spec, Int budget) {
  if (spec.m < 2)
    throw std::domain_error("partition verification needs m >= 2");
  const auto start_time = std::chrono::steady_clock::now();
  const Int n = spec.modulus.value();
  VerificationReport report{spec, {}, {}};

  const std::vector<std::vector<VectorModN>> blocks = bfs_partition(spec, budget);
  const std::vector<Divisor> divs = divisors(spec.modulus);

  add_check(report.checks, "block-count", std::to_string(divs.size()),
            std::to_string(blocks.size()));

  // Index blocks by the label of their starting point; BFS partition starts
  // block d at the smallest point of its stratum, so labels are a good key.
  std::unordered_map<Int, const std::vector<VectorModN>*> block_by_label;
  bool labels_unique = true;
  for (const auto& block : blocks) {
    const Int label = orbit_label(block.front()).d;
    if (!block_by_label.emplace(label, &block).second) labels_unique = false;
  }
  add_check(report.checks, "block-labels-distinct", "yes",
            labels_unique ? "yes" : "no");

  for (const Divisor& d : divs) {
    const std::string tag = "[d=" + padded(d.d, n) + "]";
    const Int want_size = jordan_totient(spec.m, d.cofactor);
    const auto found = block_by_label.find(d.d);
    if (found == block_by_label.end()) {
      add_check(report.checks, "block" + tag + "/size",
                std::to_string(want_size), "no block with this label");
      add_check(report.checks, "block" + tag + "/set-equals-stratum", "equal",
                "no block with this label");
      continue;
    }
    const std::vector<VectorModN>& block = *found->second;
    add_check(report.checks, "block" + tag + "/size",
              std::to_string(want_size), std::to_string(block.size()));

    std::vector<std::vector<Int>> block_set;
    block_set.reserve(block.size());
    for (const VectorModN& v : block) block_set.push_back(v.components());
    std::sort(block_set.begin(), block_set.end());
    std::vector<std::vector<Int>> stratum_set;
    for (const VectorModN& v : orbit_members(spec, d.d, budget))
      stratum_set.push_back(v.components());
    std::sort(stratum_set.begin(), stratum_set.end());
    std::string observed = "equal";
    if (block_set != stratum_set) {
      std::vector<std::vector<Int>> diff;
      std::set_symmetric_difference(block_set.begin(), block_set.end(),
                                    stratum_set.begin(), stratum_set.end(),
                                    std::back_inserter(diff));
      observed = "differs, first offender " + format_components(diff.front());
    }
    add_check(report.checks, "block" + tag + "/set-equals-stratum", "equal",
              observed);
  }

  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  report.elapsed = std::chrono::steady_clock::now() - start_time;
  return report;
}

VerificationReport verify_group_counts(const GroupSpec& spec, Int budget) {
  if (spec.m < 2)
    throw std::domain_error("group-count verification needs m >= 2");
  const auto start_time = std::chrono::steady_clock::now();
  const Int n = spec.modulus.value();
  const int m = spec.m;
  const int cells = m * m;
  if (budget < 1) throw std::domain_error("budget must be at least 1");
  if (pow_exceeds(n, cells, budget))
    throw BudgetError("refusing enumeration: " + std::to_string(n) + "^" +
                          std::to_string(cells) + " candidates exceed budget " +
                          std::to_string(budget),
                      budget);
  VerificationReport report{spec, {}, {}};

  Int sl_count = 0;
  Int stab_count = 0;
  std::vector<Int> entries(static_cast<std::size_t>(cells), 0);
  while (true) {
    if (det_mod(entries, m, n) == 1) {
      ++sl_count;
      // the stabilizer of (0,...,0,1) is exactly the SL matrices whose last
      // row is (0,...,0,1)
      bool fixes = entries[static_cast<std::size_t>(cells - 1)] == 1;
      for (int j = 0; fixes && j < m - 1; ++j)
        fixes = entries[static_cast<std::size_t>(m - 1) * m + j] == 0;
      if (fixes) ++stab_count;
    }
    int pos = cells - 1;
    while (pos >= 0 && ++entries[static_cast<std::size_t>(pos)] == n) {
      entries[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }

  add_check(report.checks, "group-order", std::to_string(group_order(spec)),
            std::to_string(sl_count));
  add_check(report.checks, "stabilizer-order",
            std::to_string(stabilizer_order(spec)), std::to_string(stab_count));
  std::string quotient = "not divisible";
  if (stab_count > 0 && sl_count % stab_count == 0)
    quotient = std::to_string(sl_count / stab_count);
  add_check(report.checks, "lagrange-quotient",
            std::to_string(jordan_totient(m, spec.modulus)), quotient);

  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  report.elapsed = std::chrono::steady_clock::now() - start_time;
  return report;
}

std::optional<MatrixModN> find_transform(const VectorModN& a,
                                         const VectorModN& b,
                                         const std::vector<MatrixModN>& gens,
                                         Int budget) {
  if (!(a.modulus() == b.modulus()) || a.dim() != b.dim())
    throw std::invalid_argument("points live in different modules");
  const Int n = a.modulus().value();
  const int m = a.dim();
  require_states_budget(n, m, budget);
  validate_generators(a.modulus(), m, gens);
  if (a == b) return MatrixModN::identity(a.modulus(), m);

  const Int start = vec_key(a.components(), n);
  const Int goal = vec_key(b.components(), n);
  const BfsWalk walk = bfs_from_key(start, n, m, gens, true, goal);
  if (!walk.parent.contains(goal)) return std::nullopt;

  std::vector<int> path;
  for (Int key = goal; key != start;) {
    const auto& [prev, gen_index] = walk.parent.at(key);
    path.push_back(gen_index);
    key = prev;
  }
  std::reverse(path.begin(), path.end());
  MatrixModN witness = MatrixModN::identity(a.modulus(), m);
  for (int gi : path) witness = mat_mul(witness, gens[static_cast<std::size_t>(gi)]);

  if (det_mod(witness) != 1 || !(act_unchecked(a, witness) == b))
    throw std::logic_error("unsound witness assembled from BFS path");
  return witness;
}

std::string report_to_text(const VerificationReport& report) {
  std::string out;
  std::size_t passed = 0;
  for (const CheckResult& c : report.checks) {
    out += c.pass ? "PASS  " : "FAIL  ";
    out += c.name;
    out += "  expected=" + c.expected;
    out += "  observed=" + c.observed;
    out += '\n';
    if (c.pass) ++passed;
  }
  out += "passed " + std::to_string(passed) + "/" +
         std::to_string(report.checks.size()) + " checks\n";
  return out;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["m"] = report.spec.m;
  j["n"] = report.spec.modulus.value();
  j["all_passed"] = report.all_passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : report.checks)
    j["checks"].push_back({{"name", c.name},
                           {"expected", c.expected},
                           {"observed", c.observed},
                           {"pass", c.pass}});
  return j.dump() + "\n";
}

}  // namespace slorbits
