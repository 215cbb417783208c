// Command-line front end: orbit census, brute-force verification, group
// orders, the action itself, adjugate inverses, Jordan totients and CRT
// splits/joins, with stable text or JSON output.
//
// Exit codes: 0 success, 1 verification/validation failure, 2 usage error,
// 3 enumeration-budget refusal.

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slorbits/oracle.hpp"

namespace {

using slorbits::Int;

constexpr const char* kBudgetEnvVar = "SLORBITS_BUDGET";

Int resolve_budget(const std::optional<Int>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kBudgetEnvVar)) {
    std::string_view text(env);
    Int value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1)
      throw std::invalid_argument(std::string(kBudgetEnvVar) +
                                  " must be a positive integer, got '" +
                                  std::string(text) + "'");
    return value;
  }
  return slorbits::kDefaultBudget;
}

int run_census(int m, Int n, const std::string& format) {
  const slorbits::GroupSpec spec(m, slorbits::Modulus(n));
  const slorbits::CensusReport report = slorbits::census(spec);
  if (!report.warning.empty())
    std::cerr << "warning: " << report.warning << "\n";
  std::cout << (format == "json" ? slorbits::census_to_jsonl(report)
                                 : slorbits::census_to_tsv(report));
  return 0;
}

int run_verify(int m, Int n, Int budget, const std::string& format) {
  const slorbits::GroupSpec spec(m, slorbits::Modulus(n));
  slorbits::VerificationReport report =
      slorbits::verify_partition(spec, budget);
  slorbits::VerificationReport counts =
      slorbits::verify_group_counts(spec, budget);
  report.checks.insert(report.checks.end(), counts.checks.begin(),
                       counts.checks.end());
  std::sort(report.checks.begin(), report.checks.end(),
            [](const slorbits::CheckResult& a, const slorbits::CheckResult& b) {
              return a.name < b.name;
            });
  report.elapsed += counts.elapsed;
  std::cout << (format == "json" ? slorbits::report_to_json(report)
                                 : slorbits::report_to_text(report));
  return report.all_passed() ? 0 : 1;
}

int run_order(int m, Int n, const std::string& format) {
  const slorbits::GroupSpec spec(m, slorbits::Modulus(n));
  const Int order = slorbits::group_order(spec);
  const std::optional<Int> stab =
      m >= 2 ? std::optional<Int>(slorbits::stabilizer_order(spec))
             : std::nullopt;
  if (format == "json") {
    std::cout << "{\"group_order\":" << order;
    if (stab) std::cout << ",\"stabilizer_order\":" << *stab;
    std::cout << "}\n";
  } else {
    std::cout << "|SL(" << m << ",Z_" << n << ")| = " << order << "\n";
    if (stab) std::cout << "|S| = " << *stab << "\n";
  }
  return 0;
}

int run_act(Int n, const std::string& vec_text, const std::string& mat_text,
            std::optional<int> m_flag) {
  const slorbits::Modulus nn(n);
  const slorbits::VectorModN a = slorbits::parse_vector(nn, vec_text);
  const slorbits::MatrixModN g = slorbits::parse_matrix(nn, mat_text);
  if (m_flag && (*m_flag != a.dim() || *m_flag != g.dim()))
    throw std::invalid_argument("-m does not match the literals");
  std::cout << slorbits::format_vector(slorbits::act(a, g)) << "\n";
  return 0;
}

int run_inverse(Int n, const std::string& mat_text) {
  const slorbits::Modulus nn(n);
  const slorbits::MatrixModN g = slorbits::parse_matrix(nn, mat_text);
  std::cout << slorbits::format_matrix(slorbits::sl_inverse(g)) << "\n";
  return 0;
}

int run_jordan(int m, Int n) {
  std::cout << slorbits::jordan_totient(m, slorbits::Modulus(n)) << "\n";
  return 0;
}

int run_crt_split(Int p, Int q, const std::string& vec_text) {
  const slorbits::Modulus mp(p), mq(q);
  const slorbits::Modulus pq(slorbits::checked_mul(p, q));
  const slorbits::VectorModN a = slorbits::parse_vector(pq, vec_text);
  const auto [ap, aq] = slorbits::crt_split(a, mp, mq);
  std::cout << slorbits::format_vector(ap) << " | "
            << slorbits::format_vector(aq) << "\n";
  return 0;
}

int run_crt_join(Int p, Int q, const std::string& va_text,
                 const std::string& vb_text) {
  const slorbits::Modulus mp(p), mq(q);
  const slorbits::VectorModN a1 = slorbits::parse_vector(mp, va_text);
  const slorbits::VectorModN a2 = slorbits::parse_vector(mq, vb_text);
  std::cout << slorbits::format_vector(slorbits::crt_join(a1, a2)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbits of Z_n^m under the action of SL(m, Z_n)"};
  app.require_subcommand(1);

  int m = 2;
  Int n = 0;
  std::string format = "text";
  std::string vec_text, mat_text, va_text, vb_text;
  Int p = 0, q = 0;
  std::optional<Int> budget_flag;
  std::optional<int> act_m_flag;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* census = app.add_subcommand(
      "census", "closed-form orbit decomposition of Z_n^m");
  census->add_option("-m", m, "dimension")->required();
  census->add_option("-n", n, "modulus")->required();
  add_format(census);

  CLI::App* verify = app.add_subcommand(
      "verify", "brute-force verification of the closed forms");
  verify->add_option("-m", m, "dimension")->required();
  verify->add_option("-n", n, "modulus")->required();
  verify->add_option("--budget", budget_flag,
                     "max enumeration candidates (also " +
                         std::string(kBudgetEnvVar) + ")");
  add_format(verify);

  CLI::App* order =
      app.add_subcommand("order", "group and stabilizer orders");
  order->add_option("-m", m, "dimension")->required();
  order->add_option("-n", n, "modulus")->required();
  add_format(order);

  CLI::App* act = app.add_subcommand("act", "apply a matrix to a row vector");
  act->add_option("-n", n, "modulus")->required();
  act->add_option("-v", vec_text, "row vector literal, e.g. 1,2")->required();
  act->add_option("-A", mat_text, "matrix literal, e.g. 1,1;0,1")->required();
  act->add_option("-m", act_m_flag, "dimension (validated against literals)");

  CLI::App* inverse =
      app.add_subcommand("inverse", "adjugate inverse of an SL matrix");
  inverse->add_option("-n", n, "modulus")->required();
  inverse->add_option("-A", mat_text, "matrix literal")->required();

  CLI::App* jordan = app.add_subcommand("jordan", "Jordan totient phi_m(n)");
  jordan->add_option("-m", m, "totient order")->required();
  jordan->add_option("-n", n, "modulus")->required();

  CLI::App* crt = app.add_subcommand("crt", "CRT split/join for n = p*q");
  crt->require_subcommand(1);
  CLI::App* crt_split =
      crt->add_subcommand("split", "reduce a vector mod p and mod q");
  crt_split->add_option("-p", p, "first coprime factor")->required();
  crt_split->add_option("-q", q, "second coprime factor")->required();
  crt_split->add_option("-v", vec_text, "vector literal over Z_pq")->required();
  CLI::App* crt_join = crt->add_subcommand(
      "join", "recombine vectors over Z_p and Z_q into one over Z_pq");
  crt_join->add_option("-p", p, "first coprime factor")->required();
  crt_join->add_option("-q", q, "second coprime factor")->required();
  crt_join->add_option("--va", va_text, "vector literal over Z_p")->required();
  crt_join->add_option("--vb", vb_text, "vector literal over Z_q")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(census)) return run_census(m, n, format);
    if (app.got_subcommand(verify))
      return run_verify(m, n, resolve_budget(budget_flag), format);
    if (app.got_subcommand(order)) return run_order(m, n, format);
    if (app.got_subcommand(act)) return run_act(n, vec_text, mat_text, act_m_flag);
    if (app.got_subcommand(inverse)) return run_inverse(n, mat_text);
    if (app.got_subcommand(jordan)) return run_jordan(m, n);
    if (app.got_subcommand(crt)) {
      if (crt->got_subcommand(crt_split)) return run_crt_split(p, q, vec_text);
      return run_crt_join(p, q, va_text, vb_text);
    }
  } catch (const slorbits::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const slorbits::NotInSlError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
