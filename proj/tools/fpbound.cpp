// Command-line front end: exact fixed-point lower bounds, tables across
// ranges, a solver-vs-oracle cross check, family classification, conjecture
// status columns, and the dimension-8 characteristic number.
//
// Exit codes: 0 success, 1 usage or bad input, 2 verification or internal
// failure, 3 oracle budget exceeded.

#include <atomic>
#include <cstdint>
#include <exception>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fpbound/analysis.hpp"
#include "fpbound/model.hpp"
#include "fpbound/report.hpp"
#include "fpbound/solver.hpp"

namespace {

using fpbound::Int;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitBudgetExceeded = 3;

int run_bound(std::int64_t n, const std::string& format, bool full) {
  const fpbound::BoundReport report = fpbound::make_bound_report(n);
  std::cout << fpbound::render_bound(report, fpbound::parse_format(format), full);
  return kExitOk;
}

int run_table(std::int64_t n_min, std::int64_t n_max, std::int64_t jobs, const std::string& format,
              bool full) {
  const auto rows = fpbound::compute_table(n_min, n_max, jobs);
  std::cout << fpbound::render_table(rows, fpbound::parse_format(format), full);
  return kExitOk;
}

int run_conjectures(std::int64_t n_min, std::int64_t n_max, std::int64_t jobs,
                    const std::string& format) {
  const auto rows = fpbound::compute_table(n_min, n_max, jobs);
  std::cout << fpbound::render_conjectures(rows, fpbound::parse_format(format));
  return kExitOk;
}

struct VerifyRow {
  std::int64_t n = 0;
  Int bound = 0;
  bool solver_cert_ok = false;
  fpbound::OracleStatus status = fpbound::OracleStatus::Found;
  Int oracle_bound = 0;  // meaningful when status == Found
  bool oracle_cert_ok = false;
  std::int64_t profiles = 0;
  Int ceiling = 0;
  bool agree = false;
};

VerifyRow verify_one(std::int64_t n, std::int64_t budget) {
  const fpbound::ProblemInstance inst = fpbound::build_instance(n);
  VerifyRow row;
  row.n = n;
  const fpbound::BoundCertificate cert = fpbound::minimize(inst);
  row.bound = cert.bound;
  row.solver_cert_ok = fpbound::verify_certificate(inst, cert);
  const fpbound::OracleResult oracle = fpbound::oracle_minimize(inst, budget);
  row.status = oracle.status;
  row.profiles = oracle.profiles_enumerated;
  row.ceiling = oracle.ceiling;
  if (oracle.status == fpbound::OracleStatus::Found) {
    row.oracle_bound = oracle.certificate->bound;
    row.oracle_cert_ok = fpbound::verify_certificate(inst, *oracle.certificate);
    row.agree = row.solver_cert_ok && row.oracle_cert_ok && row.bound == row.oracle_bound;
  }
  return row;
}

std::vector<VerifyRow> verify_range(std::int64_t n_min, std::int64_t n_max, std::int64_t budget,
                                    std::int64_t jobs) {
  if (n_min > n_max) throw std::invalid_argument("empty range: n_min exceeds n_max");
  fpbound::reduced_size(n_min);
  fpbound::reduced_size(n_max);
  const std::int64_t count = n_max - n_min + 1;
  std::vector<VerifyRow> rows(static_cast<std::size_t>(count));
  std::int64_t workers =
      jobs > 0 ? jobs : static_cast<std::int64_t>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers > count) workers = count;
  if (workers == 1) {
    for (std::int64_t i = 0; i < count; ++i)
      rows[static_cast<std::size_t>(i)] = verify_one(n_min + i, budget);
    return rows;
  }
  std::atomic<std::int64_t> cursor{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto work = [&] {
    while (true) {
      const std::int64_t i = cursor.fetch_add(1);
      if (i >= count) return;
      try {
        rows[static_cast<std::size_t>(i)] = verify_one(n_min + i, budget);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (std::int64_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return rows;
}

const char* verify_status_word(const VerifyRow& row) {
  if (row.status == fpbound::OracleStatus::BudgetExceeded) return "budget_exceeded";
  return row.agree ? "agree" : "mismatch";
}

int run_verify(std::int64_t n_min, std::int64_t n_max, std::int64_t budget, std::int64_t jobs,
               const std::string& format) {
  const auto rows = verify_range(n_min, n_max, budget, jobs);
  const fpbound::OutputFormat fmt = fpbound::parse_format(format);
  std::ostringstream out;
  if (fmt == fpbound::OutputFormat::Csv) {
    out << "n,bound,oracle_bound,status,profiles\n";
    for (const VerifyRow& row : rows) {
      out << row.n << ',' << row.bound << ',';
      if (row.status == fpbound::OracleStatus::Found) out << row.oracle_bound;
      out << ',' << verify_status_word(row) << ',' << row.profiles << '\n';
    }
  } else if (fmt == fpbound::OutputFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const VerifyRow& row : rows) {
      ordered_json j;
      j["n"] = row.n;
      j["bound"] = fpbound::to_i64(row.bound);
      if (row.status == fpbound::OracleStatus::Found)
        j["oracle_bound"] = fpbound::to_i64(row.oracle_bound);
      else
        j["oracle_bound"] = nullptr;
      j["status"] = verify_status_word(row);
      j["profiles"] = row.profiles;
      j["ceiling"] = fpbound::to_i64(row.ceiling);
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
  } else {
    for (const VerifyRow& row : rows) {
      out << "n=" << row.n << ": bound=" << row.bound;
      if (row.status == fpbound::OracleStatus::Found) {
        out << " oracle=" << row.oracle_bound << " profiles=" << row.profiles << ' '
            << (row.agree ? "agree" : "MISMATCH") << '\n';
      } else {
        out << " oracle=budget_exceeded profiles=" << row.profiles << " (budget " << budget
            << ", ceiling " << row.ceiling << ")\n";
      }
    }
  }
  std::cout << out.str();

  bool any_mismatch = false, any_exceeded = false;
  for (const VerifyRow& row : rows) {
    if (row.status == fpbound::OracleStatus::BudgetExceeded)
      any_exceeded = true;
    else if (!row.agree)
      any_mismatch = true;
  }
  if (any_mismatch) return kExitVerifyFailed;
  if (any_exceeded) return kExitBudgetExceeded;
  return kExitOk;
}

std::string band_span(std::int64_t hi, std::int64_t lo) {
  if (hi == lo) return "N" + std::to_string(hi);
  return "N" + std::to_string(hi) + "..N" + std::to_string(lo);
}

int run_classify(std::int64_t n, const std::string& format) {
  const fpbound::ClassificationReport rep = fpbound::classify(n);
  const fpbound::OutputFormat fmt = fpbound::parse_format(format);
  const std::int64_t m = fpbound::reduced_size(n);
  const bool generic = rep.family == fpbound::Family::Generic;
  fpbound::SupportBands bands;
  if (generic) bands = fpbound::support_bands(n);

  if (fmt == fpbound::OutputFormat::Json) {
    ordered_json j;
    j["n"] = n;
    j["dim"] = 2 * n;
    j["family"] = fpbound::render_family(rep);
    if (rep.family == fpbound::Family::EvenDegenerate ||
        rep.family == fpbound::Family::OddDegenerate) {
      j["k"] = rep.k;
      j["zero_coefficient_at"] = m - rep.k;
    }
    if (generic) {
      j["ell"] = *rep.ell;
      j["near_band"] = {bands.near_lo, bands.near_hi};
      j["far_band"] = {bands.far_lo, bands.far_hi};
    }
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  if (fmt == fpbound::OutputFormat::Csv) {
    std::cout << "n,dim,family,k,ell,near_lo,near_hi,far_lo,far_hi\n";
    std::cout << n << ',' << 2 * n << ',' << fpbound::render_family(rep) << ',';
    if (rep.family == fpbound::Family::EvenDegenerate ||
        rep.family == fpbound::Family::OddDegenerate)
      std::cout << rep.k;
    std::cout << ',';
    if (generic) std::cout << *rep.ell;
    std::cout << ',';
    if (generic)
      std::cout << bands.near_lo << ',' << bands.near_hi << ',' << bands.far_lo << ','
                << bands.far_hi;
    else
      std::cout << ",,,";
    std::cout << '\n';
    return kExitOk;
  }
  std::cout << "n = " << n << " (dim " << 2 * n << "): " << fpbound::render_family(rep);
  switch (rep.family) {
    case fpbound::Family::IdentityConstraint:
      std::cout << "; the constraint vanishes identically; B(n) = 2\n";
      break;
    case fpbound::Family::EvenDegenerate:
    case fpbound::Family::OddDegenerate:
      std::cout << "; zero coefficient at j = " << (m - rep.k) << "; B(n) = 2\n";
      break;
    case fpbound::Family::Generic:
      std::cout << ", ell = " << *rep.ell << "\n";
      std::cout << "bands: near " << band_span(bands.near_hi, bands.near_lo) << ", far "
                << band_span(bands.far_hi, bands.far_lo) << '\n';
      break;
  }
  return kExitOk;
}

int run_chern8(Int count, const std::string& format) {
  const fpbound::Chern8Result res = fpbound::chern8_invariant(count);
  const fpbound::OutputFormat fmt = fpbound::parse_format(format);
  if (fmt == fpbound::OutputFormat::Json) {
    ordered_json j;
    j["count"] = fpbound::to_i64(count);
    j["numerator"] = fpbound::to_i64(res.numerator);
    j["denominator"] = fpbound::to_i64(res.denominator);
    j["integral"] = res.integral;
    std::cout << j.dump(2) << '\n';
  } else if (fmt == fpbound::OutputFormat::Csv) {
    std::cout << "count,numerator,denominator,integral\n";
    std::cout << count << ',' << res.numerator << ',' << res.denominator << ','
              << (res.integral ? "true" : "false") << '\n';
  } else {
    std::cout << "count = " << count << ": invariant = " << res.numerator;
    if (res.integral) {
      std::cout << " (integral)\n";
    } else {
      std::cout << '/' << res.denominator << " (not integral; no manifold realizes this count)\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lower bounds on fixed points of non-Hamiltonian symplectic circle actions"};
  app.require_subcommand(1);

  std::string format = "md";
  bool full = false;
  std::int64_t jobs = 0;
  std::int64_t budget = fpbound::kDefaultOracleBudget;
  std::int64_t n = 0, n_min = 0, n_max = 0;
  std::int64_t chern_count = 0;

  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "output format: md, csv, json")
        ->check(CLI::IsMember({"md", "csv", "json"}));
  };
  auto add_jobs = [&jobs](CLI::App* sub) {
    sub->add_option("--jobs", jobs, "worker threads (default: hardware count)")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* cmd_bound = app.add_subcommand("bound", "exact B(n) with a verified witness");
  cmd_bound->add_option("n", n, "half-dimension (the manifold has dimension 2n)")->required();
  add_format(cmd_bound);
  cmd_bound->add_flag("--full", full, "also print the expanded profile N_0..N_n");

  CLI::App* cmd_table = app.add_subcommand("table", "B(n) table with conjecture columns");
  cmd_table->add_option("n_min", n_min, "first half-dimension")->required();
  cmd_table->add_option("n_max", n_max, "last half-dimension")->required();
  add_format(cmd_table);
  cmd_table->add_flag("--full", full, "include expanded profiles (json)");
  add_jobs(cmd_table);

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "cross-check the solver against the enumeration oracle");
  cmd_verify->add_option("n_min", n_min, "first half-dimension")->required();
  cmd_verify->add_option("n_max", n_max, "last half-dimension")->required();
  cmd_verify->add_option("--oracle-budget", budget, "max profiles the oracle may enumerate")
      ->check(CLI::PositiveNumber);
  add_format(cmd_verify);
  add_jobs(cmd_verify);

  CLI::App* cmd_classify = app.add_subcommand("classify", "constraint family and support bands");
  cmd_classify->add_option("n", n, "half-dimension")->required();
  add_format(cmd_classify);

  CLI::App* cmd_conj = app.add_subcommand("conjectures", "threshold status columns only");
  cmd_conj->add_option("n_min", n_min, "first half-dimension")->required();
  cmd_conj->add_option("n_max", n_max, "last half-dimension")->required();
  add_format(cmd_conj);
  add_jobs(cmd_conj);

  CLI::App* cmd_chern = app.add_subcommand("chern8", "c_2^2 evaluation from a fixed-point count");
  cmd_chern->add_option("count", chern_count, "fixed-point count (default: computed B(4))")
      ->check(CLI::NonNegativeNumber);
  add_format(cmd_chern);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_bound) return run_bound(n, format, full);
    if (*cmd_table) return run_table(n_min, n_max, jobs, format, full);
    if (*cmd_verify) return run_verify(n_min, n_max, budget, jobs, format);
    if (*cmd_classify) return run_classify(n, format);
    if (*cmd_conj) return run_conjectures(n_min, n_max, jobs, format);
    if (*cmd_chern) {
      Int count = chern_count;
      if (cmd_chern->count("count") == 0)
        count = fpbound::minimize(fpbound::build_instance(4)).bound;
      return run_chern8(count, format);
    }
    std::cerr << "error: no subcommand selected\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}
