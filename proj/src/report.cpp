#include "fpbound/report.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "json.hpp"

namespace fpbound {

using ordered_json = nlohmann::ordered_json;

const char* const kTableCsvHeader =
    "n,dim,n_plus_1,kosniowski_threshold,bound,kosniowski_ok,frankel_ok,family";

OutputFormat parse_format(const std::string& name) {
  if (name == "md") return OutputFormat::Markdown;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format '" + name + "' (expected md, csv, or json)");
}

BoundReport make_bound_report(std::int64_t n) {
  BoundReport rep;
  rep.certificate = minimize(build_instance(n));
  TableRow& row = rep.row;
  row.n = n;
  row.dim = 2 * n;
  row.bound = rep.certificate.bound;
  row.witness = rep.certificate.witness;
  if (rep.certificate.generator) row.origin = rep.certificate.generator->kind;
  row.kosniowski_threshold = n / 2 + 1;
  row.frankel_threshold = n + 1;
  row.kosniowski_ok = row.bound >= Int{row.kosniowski_threshold};
  row.frankel_ok = row.bound >= Int{row.frankel_threshold};
  row.family = classify(n);
  return rep;
}

TableRow make_table_row(std::int64_t n) { return make_bound_report(n).row; }

std::vector<TableRow> compute_table(std::int64_t n_min, std::int64_t n_max, std::int64_t jobs) {
  if (n_min > n_max)
    throw std::invalid_argument("empty range: n_min exceeds n_max");
  reduced_size(n_min);  // validates both endpoints up front
  reduced_size(n_max);
  const std::int64_t count = n_max - n_min + 1;
  std::vector<TableRow> rows(static_cast<std::size_t>(count));

  std::int64_t workers = jobs > 0
                             ? jobs
                             : static_cast<std::int64_t>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers > count) workers = count;

  if (workers == 1) {
    for (std::int64_t i = 0; i < count; ++i)
      rows[static_cast<std::size_t>(i)] = make_table_row(n_min + i);
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
        rows[static_cast<std::size_t>(i)] = make_table_row(n_min + i);
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

std::string render_family(const ClassificationReport& rep) {
  switch (rep.family) {
    case Family::Generic:
      return "generic";
    case Family::IdentityConstraint:
      return "identity_constraint";
    case Family::EvenDegenerate:
      return "even_degenerate(" + std::to_string(rep.k) + ")";
    case Family::OddDegenerate:
      return "odd_degenerate(" + std::to_string(rep.k) + ")";
  }
  throw std::logic_error("unhandled family");
}

namespace {

const char* bool_word(bool b) { return b ? "true" : "false"; }

std::string join_profile(const std::vector<Int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += to_string(values[i]);
  }
  return out;
}

ordered_json profile_json(const std::vector<Int>& values) {
  ordered_json arr = ordered_json::array();
  for (const Int v : values) arr.push_back(to_i64(v));
  return arr;
}

ordered_json row_json(const TableRow& row, bool full) {
  ordered_json j;
  j["n"] = row.n;
  j["dim"] = row.dim;
  j["bound"] = to_i64(row.bound);
  j["witness"] = profile_json(row.witness.values);
  if (full) j["witness_full"] = profile_json(expand_profile(row.n, row.witness).values);
  j["kosniowski_threshold"] = row.kosniowski_threshold;
  j["frankel_threshold"] = row.frankel_threshold;
  j["kosniowski_ok"] = row.kosniowski_ok;
  j["frankel_ok"] = row.frankel_ok;
  j["family"] = render_family(row.family);
  return j;
}

std::string csv_table(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << kTableCsvHeader << '\n';
  for (const TableRow& row : rows) {
    out << row.n << ',' << row.dim << ',' << (row.n + 1) << ',' << row.kosniowski_threshold << ','
        << row.bound << ',' << bool_word(row.kosniowski_ok) << ',' << bool_word(row.frankel_ok)
        << ',' << render_family(row.family) << '\n';
  }
  return out.str();
}

std::string md_table(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "| n | dim | n+1 | floor(n/2)+1 | B(n) | kosniowski_ok | frankel_ok | family |\n";
  out << "| --- | --- | --- | --- | --- | --- | --- | --- |\n";
  bool any_marked = false;
  for (const TableRow& row : rows) {
    const bool marked = !row.kosniowski_ok;
    any_marked = any_marked || marked;
    out << "| " << row.n << " | " << row.dim << " | " << (row.n + 1) << " | "
        << row.kosniowski_threshold << " | " << row.bound << (marked ? " *" : "") << " | "
        << bool_word(row.kosniowski_ok) << " | " << bool_word(row.frankel_ok) << " | "
        << render_family(row.family) << " |\n";
  }
  if (any_marked) out << "\n`*` bound falls below the floor(n/2)+1 threshold.\n";
  return out.str();
}

}  // namespace

std::string render_table(const std::vector<TableRow>& rows, OutputFormat format, bool full) {
  switch (format) {
    case OutputFormat::Csv:
      return csv_table(rows);
    case OutputFormat::Markdown:
      return md_table(rows);
    case OutputFormat::Json: {
      ordered_json arr = ordered_json::array();
      for (const TableRow& row : rows) arr.push_back(row_json(row, full));
      return arr.dump(2) + "\n";
    }
  }
  throw std::logic_error("unhandled format");
}

std::string render_conjectures(const std::vector<TableRow>& rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv: {
      std::ostringstream out;
      out << "n,dim,kosniowski_ok,frankel_ok\n";
      for (const TableRow& row : rows)
        out << row.n << ',' << row.dim << ',' << bool_word(row.kosniowski_ok) << ','
            << bool_word(row.frankel_ok) << '\n';
      return out.str();
    }
    case OutputFormat::Markdown: {
      std::ostringstream out;
      out << "| n | dim | kosniowski_ok | frankel_ok |\n";
      out << "| --- | --- | --- | --- |\n";
      for (const TableRow& row : rows)
        out << "| " << row.n << " | " << row.dim << " | " << bool_word(row.kosniowski_ok) << " | "
            << bool_word(row.frankel_ok) << " |\n";
      return out.str();
    }
    case OutputFormat::Json: {
      ordered_json arr = ordered_json::array();
      for (const TableRow& row : rows) {
        ordered_json j;
        j["n"] = row.n;
        j["dim"] = row.dim;
        j["kosniowski_ok"] = row.kosniowski_ok;
        j["frankel_ok"] = row.frankel_ok;
        arr.push_back(std::move(j));
      }
      return arr.dump(2) + "\n";
    }
  }
  throw std::logic_error("unhandled format");
}

namespace {

std::string origin_word(const std::optional<GeneratorKind>& origin) {
  if (!origin) return "mixed";
  return *origin == GeneratorKind::UnitVector ? "unit" : "pair";
}

}  // namespace

std::string render_bound(const BoundReport& report, OutputFormat format, bool full) {
  const TableRow& row = report.row;
  const BoundCertificate& cert = report.certificate;
  switch (format) {
    case OutputFormat::Markdown: {
      std::ostringstream out;
      out << "n = " << row.n << " (dim " << row.dim << ")\n";
      out << "B(n) = " << row.bound << '\n';
      out << "witness (N_1..N_" << row.witness.values.size()
          << "): " << join_profile(row.witness.values) << '\n';
      if (full)
        out << "expanded (N_0..N_" << row.n
            << "): " << join_profile(expand_profile(row.n, row.witness).values) << '\n';
      if (cert.generator) {
        if (cert.generator->kind == GeneratorKind::UnitVector)
          out << "origin: unit generator at j = " << cert.generator->i << '\n';
        else
          out << "origin: balanced pair (i = " << cert.generator->i << ", j = " << cert.generator->j
              << ")\n";
      } else {
        out << "origin: mixed (no single generator attains the bound)\n";
      }
      out << "family: " << render_family(row.family) << '\n';
      out << "verified: " << bool_word(cert.verified) << '\n';
      return out.str();
    }
    case OutputFormat::Csv: {
      std::ostringstream out;
      out << "n,dim,bound,witness,origin,family,verified\n";
      std::string witness = join_profile(row.witness.values);
      out << row.n << ',' << row.dim << ',' << row.bound << ",\"" << witness << "\","
          << origin_word(row.origin) << ',' << render_family(row.family) << ','
          << bool_word(cert.verified) << '\n';
      return out.str();
    }
    case OutputFormat::Json: {
      ordered_json j = row_json(row, full);
      j["origin"] = origin_word(row.origin);
      j["verified"] = cert.verified;
      return j.dump(2) + "\n";
    }
  }
  throw std::logic_error("unhandled format");
}

}  // namespace fpbound
