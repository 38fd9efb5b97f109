#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hashfam/bounds.hpp"
#include "hashfam/matrix.hpp"
#include "hashfam/mt_engine.hpp"
#include "hashfam/oracles.hpp"
#include "hashfam/report_format.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;   // verification FAIL or resample limit
constexpr int kExitUsage = 2;  // bad flags, bad parameters, parse errors

struct GridRow {
  int n, m, w;
};

// The 21 built-in reference parameter sets emitted by `table --paper-tables`.
// The last four carry the corrected (m, w) order; printed the other way
// around, w would exceed m and no perfect family could exist.
const std::vector<GridRow> kPaperTables = {
    {15, 7, 7},   {50, 7, 7},   {200, 7, 7},   {1000, 7, 7},   {50, 8, 8},   {200, 8, 8},
    {1000, 8, 8}, {1000, 12, 8}, {1000, 50, 8}, {1000, 50, 15}, {1000, 50, 18},
    {10, 4, 4},   {15, 4, 4},   {50, 4, 4},    {10, 5, 5},     {15, 5, 5},   {50, 5, 5},
    {15, 6, 6},   {50, 6, 6},   {90, 6, 6},    {200, 6, 6},
};

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      parts.push_back(std::stoi(piece));
    } catch (const std::exception&) {
      throw std::invalid_argument("--parts: invalid part size '" + piece + "'");
    }
  }
  if (parts.size() < 2) throw std::invalid_argument("--parts: need at least two comma-separated sizes");
  return parts;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
  return file;
}

std::string family_string(const std::vector<std::vector<int>>& family) {
  std::ostringstream out;
  if (family.size() > 1) out << '{';
  for (size_t p = 0; p < family.size(); ++p) {
    if (p) out << ", ";
    out << '{';
    for (size_t i = 0; i < family[p].size(); ++i) {
      if (i) out << ',';
      out << family[p][i] + 1;  // 1-based for display
    }
    out << '}';
  }
  if (family.size() > 1) out << '}';
  return out.str();
}

int run_bound(bool shf, int n, int m, int w, const std::string& parts_text,
              const std::string& format, const std::string& output) {
  hashfam::BoundReport report = shf
      ? hashfam::shf_full_report(hashfam::ShfSpec(n, m, parse_parts(parts_text)))
      : hashfam::phf_full_report(hashfam::PhfSpec(n, m, w));
  std::ofstream file;
  std::ostream& out = open_output(file, output);
  if (format == "json")
    out << hashfam::report_to_json(report);
  else if (format == "csv")
    out << hashfam::report_csv_header() << '\n' << hashfam::report_to_csv_row(report) << '\n';
  else
    out << hashfam::report_to_text(report);
  return kExitOk;
}

int run_table(bool paper_tables, const std::string& grid_path, const std::string& format,
              const std::string& output) {
  std::vector<GridRow> rows;
  if (paper_tables) {
    rows = kPaperTables;
  } else {
    std::ifstream grid(grid_path);
    if (!grid) throw std::runtime_error("cannot open grid file '" + grid_path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(grid, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      GridRow row{};
      if (ss >> row.n >> row.m >> row.w)
        rows.push_back(row);
      else if (!std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }))
        throw std::runtime_error("grid file line " + std::to_string(lineno) +
                                 ": expected 'n m w'");
    }
  }

  std::ofstream file;
  std::ostream& out = open_output(file, output);
  const bool csv = format == "csv";
  if (csv)
    out << "n,m,w,theorem,expurgation,error\n";
  else
    out << "     n     m     w   theorem  expurgation\n";
  for (const GridRow& row : rows) {
    std::string theorem, expurgation, error;
    try {
      const hashfam::PhfSpec spec(row.n, row.m, row.w);
      theorem = std::to_string(hashfam::phf_min_rows(spec).n_clll);
      expurgation = std::to_string(hashfam::expurgation_phf_bound(spec));
    } catch (const std::exception& e) {
      error = e.what();
    }
    if (csv) {
      out << row.n << ',' << row.m << ',' << row.w << ',' << theorem << ',' << expurgation << ',';
      if (!error.empty()) out << '"' << error << '"';
      out << '\n';
    } else {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%6d%6d%6d%10s%13s", row.n, row.m, row.w,
                    error.empty() ? theorem.c_str() : "-", error.empty() ? expurgation.c_str() : "-");
      out << buf;
      if (!error.empty()) out << "  ! " << error;
      out << '\n';
    }
  }
  return kExitOk;
}

int run_construct(bool shf, int n, int m, int w, const std::string& parts_text, long long rows,
                  std::uint64_t seed, const std::string& policy_name, std::uint64_t max_resamples,
                  const std::string& format, const std::string& output) {
  const hashfam::BadEventPolicy policy = policy_name == "random"
                                             ? hashfam::BadEventPolicy::Random
                                             : hashfam::BadEventPolicy::LexFirst;
  hashfam::MatrixFile matrix_file;
  hashfam::MtStats stats;
  if (shf) {
    const hashfam::ShfSpec spec(n, m, parse_parts(parts_text));
    if (rows <= 0) rows = hashfam::shf_min_rows(spec).n_clll;
    auto result = hashfam::construct(spec, static_cast<int>(rows), seed, policy, max_resamples);
    matrix_file = {std::move(result.matrix), true, 0, spec.parts};
    stats = result.stats;
  } else {
    const hashfam::PhfSpec spec(n, m, w);
    if (rows <= 0) rows = hashfam::phf_min_rows(spec).n_clll;
    auto result = hashfam::construct(spec, static_cast<int>(rows), seed, policy, max_resamples);
    matrix_file = {std::move(result.matrix), false, spec.w, {}};
    stats = result.stats;
  }

  std::ofstream file;
  std::ostream& out = open_output(file, output);
  write_matrix(out, matrix_file);
  // stats go to stdout when the matrix went to a file, stderr otherwise
  std::ostream& stats_out = output.empty() ? std::cerr : std::cout;
  stats_out << (format == "json" ? hashfam::stats_to_json(stats) : hashfam::stats_to_text(stats));
  if (!stats.succeeded) {
    std::cerr << "resample limit reached; N is likely below the threshold "
                 "(not a proof of non-existence)\n";
    return kExitFail;
  }
  return kExitOk;
}

int run_verify(const std::string& path, const std::string& family_opt, int w_opt,
               const std::string& parts_text) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file '" + path + "'");
  hashfam::MatrixFile file;
  try {
    file = hashfam::read_matrix(in);
  } catch (const hashfam::MatrixParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!family_opt.empty()) {
    const bool want_shf = family_opt == "shf";
    if (want_shf != file.is_shf)
      throw std::invalid_argument("--family disagrees with the file header");
  }
  if (w_opt > 0 && (file.is_shf || w_opt != file.w))
    throw std::invalid_argument("--w disagrees with the file header");
  if (!parts_text.empty()) {
    std::vector<int> parts = parse_parts(parts_text);
    std::sort(parts.begin(), parts.end());
    std::vector<int> header_parts = file.parts;
    std::sort(header_parts.begin(), header_parts.end());
    if (!file.is_shf || parts != header_parts)
      throw std::invalid_argument("--parts disagrees with the file header");
  }

  const std::optional<hashfam::Witness> witness =
      file.is_shf ? hashfam::verify_shf(file.matrix, file.parts)
                  : hashfam::verify_phf(file.matrix, file.w);
  if (witness) {
    std::cout << "FAIL witness " << family_string(witness->family) << '\n';
    return kExitFail;
  }
  std::cout << "PASS\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Existence bounds, randomized construction and exhaustive verification\n"
               "for perfect and separating hash families."};
  app.require_subcommand(1);

  std::string family = "phf";
  int n = 0, m = 0, w = 0;
  std::string parts_text;
  std::string format = "text";
  std::string output;
  long long rows = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string policy = "lex";
  std::uint64_t max_resamples = 0;

  auto add_family_options = [&](CLI::App* cmd, bool with_params) {
    cmd->add_option("family", family, "family kind")->check(CLI::IsMember({"phf", "shf"}))->required();
    if (with_params) {
      cmd->add_option("--n", n, "number of columns")->required();
      cmd->add_option("--m", m, "alphabet size")->required();
      cmd->add_option("--w", w, "subset size (phf)");
      cmd->add_option("--parts", parts_text, "comma-separated part sizes (shf)");
    }
  };

  CLI::App* bound = app.add_subcommand("bound", "compute the existence bound and comparison bounds");
  add_family_options(bound, true);
  bound->add_option("--format", format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
  bound->add_option("--output", output, "write to a file instead of stdout");

  CLI::App* table = app.add_subcommand("table", "evaluate a grid of parameter sets");
  bool paper_tables = false;
  std::string grid_path;
  table->add_flag("--paper-tables", paper_tables, "use the 21 built-in reference parameter sets");
  table->add_option("--grid", grid_path, "grid file with one 'n m w' triple per line");
  table->add_option("--format", format, "text|csv")->check(CLI::IsMember({"text", "csv"}));
  table->add_option("--output", output, "write to a file instead of stdout");

  CLI::App* construct = app.add_subcommand("construct", "build a family by randomized resampling");
  add_family_options(construct, true);
  construct->add_option("--rows", rows, "number of rows N (default: the theorem bound)");
  construct->add_option("--seed", seed, "rng seed (default 1729)");
  construct->add_option("--policy", policy, "bad-event selection: lex|random")
      ->check(CLI::IsMember({"lex", "random"}));
  construct->add_option("--max-resamples", max_resamples,
                        "resample cap (default 100*C(n,w))");
  construct->add_option("--format", format, "stats format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  construct->add_option("--output", output, "matrix file path (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "exhaustively verify a matrix file");
  std::string matrix_path;
  std::string family_check;
  verify->add_option("file", matrix_path, "matrix file to check")->required();
  verify->add_option("--family", family_check, "expected family kind (consistency check)")
      ->check(CLI::IsMember({"phf", "shf"}));
  verify->add_option("--w", w, "expected subset size (consistency check)");
  verify->add_option("--parts", parts_text, "expected part sizes (consistency check)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help path
    app.exit(e);
    return kExitUsage;
  }

  try {
    const bool shf = family == "shf";
    if (bound->parsed()) {
      if (shf && parts_text.empty()) throw std::invalid_argument("shf requires --parts");
      if (!shf && w == 0) throw std::invalid_argument("phf requires --w");
      return run_bound(shf, n, m, w, parts_text, format, output);
    }
    if (table->parsed()) {
      if (paper_tables == grid_path.empty())
        return run_table(paper_tables, grid_path, format, output);
      throw std::invalid_argument("table: pass exactly one of --paper-tables or --grid FILE");
    }
    if (construct->parsed()) {
      if (shf && parts_text.empty()) throw std::invalid_argument("shf requires --parts");
      if (!shf && w == 0) throw std::invalid_argument("phf requires --w");
      return run_construct(shf, n, m, w, parts_text, rows, seed, policy, max_resamples, format,
                           output);
    }
    if (verify->parsed()) return run_verify(matrix_path, family_check, w, parts_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
