// Command-line front end over the C API in adm/adm.h.
//
//   adm_cli terms    --problem nws-case2 --order 3
//   adm_cli compare  --problem nws-case2 --order 3 --xs 0:0:1 --ts 0.1:0.1:1
//   adm_cli residual --problem nws-case3 --order 2 --xs -1:1:5 --ts 0.05
//   adm_cli adomian  --f "0,0,1" --order 2
//
// Exit codes: 0 success, 2 configuration error, 3 evaluation error.

#include <adm/adm.h>

#include <CLI11.hpp>

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitEval = 3;

struct CliError {
  int code;
  std::string message;
};

struct RunConfig {
  std::string problem;
  unsigned order = 4;
  std::vector<unsigned> orders;
  std::string xs = "0";
  std::string ts = "0";
  std::string out;
  std::string format = "csv";
  std::string f;
  double h_x = 1e-4;
  double h_t = 1e-4;
};

int exit_code_for(adm_status s)
{
  return s == ADM_ERR_POLE || s == ADM_ERR_INTERNAL ? kExitEval : kExitConfig;
}

void check(adm_status s)
{
  if (s != ADM_OK)
    throw CliError{exit_code_for(s), std::string(adm_status_string(s)) + ": " + adm_last_error()};
}

struct ProblemDeleter {
  void operator()(adm_problem* p) const { adm_problem_free(p); }
};
struct SolutionDeleter {
  void operator()(adm_solution* s) const { adm_solution_free(s); }
};
struct StringDeleter {
  void operator()(char* s) const { adm_string_free(s); }
};
using ProblemPtr = std::unique_ptr<adm_problem, ProblemDeleter>;
using SolutionPtr = std::unique_ptr<adm_solution, SolutionDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string take(char* s)
{
  StringPtr holder(s);
  return holder ? std::string(holder.get()) : std::string();
}

double parse_double(const std::string& text)
{
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE)
    throw CliError{kExitConfig, "malformed number '" + text + "'"};
  return v;
}

/// `min:max:count` or a comma-separated list.
std::vector<double> parse_grid(const std::string& spec)
{
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ':');)
      parts.push_back(p);
    if (parts.size() != 3)
      throw CliError{kExitConfig, "grid must be min:max:count, got '" + spec + "'"};
    double lo = parse_double(parts[0]);
    double hi = parse_double(parts[1]);
    double count = parse_double(parts[2]);
    if (count < 1 || count != static_cast<long>(count))
      throw CliError{kExitConfig, "grid count must be a positive integer in '" + spec + "'"};
    auto n = static_cast<long>(count);
    for (long i = 0; i < n; ++i)
      out.push_back(n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    return out;
  }
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ',');)
    out.push_back(parse_double(p));
  if (out.empty())
    throw CliError{kExitConfig, "empty grid"};
  return out;
}

std::string fmt(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ProblemPtr load_problem(const RunConfig& cfg)
{
  if (cfg.problem.empty())
    throw CliError{kExitConfig, "--problem is required"};
  adm_problem* p = nullptr;
  check(adm_problem_parse(cfg.problem.c_str(), &p));
  return ProblemPtr(p);
}

SolutionPtr solve(const adm_problem* p, unsigned order)
{
  adm_solution* s = nullptr;
  check(adm_solve(p, order, &s));
  return SolutionPtr(s);
}

std::vector<unsigned> effective_orders(const RunConfig& cfg)
{
  std::vector<unsigned> orders = cfg.orders.empty() ? std::vector<unsigned>{cfg.order} : cfg.orders;
  return orders;
}

unsigned max_of(const std::vector<unsigned>& v)
{
  unsigned m = 0;
  for (unsigned x : v)
    m = std::max(m, x);
  return m;
}

void print_table(std::ostream& os, const std::string& format, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows)
{
  if (format == "csv") {
    for (std::size_t i = 0; i < header.size(); ++i)
      os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        os << (i ? "," : "") << row[i];
      os << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i)
    width[i] = header[i].size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      os << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cells[i];
    os << '\n';
  };
  line(header);
  for (const auto& row : rows)
    line(row);
}

int cmd_terms(const RunConfig& cfg, std::ostream& os)
{
  ProblemPtr problem = load_problem(cfg);
  SolutionPtr sol = solve(problem.get(), cfg.order);
  char* text = nullptr;
  check(adm_problem_describe(problem.get(), &text));
  std::string header = take(text);
  std::stringstream hs(header);
  for (std::string line; std::getline(hs, line);)
    os << "# " << line << '\n';
  for (unsigned n = 0; n <= cfg.order; ++n) {
    check(adm_solution_term_text(sol.get(), n, &text));
    std::string body = take(text);
    os << "u_" << n << " =\n";
    std::stringstream bs(body);
    for (std::string line; std::getline(bs, line);)
      os << "  " << line << '\n';
  }
  return 0;
}

int cmd_compare(const RunConfig& cfg, std::ostream& os)
{
  ProblemPtr problem = load_problem(cfg);
  if (!adm_problem_has_reference(problem.get()))
    throw CliError{kExitConfig, "no reference available for '" + cfg.problem + "'"};
  std::vector<double> xs = parse_grid(cfg.xs);
  std::vector<double> ts = parse_grid(cfg.ts);
  std::vector<unsigned> orders = effective_orders(cfg);
  SolutionPtr sol = solve(problem.get(), max_of(orders));

  std::vector<adm_error_row> rows(xs.size() * ts.size() * orders.size());
  std::size_t count = 0;
  check(adm_error_table(sol.get(), xs.data(), xs.size(), ts.data(), ts.size(), orders.data(),
                        orders.size(), rows.data(), rows.size(), &count));
  bool flagged = false;
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& r = rows[i];
    flagged |= r.flagged != 0;
    cells.push_back({fmt(r.x), fmt(r.t), std::to_string(r.order), fmt(r.approx), fmt(r.exact), fmt(r.abs_err)});
  }
  print_table(os, cfg.format, {"x", "t", "order", "approx", "exact", "abs_err"}, cells);
  if (flagged) {
    std::cerr << "adm_cli: some rows could not be evaluated: " << adm_last_error() << '\n';
    return kExitEval;
  }
  return 0;
}

int cmd_residual(const RunConfig& cfg, std::ostream& os)
{
  ProblemPtr problem = load_problem(cfg);
  std::vector<double> xs = parse_grid(cfg.xs);
  std::vector<double> ts = parse_grid(cfg.ts);
  std::vector<unsigned> orders = effective_orders(cfg);
  SolutionPtr sol = solve(problem.get(), max_of(orders));
  std::vector<std::vector<std::string>> cells;
  for (double x : xs)
    for (double t : ts)
      for (unsigned n : orders) {
        double r = 0;
        check(adm_solution_fd_residual(sol.get(), n, x, t, cfg.h_x, cfg.h_t, &r));
        cells.push_back({fmt(x), fmt(t), std::to_string(n), fmt(r)});
      }
  print_table(os, cfg.format, {"x", "t", "order", "residual"}, cells);
  return 0;
}

int cmd_adomian(const RunConfig& cfg, std::ostream& os)
{
  char* text = nullptr;
  if (cfg.problem.empty()) {
    if (cfg.f.empty())
      throw CliError{kExitConfig, "adomian needs --f or --problem"};
    check(adm_adomian_symbolic(cfg.f.c_str(), cfg.order, &text));
    os << "f(u) coefficients: " << cfg.f << '\n' << take(text);
    return 0;
  }
  ProblemPtr problem = load_problem(cfg);
  SolutionPtr sol = solve(problem.get(), cfg.order);
  check(adm_problem_describe(problem.get(), &text));
  std::stringstream hs(take(text));
  for (std::string line; std::getline(hs, line);)
    os << "# " << line << '\n';
  for (unsigned n = 0; n <= cfg.order; ++n) {
    check(adm_adomian_solution(sol.get(), cfg.f.empty() ? nullptr : cfg.f.c_str(), n, &text));
    os << "A_" << n << " =\n";
    std::stringstream bs(take(text));
    for (std::string line; std::getline(bs, line);)
      os << "  " << line << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Adomian decomposition series for u_t = k u_xx + a u - b u^q"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Key-value run manifest; command-line flags take precedence");

  RunConfig cfg;
  app.add_option("--problem", cfg.problem,
                 "fisher:<alpha> | fisher:alpha | nws-case2 | nws-case3 | inline:k=..;a=..;b=..;q=..;u0=..;rate=..");
  app.add_option("--order", cfg.order, "Truncation order N")->check(CLI::NonNegativeNumber);
  app.add_option("--orders", cfg.orders, "Orders for table rows (defaults to --order)")->delimiter(',');
  app.add_option("--xs", cfg.xs, "x grid: min:max:count or a comma list");
  app.add_option("--ts", cfg.ts, "t grid: min:max:count or a comma list");
  app.add_option("--out", cfg.out, "Output path (default: standard output)");
  app.add_option("--format", cfg.format, "Table format")->check(CLI::IsMember({"csv", "pretty"}));
  app.add_option("--f", cfg.f, "Nonlinearity coefficients c0,c1,...,cq");
  app.add_option("--hx", cfg.h_x, "Finite-difference step in x");
  app.add_option("--ht", cfg.h_t, "Finite-difference step in t");

  auto* terms = app.add_subcommand("terms", "Print u_0..u_N symbolically");
  auto* compare = app.add_subcommand("compare", "CSV comparison with the closed-form solution");
  auto* adomian = app.add_subcommand("adomian", "Print Adomian polynomials A_0..A_N");
  auto* residual = app.add_subcommand("residual", "Finite-difference residual of the truncated sum");
  for (auto* sub : {terms, compare, adomian, residual})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    std::ostringstream buffer;
    int rc = 0;
    if (terms->parsed())
      rc = cmd_terms(cfg, buffer);
    else if (compare->parsed())
      rc = cmd_compare(cfg, buffer);
    else if (adomian->parsed())
      rc = cmd_adomian(cfg, buffer);
    else
      rc = cmd_residual(cfg, buffer);

    if (cfg.out.empty()) {
      std::cout << buffer.str();
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!(file << buffer.str())) {
        std::cerr << "adm_cli: cannot write " << cfg.out << '\n';
        return kExitConfig;
      }
    }
    return rc;
  } catch (const CliError& e) {
    std::cerr << "adm_cli: " << e.message << '\n';
    return e.code;
  }
}
