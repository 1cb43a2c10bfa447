#include "adm/adm.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "adm/parse.hpp"
#include "adm/reference.hpp"

struct adm_problem {
  adm::NwsProblem problem;
};

struct adm_solution {
  adm::AdmSolution solution;
};

namespace {

thread_local std::string last_error;

adm_status to_status(adm::Errc code)
{
  switch (code) {
    case adm::Errc::invalid_argument: return ADM_ERR_INVALID_ARGUMENT;
    case adm::Errc::parse: return ADM_ERR_PARSE;
    case adm::Errc::division_by_zero: return ADM_ERR_DIVISION_BY_ZERO;
    case adm::Errc::radicand_mismatch: return ADM_ERR_RADICAND_MISMATCH;
    case adm::Errc::rate_mismatch: return ADM_ERR_RATE_MISMATCH;
    case adm::Errc::degree_cap: return ADM_ERR_DEGREE_CAP;
    case adm::Errc::no_reference: return ADM_ERR_NO_REFERENCE;
    case adm::Errc::unbound_parameter: return ADM_ERR_UNBOUND_PARAMETER;
    case adm::Errc::pole: return ADM_ERR_POLE;
  }
  return ADM_ERR_INTERNAL;
}

adm_status fail(adm_status status, std::string message)
{
  last_error = std::move(message);
  return status;
}

template <class F>
adm_status guarded(F&& body) noexcept
{
  try {
    last_error.clear();
    return body();
  } catch (const adm::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ADM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ADM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ADM_ERR_INTERNAL, "unknown failure");
  }
}

char* duplicate(const std::string& s)
{
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define ADM_REQUIRE(cond, what)                          \
  do {                                                   \
    if (!(cond))                                         \
      return fail(ADM_ERR_INVALID_ARGUMENT, (what));     \
  } while (0)

std::string equation(const adm::NwsProblem& p)
{
  auto wrap = [](const adm::Scalar& s) {
    return s.is_rational() && sgn(s.rational_part()) >= 0 ? s.to_string() : "(" + s.to_string() + ")";
  };
  return "u_t = " + wrap(p.k) + "*u_xx + " + wrap(p.a) + "*u - " + wrap(p.b) + "*u^" + std::to_string(p.q);
}

}  // namespace

extern "C" {

const char* adm_status_string(adm_status status)
{
  switch (status) {
    case ADM_OK: return "ok";
    case ADM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ADM_ERR_PARSE: return "parse error";
    case ADM_ERR_DIVISION_BY_ZERO: return "division by zero";
    case ADM_ERR_RADICAND_MISMATCH: return "radicand mismatch";
    case ADM_ERR_RATE_MISMATCH: return "rate mismatch";
    case ADM_ERR_DEGREE_CAP: return "degree cap exceeded";
    case ADM_ERR_NO_REFERENCE: return "no reference available";
    case ADM_ERR_UNBOUND_PARAMETER: return "unbound parameter";
    case ADM_ERR_POLE: return "pole";
    case ADM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* adm_last_error(void)
{
  return last_error.c_str();
}

void adm_string_free(char* text)
{
  std::free(text);
}

adm_status adm_problem_parse(const char* spec, adm_problem** out)
{
  return guarded([&] {
    ADM_REQUIRE(spec && out, "null argument");
    *out = new adm_problem{adm::parse_problem(spec)};
    return ADM_OK;
  });
}

void adm_problem_free(adm_problem* problem)
{
  delete problem;
}

adm_status adm_problem_describe(const adm_problem* problem, char** text)
{
  return guarded([&] {
    ADM_REQUIRE(problem && text, "null argument");
    const auto& p = problem->problem;
    std::ostringstream os;
    os << "problem: " << p.name << '\n'
       << "equation: " << equation(p) << '\n'
       << "N(u) = " << p.f.to_string() << '\n';
    if (p.rate.parametric)
      os << "E = alpha (the constant initial value, kept symbolic)";
    else if (p.rate.x_independent())
      os << "E: unused (x-independent)";
    else
      os << "E = " << p.rate.to_string();
    if (p.linear)
      os << "\nnote: q = 1, the reaction term is linear";
    *text = duplicate(os.str());
    return ADM_OK;
  });
}

int adm_problem_has_reference(const adm_problem* problem)
{
  return problem && adm::reference_for(problem->problem).has_value() ? 1 : 0;
}

adm_status adm_problem_exact(const adm_problem* problem, double x, double t, double* out)
{
  return guarded([&] {
    ADM_REQUIRE(problem && out, "null argument");
    auto ref = adm::reference_for(problem->problem);
    if (!ref)
      return fail(ADM_ERR_NO_REFERENCE, "no reference available for " + problem->problem.name);
    *out = (*ref)(x, t);
    return ADM_OK;
  });
}

adm_status adm_solve(const adm_problem* problem, unsigned order, adm_solution** out)
{
  return guarded([&] {
    ADM_REQUIRE(problem && out, "null argument");
    *out = new adm_solution{adm::solve(problem->problem, order)};
    return ADM_OK;
  });
}

void adm_solution_free(adm_solution* solution)
{
  delete solution;
}

unsigned adm_solution_order(const adm_solution* solution)
{
  return solution ? solution->solution.order() : 0;
}

adm_status adm_solution_term_text(const adm_solution* solution, unsigned n, char** text)
{
  return guarded([&] {
    ADM_REQUIRE(solution && text, "null argument");
    ADM_REQUIRE(n <= solution->solution.order(), "term index exceeds the solved order");
    *text = duplicate(solution->solution.terms[n].to_string());
    return ADM_OK;
  });
}

adm_status adm_solution_eval(const adm_solution* solution, unsigned order, double x, double t,
                             double* out)
{
  return guarded([&] {
    ADM_REQUIRE(solution && out, "null argument");
    *out = adm::truncated_eval(solution->solution, x, t, order);
    return ADM_OK;
  });
}

adm_status adm_solution_fd_residual(const adm_solution* solution, unsigned order, double x,
                                    double t, double h_x, double h_t, double* out)
{
  return guarded([&] {
    ADM_REQUIRE(solution && out, "null argument");
    const auto& sol = solution->solution;
    ADM_REQUIRE(order <= sol.order(), "order exceeds the solved order");
    auto u = [&](double xx, double tt) { return adm::truncated_eval(sol, xx, tt, order); };
    *out = adm::fd_residual(sol.problem, u, x, t, h_x > 0 ? h_x : adm::kDefaultFdStep,
                            h_t > 0 ? h_t : adm::kDefaultFdStep);
    return ADM_OK;
  });
}

adm_status adm_error_table(const adm_solution* solution, const double* xs, size_t nx,
                           const double* ts, size_t nt, const unsigned* orders, size_t norders,
                           adm_error_row* rows, size_t capacity, size_t* count)
{
  return guarded([&] {
    ADM_REQUIRE(solution && xs && ts && orders && rows && count, "null argument");
    ADM_REQUIRE(capacity >= nx * nt * norders, "row buffer too small");
    const auto& sol = solution->solution;
    auto ref = adm::reference_for(sol.problem);
    if (!ref)
      return fail(ADM_ERR_NO_REFERENCE, "no reference available for " + sol.problem.name);
    auto table = adm::error_table(sol, *ref, {xs, nx}, {ts, nt}, {orders, norders});
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto& r = table[i];
      rows[i] = adm_error_row{r.x, r.t, r.order, r.approx, r.exact, r.abs_err, r.flagged ? 1 : 0};
      if (r.flagged && last_error.empty())
        last_error = r.error;
    }
    *count = table.size();
    return ADM_OK;
  });
}

adm_status adm_adomian_symbolic(const char* coeffs, unsigned order, char** text)
{
  return guarded([&] {
    ADM_REQUIRE(coeffs && text, "null argument");
    adm::Nonlinearity f(adm::parse_coeff_list(coeffs));
    auto polys = adm::adomian_symbolic(f, order);
    std::ostringstream os;
    for (std::size_t n = 0; n < polys.size(); ++n)
      os << "A_" << n << " = " << polys[n].to_string() << '\n';
    *text = duplicate(os.str());
    return ADM_OK;
  });
}

adm_status adm_adomian_solution(const adm_solution* solution, const char* coeffs, unsigned n,
                                char** text)
{
  return guarded([&] {
    ADM_REQUIRE(solution && text, "null argument");
    const auto& sol = solution->solution;
    ADM_REQUIRE(n <= sol.order(), "index exceeds the solved order");
    std::optional<adm::Nonlinearity> custom;
    if (coeffs)
      custom.emplace(adm::parse_coeff_list(coeffs));
    const adm::Nonlinearity& f = custom ? *custom : sol.problem.f;
    auto a = adm::adomian_polys(f, std::span(sol.terms).first(n + 1));
    *text = duplicate(a[n].to_string());
    return ADM_OK;
  });
}

}  // extern "C"
