#include "adm/parse.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <string>

namespace adm {

namespace {

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::string_view what, std::string_view text)
{
  throw Error(Errc::parse, std::string(what) + ": '" + std::string(text) + "'");
}

bool all_digits(std::string_view s)
{
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

Rational parse_decimal(std::string_view text, std::string_view original)
{
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = text.substr(e + 1);
    auto [ptr, ec] = std::from_chars(exp.data() + (!exp.empty() && exp.front() == '+'),
                                     exp.data() + exp.size(), exponent);
    if (ec != std::errc() || ptr != exp.data() + exp.size() || exp.empty())
      fail("malformed exponent", original);
    text = text.substr(0, e);
  }
  std::string digits;
  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view() : text.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
      (!frac.empty() && !all_digits(frac)))
    fail("malformed number", original);
  digits.append(whole);
  digits.append(frac);
  exponent -= static_cast<long>(frac.size());
  mpz_class num(digits.empty() ? std::string("0") : digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational r = exponent < 0 ? Rational(num, scale) : Rational(num * scale);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

long parse_long(std::string_view text, std::string_view original)
{
  text = trim(text);
  long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    fail("expected an integer", original);
  return v;
}

// One summand of a scalar: rational, rational*sqrt(d), sqrt(d), sqrt(d)/n.
Scalar parse_scalar_term(std::string_view text, std::string_view original)
{
  text = trim(text);
  auto s = text.find("sqrt(");
  if (s == std::string_view::npos)
    return Scalar(parse_rational(text));
  auto close = text.find(')', s);
  if (close == std::string_view::npos)
    fail("unbalanced sqrt(", original);
  long d = parse_long(text.substr(s + 5, close - s - 5), original);
  if (d < 0)
    fail("negative radicand", original);
  Rational factor(1);
  std::string_view before = trim(text.substr(0, s));
  std::string_view after = trim(text.substr(close + 1));
  if (!before.empty()) {
    if (before == "-") {
      factor = -1;
    } else {
      if (before.back() != '*')
        fail("expected '*' before sqrt", original);
      factor = parse_rational(trim(before.substr(0, before.size() - 1)));
    }
  }
  if (!after.empty()) {
    if (after.front() != '/')
      fail("unexpected text after sqrt(...)", original);
    Rational divisor = parse_rational(trim(after.substr(1)));
    if (sgn(divisor) == 0)
      fail("division by zero", original);
    factor /= divisor;
  }
  return Scalar(0, factor, d);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
  std::string_view original = text;
  text = trim(text);
  if (text.empty())
    fail("empty number", original);
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return parse_decimal(text, original);
  Rational num = parse_decimal(trim(text.substr(0, slash)), original);
  Rational den = parse_decimal(trim(text.substr(slash + 1)), original);
  if (sgn(den) == 0)
    throw Error(Errc::division_by_zero, "zero denominator in '" + std::string(original) + "'");
  Rational r = num / den;
  r.canonicalize();
  return r;
}

Scalar parse_scalar(std::string_view text)
{
  std::string_view original = text;
  text = trim(text);
  if (text.empty())
    fail("empty scalar", original);
  // Split at top-level +/- that are not exponent signs or leading signs.
  Scalar total;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    bool split = i == text.size();
    if (!split) {
      char c = text[i];
      if (c == '(')
        ++depth;
      else if (c == ')')
        --depth;
      else if ((c == '+' || c == '-') && depth == 0 && i > start) {
        char prev = text[i - 1];
        std::string_view lhs = trim(text.substr(start, i - start));
        split = !lhs.empty() && prev != 'e' && prev != 'E' && lhs.back() != '*' && lhs.back() != '/';
      }
    }
    if (split) {
      std::string_view part = trim(text.substr(start, i - start));
      if (part.empty() || part == "+" || part == "-")
        fail("malformed scalar", original);
      bool negative = part.front() == '-';
      if (part.front() == '+' || part.front() == '-')
        part = trim(part.substr(1));
      Scalar term = parse_scalar_term(part, original);
      total += negative ? -term : term;
      start = i;
    }
  }
  return total;
}

std::vector<Scalar> parse_coeff_list(std::string_view text)
{
  std::vector<Scalar> out;
  std::string_view rest = trim(text);
  if (rest.empty())
    fail("empty coefficient list", text);
  while (true) {
    auto comma = rest.find(',');
    out.push_back(parse_scalar(rest.substr(0, comma)));
    if (comma == std::string_view::npos)
      break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

RationalFn parse_ratfn(std::string_view text)
{
  std::string_view original = text;
  text = trim(text);
  auto bracketed = [&](std::string_view s) -> Poly {
    s = trim(s);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
      fail("expected [c0,c1,...]", original);
    return Poly(parse_coeff_list(s.substr(1, s.size() - 2)));
  };
  auto close = text.find(']');
  if (close == std::string_view::npos)
    fail("expected [c0,c1,...]", original);
  Poly num = bracketed(text.substr(0, close + 1));
  std::string_view rest = trim(text.substr(close + 1));
  if (rest.empty())
    return RationalFn(num);
  if (rest.front() != '/')
    fail("expected '/' between numerator and denominator", original);
  Poly den = bracketed(rest.substr(1));
  if (den.is_zero())
    throw Error(Errc::division_by_zero, "zero denominator in '" + std::string(original) + "'");
  return RationalFn(num, den);
}

Rate parse_rate(std::string_view text)
{
  std::string_view original = text;
  text = trim(text);
  if (text == "param" || text == "parameter")
    return Rate::parameter();
  auto s = text.find("sqrt(");
  if (s == std::string_view::npos)
    return Rate(parse_rational(text), 1);
  Scalar mu = parse_scalar_term(text, original);
  if (mu.is_rational())
    return Rate(mu.rational_part(), 1);
  return Rate(mu.radical_part(), mu.radicand());
}

NwsProblem parse_problem(std::string_view spec)
{
  std::string_view original = spec;
  spec = trim(spec);
  if (spec == "nws-case2")
    return nws_case2();
  if (spec == "nws-case3")
    return nws_case3();
  if (spec.starts_with("fisher:")) {
    std::string_view alpha = trim(spec.substr(7));
    if (alpha == "alpha")
      return fisher_symbolic();
    return fisher(parse_rational(alpha));
  }
  if (spec.starts_with("inline:")) {
    std::map<std::string, std::string, std::less<>> fields;
    std::string_view rest = spec.substr(7);
    while (!rest.empty()) {
      auto semi = rest.find(';');
      std::string_view item = trim(rest.substr(0, semi));
      rest = semi == std::string_view::npos ? std::string_view() : rest.substr(semi + 1);
      if (item.empty())
        continue;
      auto eq = item.find('=');
      if (eq == std::string_view::npos)
        fail("expected key=value", item);
      fields[std::string(trim(item.substr(0, eq)))] = std::string(trim(item.substr(eq + 1)));
    }
    for (const char* key : {"k", "a", "b", "q", "u0"})
      if (!fields.contains(key))
        fail(std::string("inline problem is missing '") + key + "'", original);
    for (const auto& [key, value] : fields)
      if (key != "k" && key != "a" && key != "b" && key != "q" && key != "u0" && key != "rate")
        fail("unknown inline key '" + key + "'", original);
    Rate rate = fields.contains("rate") ? parse_rate(fields["rate"]) : Rate::constant();
    long q = parse_long(fields["q"], original);
    if (q < 1)
      throw Error(Errc::invalid_argument, "exponent q must be >= 1");
    return make_problem(parse_scalar(fields["k"]), parse_scalar(fields["a"]), parse_scalar(fields["b"]),
                        static_cast<unsigned>(q), SeriesTerm::constant(rate, parse_ratfn(fields["u0"])),
                        rate);
  }
  throw Error(Errc::parse, "unknown problem '" + std::string(original) +
                               "' (expected fisher:<alpha>, nws-case2, nws-case3 or inline:...)");
}

}  // namespace adm
