#pragma once

#include <string_view>
#include <vector>

#include "adm/solver.hpp"

namespace adm {

/// `3`, `-1/2`, `0.125`, `2.5e-3`; decimals are converted exactly from their digits.
Rational parse_rational(std::string_view text);

/// Sum of terms `r`, `r*sqrt(d)`, `sqrt(d)`, `sqrt(d)/n`, e.g. `1/2 + 3/4*sqrt(3)`.
Scalar parse_scalar(std::string_view text);

/// Comma-separated scalars `c0,c1,...`.
std::vector<Scalar> parse_coeff_list(std::string_view text);

/// `[c0,c1,...]` or `[c0,...]/[d0,...]` in the generator E.
RationalFn parse_ratfn(std::string_view text);

/// `param`, `0`, `m`, `m*sqrt(b)`, or `sqrt(b)`.
Rate parse_rate(std::string_view text);

/// Problem selector:
///   fisher:<rational> | fisher:alpha | nws-case2 | nws-case3 |
///   inline:k=..;a=..;b=..;q=..;u0=..;rate=..
NwsProblem parse_problem(std::string_view spec);

}  // namespace adm
