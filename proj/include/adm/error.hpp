#pragma once

#include <stdexcept>
#include <string>

namespace adm {

enum class Errc {
  invalid_argument,
  division_by_zero,
  radicand_mismatch,
  rate_mismatch,
  pole,
  degree_cap,
  no_reference,
  parse,
  unbound_parameter,
};

const char* errc_name(Errc code) noexcept;

/// Every failure raised by the core carries one of the codes above; the C API
/// maps them onto adm_status values.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace adm
