#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zigzag::cli {

  inline constexpr int exit_ok           = 0;
  inline constexpr int exit_mismatch     = 1;
  inline constexpr int exit_validation   = 2;
  inline constexpr int exit_precondition = 3;
  inline constexpr int exit_epi_found    = 10;

  // args excludes the program name. Reports go to out, diagnostics to err.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  // Lowercase hex SHA-256.
  std::string sha256_hex(std::string const& data);

}  // namespace zigzag::cli
