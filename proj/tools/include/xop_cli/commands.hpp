#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "xop/family.hpp"
#include "xop/quadrature.hpp"

namespace xop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< a check failed or a solve broke down
inline constexpr int kExitInvalid = 2;  ///< bad flags or parameters outside the family's domain

enum class Format { json, csv };

struct CliConfig {
  std::string subcommand;
  std::string family;
  double alpha = 0;
  std::optional<double> beta;
  int count = 10;
  int degree = 1;
  int max_degree = 6;
  Format format = Format::csv;
  std::string output;  ///< empty: stdout
  bool check = false;
  bool x2_flag = false;
  std::optional<double> quad_tol;

  QuadratureSpec quadrature() const;
};

int cmd_moments(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_poly(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xop::cli
