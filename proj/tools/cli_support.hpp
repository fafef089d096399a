#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "csppke/params.hpp"
#include "csppke/textio.hpp"

namespace csppke::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitAbort = 3;

/// Parameter validation failed; maps to exit code 2.
class InvalidParams : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Strict-mode key generation produced ⊥; maps to exit code 3.
class StrictAbort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --params FILE plus the inline overrides shared by every command that
/// takes scheme parameters.
struct ParamFlags {
  std::string file;
  std::optional<std::uint32_t> n, m, k, sigma;
  std::optional<std::uint64_t> gamma, mprime;
  std::optional<double> alpha, beta;

  void attach(CLI::App& cmd);
  /// Merges file and flags, sets the seed and validates. Warnings go to
  /// stderr; errors throw InvalidParams.
  SchemeParams resolve(std::uint64_t seed, bool strict) const;
};

std::string read_file(const std::string& path);
/// Writes to `path`, or to stdout when it is empty.
void write_output(const std::string& path, const std::string& text);

/// Runs `parse` over the file at `path`; format errors are reported as
/// "path: line N: ...".
template <typename Fn>
auto load(const std::string& path, Fn&& parse) {
  std::istringstream in(read_file(path));
  LineReader reader(in);
  try {
    return parse(reader);
  } catch (const FormatError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace csppke::cli
