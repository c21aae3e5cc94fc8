#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace negbeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

struct SubcommandInfo {
  std::string_view name;
  std::string_view summary;
  /// Library operations this subcommand exposes.
  std::vector<std::string_view> operations;
};

const std::vector<SubcommandInfo>& subcommands();

/// Every public operation of the library, by name.
const std::vector<std::string_view>& library_operations();

/// args excludes the program name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace negbeta::cli
