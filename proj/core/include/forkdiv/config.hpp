#pragma once

#include <iosfwd>
#include <string>

namespace forkdiv::harness {

/// Exactness caps and sampling rates, overridable through a plain key=value
/// config file. Defaults match the library contracts.
struct Caps {
  int chi_exact = 16;
  int canonical = 16;
  int hole_search = 16;
  int perfect_brute = 10;
  int perfect_spgt = 16;
  int division = 12;
  int pd = 10;
  int context = 16;
  int audit_rate_percent = 1;
};

/// Parses "key=value" lines; '#' starts a comment, blank lines are skipped.
/// Unknown keys throw DomainError.
Caps load_config(std::istream& in, Caps base = {});
Caps load_config_file(const std::string& path, Caps base = {});

}  // namespace forkdiv::harness
