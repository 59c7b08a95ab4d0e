#include "forkdiv/config.hpp"

#include <fstream>
#include <istream>

#include "forkdiv/errors.hpp"

namespace forkdiv::harness {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

Caps load_config(std::istream& in, Caps base) {
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw DomainError("config line " + std::to_string(line_no) +
                        ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    int parsed;
    try {
      parsed = std::stoi(value);
    } catch (const std::exception&) {
      throw DomainError("config line " + std::to_string(line_no) +
                        ": bad integer '" + value + "'");
    }
    if (key == "chi_exact_cap") base.chi_exact = parsed;
    else if (key == "canonical_cap") base.canonical = parsed;
    else if (key == "hole_search_cap") base.hole_search = parsed;
    else if (key == "perfect_brute_cap") base.perfect_brute = parsed;
    else if (key == "perfect_spgt_cap") base.perfect_spgt = parsed;
    else if (key == "division_cap") base.division = parsed;
    else if (key == "pd_cap") base.pd = parsed;
    else if (key == "context_cap") base.context = parsed;
    else if (key == "audit_rate_percent") base.audit_rate_percent = parsed;
    else
      throw DomainError("config line " + std::to_string(line_no) +
                        ": unknown key '" + key + "'");
  }
  return base;
}

Caps load_config_file(const std::string& path, Caps base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  return load_config(in, base);
}

}  // namespace forkdiv::harness
