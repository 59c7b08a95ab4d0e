#include "forkdiv/cache.hpp"

#include <filesystem>
#include <fstream>

#include "forkdiv/errors.hpp"

namespace forkdiv::harness {

PDCache cache_load(const std::string& path) {
  PDCache cache;
  if (!std::filesystem::exists(path)) return cache;
  std::ifstream in(path);
  if (!in) throw IoError("cannot open cache file: " + path);
  std::map<std::string, long> first_line;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw CorruptionError("cache line " + std::to_string(line_no) +
                            " has no tab separator: " + path);
    const std::string key = line.substr(0, tab);
    const std::string status = line.substr(tab + 1);
    bool pd;
    if (status == "PD")
      pd = true;
    else if (status == "NPD")
      pd = false;
    else
      throw CorruptionError("cache line " + std::to_string(line_no) +
                            " has status '" + status + "': " + path);
    auto it = cache.entries.find(key);
    if (it == cache.entries.end()) {
      cache.entries.emplace(key, pd);
      first_line.emplace(key, line_no);
    } else if (it->second != pd) {
      throw CorruptionError("conflicting statuses for key '" + key +
                            "' at lines " + std::to_string(first_line[key]) +
                            " and " + std::to_string(line_no) + ": " + path);
    }
  }
  return cache;
}

void cache_append(const std::string& path, const std::string& key, bool pd) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw IoError("cannot open cache file for append: " + path);
  out << key << '\t' << (pd ? "PD" : "NPD") << '\n';
  out.flush();
  if (!out) throw IoError("cache append failed: " + path);
}

}  // namespace forkdiv::harness
