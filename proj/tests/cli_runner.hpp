#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli {

struct Result {
  std::string out;
  int code = -1;
};

inline Result run(const std::string& args) {
  const std::string command = std::string(RIORDAN_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for " + command);
  Result r;
  char buffer[4096];
  for (std::size_t n; (n = fread(buffer, 1, sizeof buffer, pipe)) > 0;) r.out.append(buffer, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct GoldenCase {
  std::string name;
  std::string args;
};

/// Each line of cases.txt is "<name> <args...>"; the expected output is <name>.out.
inline std::vector<GoldenCase> golden_cases() {
  std::ifstream in(std::string(GOLDEN_DIR) + "/cases.txt");
  if (!in) throw std::runtime_error("missing golden cases.txt");
  std::vector<GoldenCase> cases;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto space = line.find(' ');
    cases.push_back({line.substr(0, space), line.substr(space + 1)});
  }
  return cases;
}

inline std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name + ".out", std::ios::binary);
  if (!in) throw std::runtime_error("missing golden file " + name + ".out");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace cli
