// Runs the pi1lab executable (path baked in as PI1LAB_BINARY) through the
// shell and captures its streams and exit status.

#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

/// `env` is a prefix of VAR=value assignments.
inline CliResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const std::string stem = "cli_capture_" + std::to_string(counter++);
  const std::string command = env + (env.empty() ? "" : " ") + "'" PI1LAB_BINARY "' " + args + " > " + stem +
                              ".out 2> " + stem + ".err";
  const int status = std::system(command.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_text(stem + ".out");
  r.err = read_text(stem + ".err");
  std::remove((stem + ".out").c_str());
  std::remove((stem + ".err").c_str());
  return r;
}
