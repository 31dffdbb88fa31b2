// Helper for driving the command-line binary from tests. The path comes
// from the MDRS_CLI environment variable, set by CTest.
#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace cli {

struct Result {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string binary_path() {
  const char* path = std::getenv("MDRS_CLI");
  return path == nullptr ? std::string{} : std::string{path};
}

inline std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("mdrs_cli_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void spit(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

// Runs `mdrs <args>` with stdout/stderr captured; extra_env like "MDRS_CI=1"
// prefixes the command.
inline Result run(const std::string& args, const std::string& extra_env = "") {
  Result result;
  const std::string bin = binary_path();
  if (bin.empty()) return result;
  const auto dir = scratch_dir();
  const auto out_path = dir / "stdout.txt";
  const auto err_path = dir / "stderr.txt";
  std::string cmd;
  if (!extra_env.empty()) cmd += extra_env + " ";
  cmd += "'" + bin + "' " + args + " > '" + out_path.string() + "' 2> '" +
         err_path.string() + "'";
  const int status = std::system(cmd.c_str());
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

}  // namespace cli
