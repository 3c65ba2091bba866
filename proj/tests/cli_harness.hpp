// Helpers for suites that drive the installed cohgraph executable. The
// build injects the binary's location as COHGRAPH_CLI_PATH.

#ifndef COHGRAPH_TESTS_CLI_HARNESS_HPP
#define COHGRAPH_TESTS_CLI_HARNESS_HPP

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace testsupport {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void spit(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out << bytes;
}

// Runs `[env_prefix] cohgraph <args>` through the shell, capturing both
// streams. Paths passed in args must not contain shell metacharacters.
inline RunResult run_cli(const std::string& args,
                         const std::string& env_prefix = "") {
  namespace fs = std::filesystem;
  static int serial = 0;
  const auto tag = std::to_string(::getpid()) + "_" + std::to_string(serial++);
  const auto out_path = fs::temp_directory_path() / ("cli_out_" + tag);
  const auto err_path = fs::temp_directory_path() / ("cli_err_" + tag);

  std::string command = env_prefix.empty() ? "" : env_prefix + " ";
  command += std::string(COHGRAPH_CLI_PATH) + " " + args;
  command += " >" + out_path.string() + " 2>" + err_path.string();

  const int status = std::system(command.c_str());
  RunResult result;
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  fs::remove(out_path);
  fs::remove(err_path);
  return result;
}

// Fresh scratch directory for one suite run.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace testsupport

#endif  // COHGRAPH_TESTS_CLI_HARNESS_HPP
