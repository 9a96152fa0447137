#include "support/proc.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace forno::testing {

namespace {

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::string scratch_dir() {
  static const std::string dir = [] {
    std::string tmpl =
        (std::filesystem::temp_directory_path() / "forno-tests-XXXXXX").string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    if (mkdtemp(buf.data()) == nullptr) {
      throw std::runtime_error("mkdtemp failed");
    }
    return std::string(buf.data());
  }();
  return dir;
}

std::string write_scratch_file(const std::string& name, const std::string& content) {
  std::string path = scratch_dir() + "/" + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  return path;
}

CommandResult run_command(const std::string& command) {
  static int counter = 0;
  std::string out_file = scratch_dir() + "/cmd-out-" + std::to_string(counter);
  std::string err_file = scratch_dir() + "/cmd-err-" + std::to_string(counter);
  ++counter;

  std::string full = command + " >" + out_file + " 2>" + err_file;
  int status = std::system(full.c_str());

  CommandResult result;
  result.out = read_all(out_file);
  result.err = read_all(err_file);
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  }
  return result;
}

}  // namespace forno::testing
