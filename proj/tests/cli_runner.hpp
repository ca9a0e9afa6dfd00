#pragma once

// Runs the pwitness binary through the shell and captures stdout and the
// exit status. PWITNESS_CLI is set by the build.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

namespace cli {

struct Result {
  int status = -1;
  std::string out;
};

inline Result run(const std::string& args, bool keep_stderr = false) {
  const std::string cmd = std::string(PWITNESS_CLI) + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

/// A scratch directory removed on destruction.
class Scratch {
 public:
  Scratch() {
    std::random_device rd;
    dir_ = std::filesystem::temp_directory_path() / ("pwitness-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(dir_);
  }
  ~Scratch() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;

  std::string file(const std::string& name, const std::string& contents) const {
    const auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << contents;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  std::filesystem::path dir_;
};

}  // namespace cli
