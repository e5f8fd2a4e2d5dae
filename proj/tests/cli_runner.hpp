// Copyright 2026 The miw-oscillator Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef MIW_TESTS_CLI_RUNNER_HPP_
#define MIW_TESTS_CLI_RUNNER_HPP_

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace miw::testing {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string ReadText(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// A scratch directory with its own solution cache; removed on scope exit.
class CliSandbox {
 public:
  CliSandbox() {
    std::random_device rd;
    root_ = std::filesystem::temp_directory_path() / ("miw-cli-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(root_);
  }
  ~CliSandbox() {
    std::error_code ec;
    std::filesystem::remove_all(root_, ec);
  }
  CliSandbox(const CliSandbox&) = delete;
  CliSandbox& operator=(const CliSandbox&) = delete;

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path file(const std::string& name) const { return root_ / name; }

  // Runs the CLI with `args` (already shell-quoted where needed).
  CliResult Run(const std::string& args) const {
    const auto out = root_ / ".stdout";
    const auto err = root_ / ".stderr";
    const std::string cmd = "cd '" + root_.string() + "' && MIW_CACHE_DIR='" + (root_ / "cache").string() + "' '" +
                            MIW_CLI_PATH + "' " + args + " > '" + out.string() + "' 2> '" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = ReadText(out);
    r.err = ReadText(err);
    return r;
  }

 private:
  std::filesystem::path root_;
};

}  // namespace miw::testing

#endif  // MIW_TESTS_CLI_RUNNER_HPP_
