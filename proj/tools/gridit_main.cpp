// Copyright (C) 2026 gridit contributors
// SPDX-License-Identifier: Apache-2.0
#include <vector>
#include <string>

namespace gridit {
int run_cli(const std::vector<std::string>& args);
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gridit::run_cli(args);
}
