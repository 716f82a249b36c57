// Copyright (C) 2026 gridit contributors
// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <string>
#include <vector>
namespace gridit {
int run_cli(const std::vector<std::string>&) { std::fprintf(stderr, "gridit: not yet wired\n"); return 2; }
}
