// Copyright 2026 The qclique Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * The qclique command-line interface as a callable library, so the binary
 * and the tests share one entry point.
 *
 * Commands:
 *   gen-data  build a balanced dataset file and print its class balance
 *   train     multi-seed training; writes curve CSVs and a manifest
 *   report    compare curve CSVs and write a merged, plot-ready CSV
 *   replay    rerun a training manifest and compare artifact checksums
 */
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace qclique::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kData = 2,
    kNumerical = 3,
};

/// Environment variable naming the default output directory.
inline constexpr const char *kOutputDirEnv = "QCLIQUE_OUTPUT_DIR";

/// Runs one command. args[0] is the program name.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

/// Lower-case hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path &path);

} // namespace qclique::cli
