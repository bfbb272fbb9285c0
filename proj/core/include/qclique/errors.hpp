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
 * Exception types shared by all qclique modules. The CLI maps each family
 * onto a distinct process exit code.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace qclique {

/// Invalid sizes, probabilities or otherwise unusable settings.
class ConfigurationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Caller passed arguments that do not fit the object they act on.
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Dataset generation gave up after exhausting its retry budget.
class GenerationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A linear solve or decomposition failed.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file (dataset or accuracy CSV).
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace qclique
