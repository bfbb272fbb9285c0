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
 * Multi-seed training runs and their accuracy curves.
 *
 * Each seed trains a fresh parameter vector on a fixed, balanced training
 * subset and records node-averaged validation accuracy after every epoch.
 * Seeds are aggregated into a mean curve with 95% confidence half-widths.
 *
 * Curve CSV layout (header is fixed):
 *
 *     Epoch,Node_Avg,Node_Avg_Error
 *     1,0.71,0.012
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "qclique/ansatz.hpp"
#include "qclique/dataset.hpp"
#include "qclique/training.hpp"

namespace qclique {

inline constexpr std::string_view kCurveHeader = "Epoch,Node_Avg,Node_Avg_Error";
inline constexpr std::string_view kSeedCurveHeader = "Epoch,Node_Avg";

struct TrainConfig {
    AnsatzKind ansatz = AnsatzKind::PermutationInvariant;
    std::size_t n_qubits = 6;
    std::size_t k = 4;
    /// 0 selects default_repetitions(ansatz).
    std::size_t repetitions = 0;
    std::size_t epochs = 50;
    std::size_t train_size = 100;
    std::size_t dataset_size = 3000;
    std::size_t batch_size = 20;
    LossKind loss = LossKind::MeanSquared;
    double learning_rate = 0.1;
    double metric_regularizer = 1e-3;
    /// Initial parameters are uniform in [-init_scale, init_scale].
    double init_scale = 0.1;
    EdgeProbRange edge_prob_range;
    /// Draw a fresh balanced training set every epoch instead of reusing
    /// the first train_size items.
    bool resample_each_epoch = false;
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    /// Seeds trained concurrently; results do not depend on it.
    std::size_t jobs = 1;

    [[nodiscard]] std::size_t effective_repetitions() const noexcept {
        return repetitions == 0 ? default_repetitions(ansatz) : repetitions;
    }

    /// Throws ConfigurationError on an unusable configuration.
    void validate() const;
};

struct CurveRecord {
    std::size_t epoch = 0;
    double node_avg = 0.0;
    double node_avg_error = 0.0;

    friend bool operator==(const CurveRecord &, const CurveRecord &) = default;
};

struct AccuracyCurve {
    std::vector<CurveRecord> records;

    friend bool operator==(const AccuracyCurve &, const AccuracyCurve &) = default;
};

struct SeedCurve {
    std::uint64_t seed = 0;
    /// node_avg[e] is the validation accuracy after epoch e + 1.
    std::vector<double> node_avg;
};

struct ExperimentResult {
    AccuracyCurve curve;
    std::vector<SeedCurve> per_seed;
};

struct TrainProgress {
    std::uint64_t seed;
    std::size_t epoch;
    double train_loss;
    double validation_accuracy;
};

using ProgressCallback = std::function<void(const TrainProgress &)>;

/// Training split: the first train_size - train_size / 2 clique items and
/// the first train_size / 2 blank items, in dataset order. Everything else
/// is validation.
struct DatasetSplit {
    std::vector<DatasetItem> train;
    std::vector<DatasetItem> validation;
};

DatasetSplit split_dataset(const Dataset &dataset, std::size_t train_size);

/// Mean per epoch and 1.96 * s / sqrt(m) with s the sample standard
/// deviation over m seeds (0 for a single seed).
AccuracyCurve aggregate_curves(const std::vector<SeedCurve> &per_seed);

/// One seed on a given dataset. The seed drives initialization and batch
/// order (and resampling, when enabled).
SeedCurve train_seed(const TrainConfig &config, const Dataset &dataset,
                     std::uint64_t seed, const ProgressCallback &progress = {});

/// Builds a dataset per seed (seeded by that seed) and trains on it.
ExperimentResult run_experiment(const TrainConfig &config,
                                const ProgressCallback &progress = {});

/// Trains every seed on the same dataset.
ExperimentResult run_experiment(const TrainConfig &config, const Dataset &dataset,
                                const ProgressCallback &progress = {});

void write_curve_csv(std::ostream &out, const AccuracyCurve &curve);
/// Throws ParseError naming the offending line.
AccuracyCurve read_curve_csv(std::istream &in);

void write_seed_curve_csv(std::ostream &out, const SeedCurve &curve);

} // namespace qclique
