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
 * Loss, quantum-natural-gradient updates and node-averaged accuracy.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qclique/ansatz.hpp"
#include "qclique/dataset.hpp"
#include "qclique/graph.hpp"
#include "qclique/statevector.hpp"

namespace qclique {

/// An embedded graph and its target pattern.
struct TrainingSample {
    Statevector input;
    LabelVector label;
};

std::vector<TrainingSample> embed_items(std::span<const DatasetItem> items);

/// Mean squared error between per-qubit <Z> predictions and +/-1 targets.
/// Per-item loss on the <Z_i> predictions against +-1 labels.
enum class LossKind {
    /// mean_i (z_i - l_i)^2
    MeanSquared,
    /// mean_i (1 - l_i z_i)
    Linear,
};

std::string_view loss_name(LossKind kind) noexcept;
std::optional<LossKind> parse_loss(std::string_view name) noexcept;

double loss(std::span<const double> predictions, const LabelVector &label,
            LossKind kind = LossKind::MeanSquared);

/// Fraction of qubits whose <Z> sign matches the label. <Z> == 0 counts as
/// a miss.
double node_accuracy(std::span<const double> predictions,
                     const LabelVector &label);

/// Batch means of loss, loss gradient and Fubini-Study metric.
struct BatchObjective {
    double loss = 0.0;
    Eigen::VectorXd gradient;
    Eigen::MatrixXd metric;
};

BatchObjective batch_objective(const CircuitTemplate &circuit,
                               std::span<const double> params,
                               std::span<const TrainingSample> batch,
                               LossKind kind = LossKind::MeanSquared);

struct QngStep {
    std::vector<double> params;
    /// Batch loss before the update.
    double loss = 0.0;
};

/**
 * One natural-gradient update:
 *   params - lr * (G + reg I)^-1 g
 * with g and G the batch-mean loss gradient and metric. Throws
 * NumericalError if the regularized metric is singular, UsageError on an
 * empty batch.
 */
QngStep qng_step(const CircuitTemplate &circuit, std::span<const double> params,
                 std::span<const TrainingSample> batch, double lr, double reg,
                 LossKind kind = LossKind::MeanSquared);

/// Solves (metric + reg I) x = gradient.
Eigen::VectorXd natural_direction(const Eigen::MatrixXd &metric,
                                  const Eigen::VectorXd &gradient, double reg);

/// Mean over samples of node_accuracy.
double node_avg_accuracy(const CircuitTemplate &circuit,
                         std::span<const double> params,
                         std::span<const TrainingSample> samples);

} // namespace qclique
