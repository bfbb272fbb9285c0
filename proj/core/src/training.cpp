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

#include "qclique/training.hpp"

#include <cmath>
#include <string>

#include "qclique/bound_circuit.hpp"
#include "qclique/embedding.hpp"
#include "qclique/errors.hpp"
#include "qclique/gradient.hpp"

namespace qclique {

std::vector<TrainingSample> embed_items(std::span<const DatasetItem> items) {
    std::vector<TrainingSample> out;
    out.reserve(items.size());
    for (const auto &item : items) {
        out.push_back({embed_graph(item.graph), item.label});
    }
    return out;
}

std::string_view loss_name(LossKind kind) noexcept {
    switch (kind) {
    case LossKind::MeanSquared:
        return "mse";
    case LossKind::Linear:
        return "linear";
    }
    return "unknown";
}

std::optional<LossKind> parse_loss(std::string_view name) noexcept {
    for (auto kind : {LossKind::MeanSquared, LossKind::Linear}) {
        if (name == loss_name(kind)) {
            return kind;
        }
    }
    return std::nullopt;
}

double loss(std::span<const double> predictions, const LabelVector &label,
            LossKind kind) {
    if (predictions.size() != label.size() || predictions.empty()) {
        throw UsageError("prediction and label lengths differ");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        if (kind == LossKind::Linear) {
            sum += 1.0 - label[i] * predictions[i];
        } else {
            const double d = predictions[i] - label[i];
            sum += d * d;
        }
    }
    return sum / static_cast<double>(predictions.size());
}

double node_accuracy(std::span<const double> predictions,
                     const LabelVector &label) {
    if (predictions.size() != label.size() || predictions.empty()) {
        throw UsageError("prediction and label lengths differ");
    }
    std::size_t hits = 0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        if (predictions[i] * label[i] > 0.0) {
            ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(predictions.size());
}

BatchObjective batch_objective(const CircuitTemplate &circuit,
                               std::span<const double> params,
                               std::span<const TrainingSample> batch,
                               LossKind kind) {
    if (batch.empty()) {
        throw UsageError("empty training batch");
    }
    const auto p = static_cast<Eigen::Index>(circuit.n_params());
    BatchObjective out{0.0, Eigen::VectorXd::Zero(p), Eigen::MatrixXd::Zero(p, p)};
    check_inputs(circuit, params, batch.front().input);
    const BoundCircuit bound(circuit, params);
    for (const auto &sample : batch) {
        const auto jac = bound.jacobian(sample.input);
        const auto z = expectations_z(jac.state);
        const Eigen::MatrixXd dz = expectation_jacobian(jac);
        const double n = static_cast<double>(z.size());
        out.loss += loss(z, sample.label, kind);
        for (std::size_t i = 0; i < z.size(); ++i) {
            // d loss / d z_i
            const double weight = kind == LossKind::Linear
                                      ? -sample.label[i] / n
                                      : (2.0 / n) * (z[i] - sample.label[i]);
            out.gradient +=
                weight * dz.row(static_cast<Eigen::Index>(i)).transpose();
        }
        out.metric += fubini_study_metric(jac);
    }
    const double m = static_cast<double>(batch.size());
    out.loss /= m;
    out.gradient /= m;
    out.metric /= m;
    return out;
}

Eigen::VectorXd natural_direction(const Eigen::MatrixXd &metric,
                                  const Eigen::VectorXd &gradient, double reg) {
    Eigen::MatrixXd system = metric;
    system.diagonal().array() += reg;
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(system);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
        throw NumericalError("regularized metric is not positive definite "
                             "(reg = " + std::to_string(reg) + ")");
    }
    const double smallest = ldlt.vectorD().minCoeff();
    const double largest = ldlt.vectorD().maxCoeff();
    if (!(smallest > 1e-14 * std::max(largest, 1.0))) {
        throw NumericalError(
            "regularized metric is singular: smallest pivot " +
            std::to_string(smallest) + ", largest " + std::to_string(largest) +
            ", reg = " + std::to_string(reg));
    }
    Eigen::VectorXd x = ldlt.solve(gradient);
    if (!x.allFinite()) {
        throw NumericalError("natural gradient solve produced non-finite values");
    }
    return x;
}

QngStep qng_step(const CircuitTemplate &circuit, std::span<const double> params,
                 std::span<const TrainingSample> batch, double lr, double reg,
                 LossKind kind) {
    const auto obj = batch_objective(circuit, params, batch, kind);
    const Eigen::VectorXd step = natural_direction(obj.metric, obj.gradient, reg);
    QngStep out{std::vector<double>(params.begin(), params.end()), obj.loss};
    for (std::size_t c = 0; c < out.params.size(); ++c) {
        out.params[c] -= lr * step(static_cast<Eigen::Index>(c));
    }
    return out;
}

double node_avg_accuracy(const CircuitTemplate &circuit,
                         std::span<const double> params,
                         std::span<const TrainingSample> samples) {
    if (samples.empty()) {
        throw UsageError("accuracy needs at least one sample");
    }
    check_inputs(circuit, params, samples.front().input);
    const BoundCircuit bound(circuit, params);
    double sum = 0.0;
    for (const auto &s : samples) {
        const auto z = expectations_z(bound.apply(s.input));
        sum += node_accuracy(z, s.label);
    }
    return sum / static_cast<double>(samples.size());
}

} // namespace qclique
