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

#include "qclique/experiment.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <future>
#include <istream>
#include <ostream>
#include <random>
#include <string>

#include <fmt/format.h>

#include "qclique/errors.hpp"
#include "qclique/training.hpp"

namespace qclique {

namespace {

// Independent generator streams derived from one user seed.
enum class Stream : std::uint32_t { Init = 1, Shuffle = 2, Resample = 3 };

std::uint64_t derive_seed(std::uint64_t seed, Stream stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    return (std::uint64_t{words[0]} << 32) | words[1];
}

} // namespace

void TrainConfig::validate() const {
    if (epochs < 1) {
        throw ConfigurationError("epochs must be at least 1");
    }
    if (train_size < 2 || train_size >= dataset_size) {
        throw ConfigurationError("train_size must lie in [2, dataset_size)");
    }
    if (batch_size < 1) {
        throw ConfigurationError("batch_size must be at least 1");
    }
    if (!(learning_rate > 0.0)) {
        throw ConfigurationError("learning rate must be positive");
    }
    if (!(metric_regularizer > 0.0)) {
        throw ConfigurationError("metric regularizer must be positive");
    }
    if (!(init_scale >= 0.0)) {
        throw ConfigurationError("init scale must be non-negative");
    }
    if (seeds.empty()) {
        throw ConfigurationError("at least one seed is required");
    }
    if (k < 1 || k > n_qubits) {
        throw ConfigurationError("clique size must lie in 1..n_qubits");
    }
    // Surfaces qubit-count restrictions of the chosen layer.
    (void)build_ansatz(ansatz, n_qubits, effective_repetitions());
}

DatasetSplit split_dataset(const Dataset &dataset, std::size_t train_size) {
    const std::size_t want_clique = train_size - train_size / 2;
    const std::size_t want_blank = train_size / 2;
    std::size_t have_clique = 0;
    std::size_t have_blank = 0;
    DatasetSplit split;
    for (const auto &item : dataset.items) {
        const bool clique = item.label.has_clique();
        if (clique && have_clique < want_clique) {
            ++have_clique;
            split.train.push_back(item);
        } else if (!clique && have_blank < want_blank) {
            ++have_blank;
            split.train.push_back(item);
        } else {
            split.validation.push_back(item);
        }
    }
    if (have_clique < want_clique || have_blank < want_blank) {
        throw ConfigurationError("dataset too small for a balanced training "
                                 "set of " + std::to_string(train_size));
    }
    if (split.validation.empty()) {
        throw ConfigurationError("dataset leaves no validation items");
    }
    return split;
}

AccuracyCurve aggregate_curves(const std::vector<SeedCurve> &per_seed) {
    AccuracyCurve curve;
    if (per_seed.empty()) {
        return curve;
    }
    const std::size_t epochs = per_seed.front().node_avg.size();
    for (const auto &s : per_seed) {
        if (s.node_avg.size() != epochs) {
            throw UsageError("seed curves have different lengths");
        }
    }
    const double m = static_cast<double>(per_seed.size());
    for (std::size_t e = 0; e < epochs; ++e) {
        double sum = 0.0;
        for (const auto &s : per_seed) {
            sum += s.node_avg[e];
        }
        const double mean = sum / m;
        double err = 0.0;
        if (per_seed.size() > 1) {
            double sq = 0.0;
            for (const auto &s : per_seed) {
                const double d = s.node_avg[e] - mean;
                sq += d * d;
            }
            err = 1.96 * std::sqrt(sq / (m - 1.0)) / std::sqrt(m);
        }
        curve.records.push_back({e + 1, mean, err});
    }
    return curve;
}

SeedCurve train_seed(const TrainConfig &config, const Dataset &dataset,
                     std::uint64_t seed, const ProgressCallback &progress) {
    config.validate();
    if (dataset.n_nodes != config.n_qubits) {
        throw ConfigurationError("dataset has " + std::to_string(dataset.n_nodes) +
                                 " nodes, configuration expects " +
                                 std::to_string(config.n_qubits));
    }
    const auto circuit = build_ansatz(config.ansatz, config.n_qubits,
                                      config.effective_repetitions());
    auto split = split_dataset(dataset, config.train_size);
    auto train = embed_items(split.train);
    const auto validation = embed_items(split.validation);

    Rng init_rng(derive_seed(seed, Stream::Init));
    Rng shuffle_rng(derive_seed(seed, Stream::Shuffle));
    std::optional<ItemSampler> resampler;
    if (config.resample_each_epoch) {
        resampler.emplace(dataset.n_nodes, dataset.k, dataset.edge_prob_range,
                          derive_seed(seed, Stream::Resample));
    }

    std::uniform_real_distribution<double> init(-config.init_scale,
                                                config.init_scale);
    std::vector<double> params(circuit.n_params());
    for (auto &p : params) {
        p = init(init_rng);
    }

    SeedCurve out{seed, {}};
    out.node_avg.reserve(config.epochs);
    std::vector<TrainingSample> batch;
    for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
        if (resampler && epoch > 1) {
            train = embed_items(resampler->draw_balanced(
                config.train_size - config.train_size / 2,
                config.train_size / 2));
        }
        const auto order = random_permutation(train.size(), shuffle_rng);
        double loss_sum = 0.0;
        std::size_t steps = 0;
        for (std::size_t start = 0; start < order.size();
             start += config.batch_size) {
            batch.clear();
            const std::size_t stop =
                std::min(order.size(), start + config.batch_size);
            for (std::size_t i = start; i < stop; ++i) {
                batch.push_back(train[order[i]]);
            }
            auto step = qng_step(circuit, params, batch, config.learning_rate,
                                 config.metric_regularizer, config.loss);
            params = std::move(step.params);
            loss_sum += step.loss;
            ++steps;
        }
        const double acc = node_avg_accuracy(circuit, params, validation);
        out.node_avg.push_back(acc);
        if (progress) {
            progress({seed, epoch, loss_sum / static_cast<double>(steps), acc});
        }
    }
    return out;
}

namespace {

template <typename SeedFn>
ExperimentResult run_seeds(const TrainConfig &config, SeedFn &&fn) {
    config.validate();
    ExperimentResult result;
    result.per_seed.resize(config.seeds.size());
    const std::size_t jobs = std::max<std::size_t>(config.jobs, 1);
    for (std::size_t first = 0; first < config.seeds.size(); first += jobs) {
        const std::size_t last = std::min(config.seeds.size(), first + jobs);
        if (jobs == 1) {
            result.per_seed[first] = fn(config.seeds[first]);
            continue;
        }
        std::vector<std::future<SeedCurve>> running;
        for (std::size_t i = first; i < last; ++i) {
            running.push_back(
                std::async(std::launch::async, fn, config.seeds[i]));
        }
        for (std::size_t i = first; i < last; ++i) {
            result.per_seed[i] = running[i - first].get();
        }
    }
    result.curve = aggregate_curves(result.per_seed);
    return result;
}

} // namespace

ExperimentResult run_experiment(const TrainConfig &config,
                                const ProgressCallback &progress) {
    return run_seeds(config, [&](std::uint64_t seed) {
        const auto dataset =
            build_dataset(config.n_qubits, config.k, config.dataset_size,
                          config.edge_prob_range, seed);
        return train_seed(config, dataset, seed, progress);
    });
}

ExperimentResult run_experiment(const TrainConfig &config, const Dataset &dataset,
                                const ProgressCallback &progress) {
    return run_seeds(config, [&](std::uint64_t seed) {
        return train_seed(config, dataset, seed, progress);
    });
}

void write_curve_csv(std::ostream &out, const AccuracyCurve &curve) {
    out << kCurveHeader << '\n';
    for (const auto &r : curve.records) {
        out << fmt::format("{},{},{}\n", r.epoch, r.node_avg, r.node_avg_error);
    }
}

void write_seed_curve_csv(std::ostream &out, const SeedCurve &curve) {
    out << kSeedCurveHeader << '\n';
    for (std::size_t e = 0; e < curve.node_avg.size(); ++e) {
        out << fmt::format("{},{}\n", e + 1, curve.node_avg[e]);
    }
}

namespace {

template <typename T>
bool parse_field(std::string_view text, T &value) {
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    return ec == std::errc{} && ptr == end;
}

} // namespace

AccuracyCurve read_curve_csv(std::istream &in) {
    std::string line;
    std::size_t line_no = 0;
    AccuracyCurve curve;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (!have_header) {
            if (line != kCurveHeader) {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected header '" +
                                 std::string(kCurveHeader) + "'");
            }
            have_header = true;
            continue;
        }
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
        CurveRecord r;
        const std::string_view view(line);
        if (c2 == std::string::npos ||
            line.find(',', c2 + 1) != std::string::npos ||
            !parse_field(view.substr(0, c1), r.epoch) ||
            !parse_field(view.substr(c1 + 1, c2 - c1 - 1), r.node_avg) ||
            !parse_field(view.substr(c2 + 1), r.node_avg_error)) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": malformed row '" + line + "'");
        }
        if (!curve.records.empty() && r.epoch <= curve.records.back().epoch) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": epochs must increase");
        }
        curve.records.push_back(r);
    }
    if (!have_header) {
        throw ParseError("curve file is empty");
    }
    return curve;
}

} // namespace qclique
