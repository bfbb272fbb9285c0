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

#include "cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/chrono.h>
#include <fmt/format.h>
#include <json.hpp>
#include <openssl/evp.h>

#include "qclique/ansatz.hpp"
#include "qclique/dataset.hpp"
#include "qclique/errors.hpp"
#include "qclique/experiment.hpp"
#include "qclique/io.hpp"
#include "qclique/training.hpp"

namespace qclique::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kManifestVersion = 1;

/// Raised for unreadable or unwritable files; maps to the data exit code.
class FileError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

fs::path default_output_dir() {
    if (const char *env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
        return env;
    }
    return "results";
}

std::string utc_now() {
    return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}",
                       std::chrono::floor<std::chrono::seconds>(
                           std::chrono::system_clock::now()));
}

void ensure_directory(const fs::path &dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw FileError("cannot create directory " + dir.string() + ": " +
                        ec.message());
    }
}

void write_text(const fs::path &path, const std::string &text) {
    try {
        write_file_atomic(path, text);
    } catch (const std::exception &e) {
        throw FileError(e.what());
    }
}

std::string read_text(const fs::path &path) {
    try {
        return read_file(path);
    } catch (const std::exception &e) {
        throw FileError(e.what());
    }
}

// ---------------------------------------------------------------- file names

std::string average_csv_name(AnsatzKind kind, std::size_t n) {
    return fmt::format("Accuracy_{}_Average_{}_qubits.csv", ansatz_file_tag(kind), n);
}

std::string seed_csv_name(AnsatzKind kind, std::size_t n, std::uint64_t seed) {
    return fmt::format("Accuracy_{}_Seed{}_{}_qubits.csv", ansatz_file_tag(kind),
                       seed, n);
}

std::string manifest_name(AnsatzKind kind, std::size_t n) {
    return fmt::format("Accuracy_{}_{}_qubits.manifest.json", ansatz_file_tag(kind), n);
}

// ------------------------------------------------------------ config <-> json

json config_to_json(const TrainConfig &c) {
    return {{"ansatz", ansatz_name(c.ansatz)},
            {"n_qubits", c.n_qubits},
            {"k", c.k},
            {"repetitions", c.effective_repetitions()},
            {"epochs", c.epochs},
            {"train_size", c.train_size},
            {"dataset_size", c.dataset_size},
            {"batch_size", c.batch_size},
            {"loss", loss_name(c.loss)},
            {"learning_rate", c.learning_rate},
            {"metric_regularizer", c.metric_regularizer},
            {"init_scale", c.init_scale},
            {"edge_prob_range", {c.edge_prob_range.low, c.edge_prob_range.high}},
            {"resample_each_epoch", c.resample_each_epoch},
            {"seeds", c.seeds},
            {"jobs", c.jobs}};
}

TrainConfig config_from_json(const json &j) {
    TrainConfig c;
    const auto kind = parse_ansatz(j.at("ansatz").get<std::string>());
    const auto loss = parse_loss(j.at("loss").get<std::string>());
    if (!kind || !loss) {
        throw ParseError("manifest names an unknown ansatz or loss");
    }
    c.ansatz = *kind;
    c.loss = *loss;
    c.n_qubits = j.at("n_qubits").get<std::size_t>();
    c.k = j.at("k").get<std::size_t>();
    c.repetitions = j.at("repetitions").get<std::size_t>();
    c.epochs = j.at("epochs").get<std::size_t>();
    c.train_size = j.at("train_size").get<std::size_t>();
    c.dataset_size = j.at("dataset_size").get<std::size_t>();
    c.batch_size = j.at("batch_size").get<std::size_t>();
    c.learning_rate = j.at("learning_rate").get<double>();
    c.metric_regularizer = j.at("metric_regularizer").get<double>();
    c.init_scale = j.at("init_scale").get<double>();
    const auto &r = j.at("edge_prob_range");
    c.edge_prob_range = {r.at(0).get<double>(), r.at(1).get<double>()};
    c.resample_each_epoch = j.at("resample_each_epoch").get<bool>();
    c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    c.jobs = j.at("jobs").get<std::size_t>();
    return c;
}

json defaults_json() {
    json d = config_to_json(TrainConfig{});
    d.erase("ansatz");
    d.erase("repetitions");
    d["repetitions"] = {
        {"perm", default_repetitions(AnsatzKind::PermutationInvariant)},
        {"cyclic", default_repetitions(AnsatzKind::CyclicInvariant)},
        {"standard", default_repetitions(AnsatzKind::StronglyEntangling)}};
    return d;
}

// ------------------------------------------------------------------ training

struct TrainOutcome {
    json manifest;
    fs::path manifest_path;
    ExperimentResult result;
};

/// Runs the experiment and writes every artifact into out_dir. The
/// manifest is written last, so a present manifest implies complete output.
TrainOutcome train_and_write(const TrainConfig &config,
                             const std::optional<fs::path> &data_path,
                             const fs::path &out_dir, bool quiet,
                             std::ostream &err) {
    const std::string started = utc_now();
    std::optional<Dataset> dataset;
    json dataset_json;
    if (data_path) {
        try {
            dataset = load_dataset(*data_path);
        } catch (const std::runtime_error &e) {
            if (dynamic_cast<const ParseError *>(&e) != nullptr) {
                throw;
            }
            throw FileError(e.what());
        }
        dataset_json = {{"path", fs::absolute(*data_path).lexically_normal().string()},
                        {"sha256", sha256_file(*data_path)},
                        {"seed", dataset->seed},
                        {"size", dataset->items.size()}};
    } else {
        dataset_json = {{"path", nullptr},
                        {"generated", "per seed, seeded by the training seed"}};
    }

    // Build the circuit once up front so an invalid ansatz/qubit
    // combination is reported before any work starts.
    (void)build_ansatz(config.ansatz, config.n_qubits, config.effective_repetitions());

    std::mutex log_mutex;
    ProgressCallback progress;
    if (!quiet) {
        progress = [&](const TrainProgress &p) {
            const std::lock_guard lock(log_mutex);
            err << fmt::format("seed {} epoch {}/{}: train loss {:.6f}, "
                               "validation accuracy {:.4f}\n",
                               p.seed, p.epoch, config.epochs, p.train_loss,
                               p.validation_accuracy);
        };
    }
    auto result = dataset ? run_experiment(config, *dataset, progress)
                          : run_experiment(config, progress);

    ensure_directory(out_dir);
    json artifacts = json::array();
    auto emit = [&](const std::string &name, const std::string &text,
                    std::string_view role) {
        const auto path = out_dir / name;
        write_text(path, text);
        artifacts.push_back({{"file", name}, {"role", role}, {"sha256", sha256_file(path)}});
    };

    std::ostringstream avg;
    write_curve_csv(avg, result.curve);
    emit(average_csv_name(config.ansatz, config.n_qubits), avg.str(), "average");
    for (const auto &s : result.per_seed) {
        std::ostringstream text;
        write_seed_curve_csv(text, s);
        emit(seed_csv_name(config.ansatz, config.n_qubits, s.seed), text.str(), "seed");
    }

    json manifest = {{"format", "qclique-manifest"},
                     {"version", kManifestVersion},
                     {"command", "train"},
                     {"config", config_to_json(config)},
                     {"defaults", defaults_json()},
                     {"dataset", dataset_json},
                     {"output_dir", fs::absolute(out_dir).lexically_normal().string()},
                     {"started_at", started},
                     {"finished_at", utc_now()},
                     {"artifacts", artifacts}};
    const auto manifest_path = out_dir / manifest_name(config.ansatz, config.n_qubits);
    write_text(manifest_path, manifest.dump(2) + "\n");
    return {std::move(manifest), manifest_path, std::move(result)};
}

// ------------------------------------------------------------------ commands

struct GenDataArgs {
    std::size_t qubits = 6;
    std::size_t clique = 4;
    std::size_t size = 3000;
    std::uint64_t seed = 1;
    std::array<double, 2> edge_prob{EdgeProbRange{}.low, EdgeProbRange{}.high};
    std::string out;
};

int cmd_gen_data(const GenDataArgs &a, std::ostream &out) {
    const EdgeProbRange range{a.edge_prob[0], a.edge_prob[1]};
    const auto ds = build_dataset(a.qubits, a.clique, a.size, range, a.seed);
    fs::path path = a.out;
    if (path.empty()) {
        path = default_output_dir() /
               fmt::format("dataset_{}q_k{}_seed{}.jsonl", a.qubits, a.clique, a.seed);
    }
    if (path.has_parent_path()) {
        ensure_directory(path.parent_path());
    }
    std::ostringstream text;
    write_dataset(text, ds);
    write_text(path, text.str());
    out << fmt::format("wrote {} graphs to {}\n", ds.items.size(), path.string());
    out << fmt::format("nodes {}, clique size {}, seed {}, edge probability [{}, {}]\n",
                       a.qubits, a.clique, a.seed, range.low, range.high);
    out << fmt::format("with {}-clique: {}\nwithout:       {}\n", a.clique,
                       ds.clique_count(), ds.blank_count());
    return kOk;
}

struct TrainArgs {
    std::string ansatz;
    std::string data;
    std::size_t qubits = 6;
    std::size_t clique = 4;
    std::size_t dataset_size = TrainConfig{}.dataset_size;
    std::array<double, 2> edge_prob{EdgeProbRange{}.low, EdgeProbRange{}.high};
    std::size_t seeds = 10;
    std::uint64_t first_seed = 1;
    std::string loss = "mse";
    std::string out_dir;
    bool quiet = false;
    TrainConfig config;
};

int cmd_train(TrainArgs a, std::ostream &out, std::ostream &err) {
    const auto kind = parse_ansatz(a.ansatz);
    const auto loss = parse_loss(a.loss);
    if (!kind) {
        throw UsageError("unknown ansatz '" + a.ansatz + "'");
    }
    if (!loss) {
        throw UsageError("unknown loss '" + a.loss + "'");
    }
    TrainConfig &c = a.config;
    c.ansatz = *kind;
    c.loss = *loss;
    c.n_qubits = a.qubits;
    c.k = a.clique;
    c.dataset_size = a.dataset_size;
    c.edge_prob_range = {a.edge_prob[0], a.edge_prob[1]};
    c.seeds.clear();
    for (std::size_t i = 0; i < a.seeds; ++i) {
        c.seeds.push_back(a.first_seed + i);
    }

    std::optional<fs::path> data;
    if (!a.data.empty()) {
        data = a.data;
        // Shape settings come from the file.
        std::ifstream probe(*data);
        if (!probe) {
            throw FileError("cannot open dataset " + a.data);
        }
        std::string header_line;
        std::getline(probe, header_line);
        try {
            const auto header = json::parse(header_line);
            c.n_qubits = header.at("n_nodes").get<std::size_t>();
            c.k = header.at("k").get<std::size_t>();
            c.dataset_size = header.at("size").get<std::size_t>();
            const auto &r = header.at("edge_prob_range");
            c.edge_prob_range = {r.at(0).get<double>(), r.at(1).get<double>()};
        } catch (const json::exception &e) {
            throw ParseError("dataset line 1: " + std::string(e.what()));
        }
    }
    c.validate();

    const fs::path out_dir = a.out_dir.empty() ? default_output_dir() : fs::path(a.out_dir);
    const auto outcome = train_and_write(c, data, out_dir, a.quiet, err);
    const auto &last = outcome.result.curve.records.back();
    out << fmt::format("{} on {} qubits, {} seeds, {} epochs: final accuracy {:.4f} "
                       "+- {:.4f}\n",
                       ansatz_name(c.ansatz), c.n_qubits, c.seeds.size(), c.epochs,
                       last.node_avg, last.node_avg_error);
    out << fmt::format("manifest: {}\n", outcome.manifest_path.string());
    return kOk;
}

struct NamedCurve {
    std::string name;
    AccuracyCurve curve;
};

int cmd_report(const std::vector<std::string> &paths, const std::string &merged,
               std::ostream &out, std::ostream &err) {
    std::vector<NamedCurve> curves;
    for (const auto &p : paths) {
        std::istringstream in(read_text(p));
        try {
            curves.push_back({fs::path(p).stem().string(), read_curve_csv(in)});
        } catch (const ParseError &e) {
            throw ParseError(p + ": " + e.what());
        }
        if (curves.back().curve.records.empty()) {
            throw ParseError(p + ": curve has no rows");
        }
    }
    std::size_t shortest = curves.front().curve.records.size();
    for (const auto &c : curves) {
        shortest = std::min(shortest, c.curve.records.size());
    }
    for (const auto &c : curves) {
        if (c.curve.records.size() != shortest) {
            err << fmt::format("warning: {} has {} epochs; truncating all curves to {}\n",
                               c.name, c.curve.records.size(), shortest);
        }
    }
    // Rows are aligned by position; epochs must agree once truncated.
    for (std::size_t e = 0; e < shortest; ++e) {
        for (const auto &c : curves) {
            if (c.curve.records[e].epoch != curves.front().curve.records[e].epoch) {
                throw ParseError(fmt::format("{}: row {} is epoch {}, expected {}", c.name,
                                             e + 2, c.curve.records[e].epoch,
                                             curves.front().curve.records[e].epoch));
            }
        }
    }

    std::size_t width = 8;
    for (const auto &c : curves) {
        width = std::max(width, c.name.size());
    }
    out << fmt::format("{:<{}}  {:>8}  {:>8}  {:>8}\n", "curve", width, "epoch",
                       "accuracy", "ci95");
    for (const auto &c : curves) {
        const auto &r = c.curve.records[shortest - 1];
        out << fmt::format("{:<{}}  {:>8}  {:>8.4f}  {:>8.4f}\n", c.name, width, r.epoch,
                           r.node_avg, r.node_avg_error);
    }

    if (!merged.empty()) {
        std::string text = "Epoch";
        for (const auto &c : curves) {
            text += fmt::format(",{0},{0}_Error", c.name);
        }
        text += '\n';
        for (std::size_t e = 0; e < shortest; ++e) {
            text += fmt::format("{}", curves.front().curve.records[e].epoch);
            for (const auto &c : curves) {
                text += fmt::format(",{},{}", c.curve.records[e].node_avg,
                                    c.curve.records[e].node_avg_error);
            }
            text += '\n';
        }
        const fs::path path = merged;
        if (path.has_parent_path()) {
            ensure_directory(path.parent_path());
        }
        write_text(path, text);
        out << fmt::format("merged CSV: {}\n", path.string());
    }
    return kOk;
}

int cmd_replay(const std::string &manifest_path, const std::string &out_dir_arg,
               std::ostream &out, std::ostream &err) {
    json manifest;
    try {
        manifest = json::parse(read_text(manifest_path));
        if (manifest.value("format", "") != "qclique-manifest") {
            throw ParseError(manifest_path + ": not a qclique manifest");
        }
    } catch (const json::exception &e) {
        throw ParseError(manifest_path + ": " + e.what());
    }
    TrainConfig config;
    std::optional<fs::path> data;
    try {
        config = config_from_json(manifest.at("config"));
        const auto &ds = manifest.at("dataset");
        if (!ds.at("path").is_null()) {
            data = ds.at("path").get<std::string>();
            const auto expected = ds.at("sha256").get<std::string>();
            if (sha256_file(*data) != expected) {
                throw ParseError("dataset " + data->string() +
                                 " no longer matches the manifest checksum");
            }
        }
    } catch (const json::exception &e) {
        throw ParseError(manifest_path + ": " + e.what());
    }
    const fs::path out_dir = out_dir_arg.empty()
                                 ? fs::path(manifest_path).parent_path() / "replay"
                                 : fs::path(out_dir_arg);
    const auto outcome = train_and_write(config, data, out_dir, true, err);

    std::size_t mismatches = 0;
    for (const auto &a : manifest.at("artifacts")) {
        const auto file = a.at("file").get<std::string>();
        const auto path = out_dir / file;
        const bool same = fs::exists(path) && sha256_file(path) == a.at("sha256");
        if (!same) {
            ++mismatches;
        }
        out << fmt::format("{} {}\n", same ? "match   " : "MISMATCH", file);
    }
    out << fmt::format("{} of {} artifacts reproduced\n",
                       manifest.at("artifacts").size() - mismatches,
                       manifest.at("artifacts").size());
    return mismatches == 0 ? kOk : kData;
}

} // namespace

std::string sha256_file(const fs::path &path) {
    const std::string bytes = read_text(path);
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(),
                   nullptr) != 1) {
        throw std::runtime_error("SHA-256 computation failed");
    }
    std::string hex;
    for (unsigned int i = 0; i < len; ++i) {
        hex += fmt::format("{:02x}", digest[i]);
    }
    return hex;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Symmetry-restricted variational circuits for k-clique detection"};
    app.name(args.empty() ? "qclique" : fs::path(args.front()).filename().string());
    app.require_subcommand(1);
    app.set_version_flag("--version", "qclique 0.1.0");

    const TrainConfig defaults;
    const std::string env_note =
        std::string(" (default: $") + kOutputDirEnv + " or ./results)";

    GenDataArgs gen;
    auto *gen_cmd = app.add_subcommand("gen-data", "Generate a balanced clique dataset");
    gen_cmd->add_option("--qubits", gen.qubits, "Nodes per graph")
        ->capture_default_str()->check(CLI::Range(1, static_cast<int>(kMaxNodes)));
    gen_cmd->add_option("--clique", gen.clique, "Clique size k")->capture_default_str();
    gen_cmd->add_option("--size", gen.size, "Number of graphs")
        ->capture_default_str()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
    gen_cmd->add_option("--edge-prob-range", gen.edge_prob,
                        "Edge probability interval, sampled per graph")
        ->capture_default_str();
    gen_cmd->add_option("--out", gen.out, "Output JSONL file" + env_note);

    TrainArgs train;
    train.config = defaults;
    auto *train_cmd = app.add_subcommand("train", "Train an ansatz over several seeds");
    train_cmd->add_option("--ansatz", train.ansatz, "perm, cyclic or standard")
        ->required();
    train_cmd->add_option("--data", train.data,
                          "Dataset file shared by all seeds; without it each seed "
                          "generates its own dataset");
    train_cmd->add_option("--qubits", train.qubits, "Qubits when generating data")
        ->capture_default_str();
    train_cmd->add_option("--clique", train.clique, "Clique size when generating data")
        ->capture_default_str();
    train_cmd->add_option("--dataset-size", train.dataset_size,
                          "Graphs per generated dataset")->capture_default_str();
    train_cmd->add_option("--edge-prob-range", train.edge_prob,
                          "Edge probability interval when generating data")
        ->capture_default_str();
    train_cmd->add_option("--epochs", train.config.epochs, "Training epochs")
        ->capture_default_str();
    train_cmd->add_option("--seeds", train.seeds, "Number of seeds")
        ->capture_default_str()->check(CLI::PositiveNumber);
    train_cmd->add_option("--first-seed", train.first_seed, "Seeds run first-seed onward")
        ->capture_default_str();
    train_cmd->add_option("--train-size", train.config.train_size,
                          "Balanced training items")->capture_default_str();
    train_cmd->add_option("--batch-size", train.config.batch_size, "Mini-batch size")
        ->capture_default_str();
    train_cmd->add_option("--lr", train.config.learning_rate, "Learning rate")
        ->capture_default_str();
    train_cmd->add_option("--reg", train.config.metric_regularizer,
                          "Metric regularizer added to the diagonal")
        ->capture_default_str();
    train_cmd->add_option("--init-scale", train.config.init_scale,
                          "Initial parameters uniform in [-s, s]")
        ->capture_default_str();
    train_cmd->add_option("--repetitions", train.config.repetitions,
                          "Layer repetitions; 0 selects 40/30/3 for perm/cyclic/standard")
        ->capture_default_str();
    train_cmd->add_option("--loss", train.loss, "mse or linear")->capture_default_str();
    train_cmd->add_flag("--resample", train.config.resample_each_epoch,
                        "Draw a fresh balanced training set every epoch");
    train_cmd->add_option("--jobs", train.config.jobs, "Seeds trained concurrently")
        ->capture_default_str()->check(CLI::PositiveNumber);
    train_cmd->add_option("--out-dir", train.out_dir, "Output directory" + env_note);
    train_cmd->add_flag("--quiet", train.quiet, "No per-epoch progress on stderr");

    std::vector<std::string> report_paths;
    std::string report_out;
    auto *report_cmd = app.add_subcommand("report", "Compare accuracy curve CSVs");
    report_cmd->add_option("csv", report_paths, "Curve CSV files")->required();
    report_cmd->add_option("--out", report_out, "Write a merged CSV here");

    std::string replay_manifest;
    std::string replay_out;
    auto *replay_cmd =
        app.add_subcommand("replay", "Rerun a training manifest and verify its outputs");
    replay_cmd->add_option("manifest", replay_manifest, "Manifest JSON")->required();
    replay_cmd->add_option("--out-dir", replay_out,
                           "Output directory (default: <manifest dir>/replay)");

    std::vector<std::string> tail(args.size() > 1 ? args.begin() + 1 : args.end(),
                                  args.end());
    std::reverse(tail.begin(), tail.end());
    try {
        app.parse(tail);
    } catch (const CLI::ParseError &e) {
        // Help and version requests are successes printed to stdout.
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (*gen_cmd) {
            return cmd_gen_data(gen, out);
        }
        if (*train_cmd) {
            return cmd_train(train, out, err);
        }
        if (*report_cmd) {
            return cmd_report(report_paths, report_out, out, err);
        }
        return cmd_replay(replay_manifest, replay_out, out, err);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConfigurationError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NumericalError &e) {
        err << "numerical error: " << e.what() << '\n';
        return kNumerical;
    } catch (const GenerationError &e) {
        err << "generation error: " << e.what() << '\n';
        return kData;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return kData;
    } catch (const FileError &e) {
        err << "file error: " << e.what() << '\n';
        return kData;
    }
}

} // namespace qclique::cli
