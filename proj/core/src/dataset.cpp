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

#include "qclique/dataset.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qclique/errors.hpp"
#include "qclique/io.hpp"

namespace qclique {

using nlohmann::json;

namespace {

constexpr std::size_t kDrawsPerItem = 1000;
constexpr int kFormatVersion = 1;

void check_range(const EdgeProbRange &r) {
    if (!(r.low >= 0.0 && r.high <= 1.0 && r.low <= r.high)) {
        throw ConfigurationError("edge probability range must satisfy "
                                 "0 <= low <= high <= 1");
    }
}

} // namespace

std::size_t Dataset::clique_count() const {
    return static_cast<std::size_t>(
        std::count_if(items.begin(), items.end(),
                      [](const auto &it) { return it.label.has_clique(); }));
}

ItemSampler::ItemSampler(std::size_t n_nodes, std::size_t k,
                         EdgeProbRange range, std::uint64_t seed)
    : n_nodes_(n_nodes), k_(k), range_(range), rng_(seed) {
    check_range(range);
    if (n_nodes < 1 || n_nodes > kMaxNodes) {
        throw ConfigurationError("node count out of range");
    }
    if (k < 1 || k > n_nodes) {
        throw ConfigurationError("clique size " + std::to_string(k) +
                                 " must lie in 1.." + std::to_string(n_nodes));
    }
}

DatasetItem ItemSampler::draw() {
    std::uniform_real_distribution<double> prob(range_.low, range_.high);
    const double p = range_.low == range_.high ? range_.low : prob(rng_);
    Graph g = gen_er_graph(n_nodes_, p, rng_);
    LabelVector label = make_label(g, k_, rng_);
    return {std::move(g), std::move(label), p};
}

std::vector<DatasetItem> ItemSampler::draw_balanced(std::size_t clique_items,
                                                    std::size_t blank_items) {
    std::vector<DatasetItem> out;
    out.reserve(clique_items + blank_items);
    const std::size_t budget = (clique_items + blank_items) * kDrawsPerItem;
    std::size_t have_clique = 0;
    std::size_t have_blank = 0;
    for (std::size_t draws = 0;
         have_clique < clique_items || have_blank < blank_items; ++draws) {
        if (draws >= budget) {
            throw GenerationError(
                "gave up after " + std::to_string(budget) + " draws with " +
                std::to_string(have_clique) + "/" +
                std::to_string(clique_items) + " clique items and " +
                std::to_string(have_blank) + "/" + std::to_string(blank_items) +
                " blank items; adjust the edge probability range");
        }
        auto item = draw();
        if (item.label.has_clique()) {
            if (have_clique < clique_items) {
                ++have_clique;
                out.push_back(std::move(item));
            }
        } else if (have_blank < blank_items) {
            ++have_blank;
            out.push_back(std::move(item));
        }
    }
    return out;
}

Dataset build_dataset(std::size_t n_nodes, std::size_t k, std::size_t size,
                      EdgeProbRange range, std::uint64_t seed) {
    ItemSampler sampler(n_nodes, k, range, seed);
    Dataset ds;
    ds.n_nodes = n_nodes;
    ds.k = k;
    ds.seed = seed;
    ds.edge_prob_range = range;
    ds.items = sampler.draw_balanced(size - size / 2, size / 2);
    return ds;
}

void write_dataset(std::ostream &out, const Dataset &dataset) {
    json header = {{"format", "qclique-dataset"},
                   {"version", kFormatVersion},
                   {"n_nodes", dataset.n_nodes},
                   {"k", dataset.k},
                   {"seed", dataset.seed},
                   {"size", dataset.items.size()},
                   {"edge_prob_range",
                    {dataset.edge_prob_range.low,
                     dataset.edge_prob_range.high}}};
    out << header.dump() << '\n';
    for (const auto &item : dataset.items) {
        json edges = json::array();
        for (auto [i, j] : item.graph.edges()) {
            edges.push_back({i, j});
        }
        json rec = {{"n_nodes", item.graph.n_nodes()},
                    {"edges", std::move(edges)},
                    {"label", item.label.values()},
                    {"edge_prob", item.edge_prob}};
        out << rec.dump() << '\n';
    }
}

Dataset read_dataset(std::istream &in) {
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string &why) -> ParseError {
        return ParseError("dataset line " + std::to_string(line_no) + ": " +
                          why);
    };

    Dataset ds;
    std::size_t declared_size = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        try {
            const json rec = json::parse(line);
            if (!have_header) {
                if (rec.value("format", "") != "qclique-dataset") {
                    throw fail("missing qclique-dataset header");
                }
                if (rec.at("version").get<int>() != kFormatVersion) {
                    throw fail("unsupported format version");
                }
                ds.n_nodes = rec.at("n_nodes").get<std::size_t>();
                ds.k = rec.at("k").get<std::size_t>();
                ds.seed = rec.at("seed").get<std::uint64_t>();
                declared_size = rec.at("size").get<std::size_t>();
                const auto &r = rec.at("edge_prob_range");
                ds.edge_prob_range = {r.at(0).get<double>(),
                                      r.at(1).get<double>()};
                have_header = true;
                continue;
            }
            const auto n = rec.at("n_nodes").get<std::size_t>();
            if (n != ds.n_nodes) {
                throw fail("node count differs from header");
            }
            std::vector<Edge> edges;
            for (const auto &e : rec.at("edges")) {
                edges.emplace_back(e.at(0).get<std::size_t>(),
                                   e.at(1).get<std::size_t>());
            }
            Graph g(n, edges);
            LabelVector label(rec.at("label").get<std::vector<int>>());
            if (!label_is_valid(g, label, ds.k)) {
                throw fail("label does not match a " + std::to_string(ds.k) +
                           "-clique of the graph");
            }
            ds.items.push_back(
                {std::move(g), std::move(label), rec.at("edge_prob").get<double>()});
        } catch (const json::exception &e) {
            throw fail(e.what());
        } catch (const ConfigurationError &e) {
            throw fail(e.what());
        }
    }
    if (!have_header) {
        throw ParseError("dataset file is empty");
    }
    if (ds.items.size() != declared_size) {
        throw ParseError("dataset header declares " +
                         std::to_string(declared_size) + " items, found " +
                         std::to_string(ds.items.size()));
    }
    return ds;
}

void save_dataset(const std::filesystem::path &path, const Dataset &dataset) {
    std::ostringstream buf;
    write_dataset(buf, dataset);
    write_file_atomic(path, buf.str());
}

Dataset load_dataset(const std::filesystem::path &path) {
    std::istringstream in(read_file(path));
    return read_dataset(in);
}

} // namespace qclique
