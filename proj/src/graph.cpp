#include "authornet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <tuple>

#include <json.hpp>

#include "authornet/errors.hpp"

namespace authornet::graph {

std::string_view to_string(AaLabel label) {
    switch (label) {
        case AaLabel::follower: return "follower";
        case AaLabel::fork: return "fork";
        case AaLabel::contribution: return "contribution";
        case AaLabel::comment: return "comment";
    }
    return "?";
}

std::string_view to_string(WeightMode mode) {
    return mode == WeightMode::exact ? "exact" : "paper-rounded";
}

std::size_t AuthorAuthorGraph::label_count(AaLabel label) const {
    std::size_t n = 0;
    for (const Edge& e : edges) n += (e.label == label);
    return n;
}

namespace {

bool edge_less(const AuthorAuthorGraph::Edge& a, const AuthorAuthorGraph::Edge& b) {
    return std::tuple(a.src, a.dst, a.label) < std::tuple(b.src, b.dst, b.label);
}

// Rounds to one significant figure; values at or above 0.9 saturate to 1.
double round_one_sig_fig(double w) {
    if (w <= 0.0) return 0.0;
    if (w >= 0.9) return 1.0;
    double exp10 = std::floor(std::log10(w));
    double scale = std::pow(10.0, -exp10);
    return std::round(w * scale) / scale;
}

}  // namespace

AuthorAuthorGraph build_aa_graph(const Corpus& corpus) {
    AuthorAuthorGraph g;
    g.nodes.reserve(corpus.authors.size());
    for (const AuthorRef& a : corpus.authors) g.nodes.push_back(a.author_id);
    for (std::uint32_t i = 0; i < g.nodes.size(); ++i) g.node_index[g.nodes[i]] = i;

    auto add_edge = [&](const std::string& src, const std::string& dst, AaLabel label) {
        if (src == dst) return;  // self-loops dropped
        g.edges.push_back({g.node_index.at(src), g.node_index.at(dst), label, 0.0});
    };

    for (const InteractionRecord& it : corpus.interactions) {
        switch (it.kind) {
            case Kind::follow:
                add_edge(it.actor_id, it.target_id, AaLabel::follower);
                break;
            case Kind::fork:
                add_edge(it.actor_id, corpus.owner_of(it.target_id), AaLabel::fork);
                break;
            case Kind::contribute:
                add_edge(it.actor_id, corpus.owner_of(it.target_id), AaLabel::contribution);
                break;
            case Kind::comment:
                add_edge(it.actor_id, corpus.owner_of(it.target_id), AaLabel::comment);
                break;
            default:
                break;  // create/star/watch do not produce AA edges
        }
    }

    std::sort(g.edges.begin(), g.edges.end(), edge_less);
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end(),
                              [](const auto& a, const auto& b) {
                                  return a.src == b.src && a.dst == b.dst && a.label == b.label;
                              }),
                  g.edges.end());
    return g;
}

EdgeWeightCalibration calibration_from_degrees(const std::map<AaLabel, double>& avg_degree,
                                               WeightMode mode) {
    EdgeWeightCalibration calib;
    calib.mode = mode;
    calib.avg_degree = avg_degree;

    calib.d_min = 0.0;
    for (const auto& [label, d] : avg_degree)
        if (d > 0.0 && (calib.d_min == 0.0 || d < calib.d_min)) calib.d_min = d;
    if (calib.d_min == 0.0) throw Error("no edges to calibrate");

    for (const auto& [label, d] : avg_degree) {
        if (d > 0.0) {
            double w = calib.d_min / d;
            calib.weights[label] = mode == WeightMode::paper_rounded ? round_one_sig_fig(w) : w;
        } else {
            calib.weights[label] = 0.0;
            calib.zero_labels.insert(label);
        }
    }
    return calib;
}

EdgeWeightCalibration calibrate_weights(const AuthorAuthorGraph& g, WeightMode mode) {
    if (g.edges.empty()) throw Error("no edges to calibrate");
    std::map<AaLabel, double> avg;
    const double n = static_cast<double>(g.nodes.size());
    for (AaLabel label : kAaLabels)
        avg[label] = static_cast<double>(g.label_count(label)) / n;
    return calibration_from_degrees(avg, mode);
}

AuthorAuthorGraph apply_weights(const AuthorAuthorGraph& g, const EdgeWeightCalibration& calib) {
    AuthorAuthorGraph weighted = g;
    for (auto& e : weighted.edges) {
        auto it = calib.weights.find(e.label);
        if (it == calib.weights.end())
            throw Error(std::string("no calibrated weight for label: ") +
                        std::string(to_string(e.label)));
        e.weight = it->second;
    }
    weighted.weight_table = calib.weights;
    weighted.weighted = true;
    return weighted;
}

AuthorRepoGraph build_ar_graph(const Corpus& corpus) {
    AuthorRepoGraph g;
    g.authors.reserve(corpus.authors.size());
    for (const AuthorRef& a : corpus.authors) g.authors.push_back(a.author_id);
    g.repos.reserve(corpus.repos.size());
    for (const RepositoryRecord& r : corpus.repos) g.repos.push_back(r.repo_id);
    for (std::uint32_t i = 0; i < g.authors.size(); ++i) g.author_index[g.authors[i]] = i;
    for (std::uint32_t i = 0; i < g.repos.size(); ++i) g.repo_index[g.repos[i]] = i;

    std::map<std::pair<std::uint32_t, std::uint32_t>, std::set<Kind>> pairs;
    for (const RepositoryRecord& r : corpus.repos) {
        // Ownership implies a create edge even without an explicit record.
        pairs[{g.author_index.at(r.owner_id), g.repo_index.at(r.repo_id)}].insert(Kind::create);
    }
    for (const InteractionRecord& it : corpus.interactions) {
        if (it.kind == Kind::follow) continue;
        pairs[{g.author_index.at(it.actor_id), g.repo_index.at(it.target_id)}].insert(it.kind);
    }

    g.edges.reserve(pairs.size());
    for (auto& [key, kinds] : pairs) g.edges.push_back({key.first, key.second, std::move(kinds)});
    return g;
}

GraphExport render_aa_export(const AuthorAuthorGraph& g) {
    GraphExport out;
    for (const auto& e : g.edges) {
        nlohmann::json obj = {{"src", g.nodes[e.src]},
                              {"dst", g.nodes[e.dst]},
                              {"label", std::string(to_string(e.label))},
                              {"weight", e.weight}};
        out.edges += obj.dump() + "\n";
    }
    for (const std::string& id : g.nodes) out.nodes += nlohmann::json{{"id", id}}.dump() + "\n";
    return out;
}

GraphExport render_ar_export(const AuthorRepoGraph& g) {
    GraphExport out;
    for (const auto& e : g.edges) {
        for (Kind k : e.kinds) {
            nlohmann::json obj = {{"src", g.authors[e.author]},
                                  {"dst", g.repos[e.repo]},
                                  {"label", std::string(to_string(k))}};
            out.edges += obj.dump() + "\n";
        }
    }
    for (const std::string& id : g.authors)
        out.nodes += nlohmann::json{{"id", id}, {"side", "author"}}.dump() + "\n";
    for (const std::string& id : g.repos)
        out.nodes += nlohmann::json{{"id", id}, {"side", "repo"}}.dump() + "\n";
    return out;
}

namespace {

void write_export(const GraphExport& parts, const std::string& edges_path,
                  const std::string& nodes_path) {
    std::ofstream edges(edges_path, std::ios::binary);
    std::ofstream nodes(nodes_path, std::ios::binary);
    if (!edges || !nodes) throw InputError("cannot write graph export");
    edges << parts.edges;
    nodes << parts.nodes;
}

}  // namespace

void write_aa_export(const AuthorAuthorGraph& g, const std::string& edges_path,
                     const std::string& nodes_path) {
    write_export(render_aa_export(g), edges_path, nodes_path);
}

void write_ar_export(const AuthorRepoGraph& g, const std::string& edges_path,
                     const std::string& nodes_path) {
    write_export(render_ar_export(g), edges_path, nodes_path);
}

}  // namespace authornet::graph
