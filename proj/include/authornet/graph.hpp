#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "authornet/model.hpp"

namespace authornet::graph {

/// Relationship labels of the author-author multi-digraph.
enum class AaLabel : std::uint8_t { follower, fork, contribution, comment };

inline constexpr std::array<AaLabel, 4> kAaLabels = {AaLabel::follower, AaLabel::fork,
                                                     AaLabel::contribution, AaLabel::comment};

std::string_view to_string(AaLabel label);

/// Weighted labeled multi-digraph over authors. At most one edge per
/// (src, dst, label); parallel edges with distinct labels are allowed;
/// no self-loops.
struct AuthorAuthorGraph {
    std::vector<std::string> nodes;  // sorted author ids; index is the node handle
    std::unordered_map<std::string, std::uint32_t> node_index;

    struct Edge {
        std::uint32_t src = 0;
        std::uint32_t dst = 0;
        AaLabel label = AaLabel::follower;
        double weight = 0.0;
    };
    std::vector<Edge> edges;  // sorted by (src, dst, label), unique

    bool weighted = false;
    std::map<AaLabel, double> weight_table;  // set by apply_weights

    std::size_t label_count(AaLabel label) const;
};

enum class WeightMode { exact, paper_rounded };

std::string_view to_string(WeightMode mode);

/// Per-label average degrees and the derived weights.
struct EdgeWeightCalibration {
    std::map<AaLabel, double> avg_degree;  // label edge count / |V|
    double d_min = 0.0;                    // min positive average degree
    std::map<AaLabel, double> weights;     // d_min / avg_degree (0 for absent labels)
    std::set<AaLabel> zero_labels;         // labels with no edges, flagged
    WeightMode mode = WeightMode::exact;
};

/// Undirected bipartite author-repository graph. One edge per (author, repo)
/// pair, annotated with the set of interaction kinds that produced it.
struct AuthorRepoGraph {
    std::vector<std::string> authors;  // sorted author ids
    std::vector<std::string> repos;    // sorted repo ids
    std::unordered_map<std::string, std::uint32_t> author_index;
    std::unordered_map<std::string, std::uint32_t> repo_index;

    struct Edge {
        std::uint32_t author = 0;
        std::uint32_t repo = 0;
        std::set<Kind> kinds;
    };
    std::vector<Edge> edges;  // sorted by (author, repo), unique
};

/// Author-author edges from the corpus: follower/fork/contribution/comment
/// rules, self-loops dropped, one edge per (src, dst, label). Weights unset.
AuthorAuthorGraph build_aa_graph(const Corpus& corpus);

/// Average degree per label and inverse-frequency weights. Throws
/// Error("no edges to calibrate") on an edgeless graph.
EdgeWeightCalibration calibrate_weights(const AuthorAuthorGraph& g,
                                        WeightMode mode = WeightMode::exact);

/// Same weight derivation from externally supplied average degrees.
EdgeWeightCalibration calibration_from_degrees(const std::map<AaLabel, double>& avg_degree,
                                               WeightMode mode = WeightMode::exact);

/// Copy of the graph with every edge weighted per the calibration table.
AuthorAuthorGraph apply_weights(const AuthorAuthorGraph& g, const EdgeWeightCalibration& calib);

/// Bipartite edges for the six repo-directed kinds; ownership yields a
/// create edge even without an explicit create record.
AuthorRepoGraph build_ar_graph(const Corpus& corpus);

/// JSON-lines exports: edges {"src","dst","label","weight"} and node lists
/// ({"id"} for AA, {"id","side"} for AR).
struct GraphExport {
    std::string edges;
    std::string nodes;
};

GraphExport render_aa_export(const AuthorAuthorGraph& g);
GraphExport render_ar_export(const AuthorRepoGraph& g);

void write_aa_export(const AuthorAuthorGraph& g, const std::string& edges_path,
                     const std::string& nodes_path);
void write_ar_export(const AuthorRepoGraph& g, const std::string& edges_path,
                     const std::string& nodes_path);

}  // namespace authornet::graph
