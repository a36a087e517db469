#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "authornet/graph.hpp"
#include "authornet/model.hpp"

namespace authornet::influence {

/// Producer (authority-like) and connector (hub-like) scores per author,
/// each L1-normalized to sum 1.
struct HackerScoreTable {
    std::vector<std::string> authors;  // graph node order (sorted ids)
    std::vector<double> phs;
    std::vector<double> chs;
    std::size_t iterations = 0;
    bool converged = false;
    std::vector<double> deltas;    // max per-node change after each iteration
    double max_norm_error = 0.0;   // worst |sum - 1| seen post-normalization

    std::size_t index_of(const std::string& author_id) const;
    double phs_of(const std::string& author_id) const { return phs[index_of(author_id)]; }
    double chs_of(const std::string& author_id) const { return chs[index_of(author_id)]; }
};

/// Iterative weighted hub/authority scoring on the AA graph.
///
/// Both vectors start at 1. Each iteration sets PHS from the in-edges'
/// connector scores and CHS from the out-edges' fresh producer scores, then
/// L1-normalizes both. Parallel labeled edges between a pair contribute
/// additively. Per-node reductions run in canonical node-id order, so the
/// result is identical for any thread count.
HackerScoreTable hacker_score(const graph::AuthorAuthorGraph& g, double tolerance = 1e-9,
                              std::size_t max_iter = 10000, unsigned threads = 1);

struct KneeResult {
    double value = 0.0;
    bool weak = false;  // no point rises above the chord; value is the top score
};

/// Knee of a descending score curve: the point with the largest
/// perpendicular distance above the chord joining the first and last
/// points. Ties break toward the higher score. Requires at least three
/// distinct positive values.
KneeResult detect_knee(std::span<const double> sorted_desc);

enum class Region : std::uint8_t { A, B, C, D };

std::string_view to_string(Region r);

/// 2x2 threshold partition of authors by (PHS, CHS) against the knees.
/// A: high CHS only, B: both high, C: high PHS only, D: neither.
struct RegionClassification {
    double phs_knee = 0.0;
    double chs_knee = 0.0;
    std::vector<Region> region;        // aligned with the score table
    std::size_t count[4] = {0, 0, 0, 0};
    std::vector<std::string> hig;      // authors in A, B, or C; sorted ids

    double share(Region r, std::size_t total) const {
        return total ? static_cast<double>(count[static_cast<int>(r)]) / total : 0.0;
    }
};

RegionClassification classify_regions(const HackerScoreTable& t, double phs_knee,
                                      double chs_knee);

/// One author's interaction profile, producer/connector scores included.
struct ProfileRow {
    std::string author_id;
    std::string username;
    double phs = 0.0;
    double chs = 0.0;
    std::size_t repos = 0;
    std::size_t followers = 0;               // distinct followers
    std::size_t forks_received = 0;          // fork events on owned repos
    std::size_t comments_received = 0;
    std::size_t contributions_received = 0;
};

ProfileRow author_profile(const std::string& author_id, const Corpus& corpus,
                          const graph::AuthorAuthorGraph& g, const HackerScoreTable& t);

}  // namespace authornet::influence
