#include "authornet/influence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <thread>

#include "authornet/errors.hpp"
#include "authornet/kernels.hpp"

namespace authornet::influence {

namespace {

// Compressed adjacency with parallel labeled edges merged per (src, dst).
// Neighbor lists are sorted by node id, which fixes the reduction order.
struct Csr {
    std::vector<std::size_t> offsets;     // n + 1
    std::vector<std::int32_t> neighbors;  // sorted within each row
    std::vector<double> weights;
};

Csr build_csr(std::size_t n, const std::vector<graph::AuthorAuthorGraph::Edge>& edges,
              bool incoming) {
    // Edges are sorted by (src, dst, label); merge weights per pair.
    std::vector<std::vector<std::pair<std::int32_t, double>>> rows(n);
    for (const auto& e : edges) {
        std::uint32_t row = incoming ? e.dst : e.src;
        std::uint32_t col = incoming ? e.src : e.dst;
        auto& r = rows[row];
        if (!r.empty() && r.back().first == static_cast<std::int32_t>(col))
            r.back().second += e.weight;
        else
            r.emplace_back(static_cast<std::int32_t>(col), e.weight);
    }
    Csr csr;
    csr.offsets.assign(n + 1, 0);
    for (std::size_t u = 0; u < n; ++u) {
        std::sort(rows[u].begin(), rows[u].end());
        // Merge duplicates left by unsorted (dst, src) pairs on the incoming side.
        std::size_t w = 0;
        for (std::size_t k = 0; k < rows[u].size(); ++k) {
            if (w > 0 && rows[u][w - 1].first == rows[u][k].first)
                rows[u][w - 1].second += rows[u][k].second;
            else
                rows[u][w++] = rows[u][k];
        }
        rows[u].resize(w);
        csr.offsets[u + 1] = csr.offsets[u] + w;
    }
    csr.neighbors.resize(csr.offsets[n]);
    csr.weights.resize(csr.offsets[n]);
    for (std::size_t u = 0; u < n; ++u) {
        std::size_t base = csr.offsets[u];
        for (std::size_t k = 0; k < rows[u].size(); ++k) {
            csr.neighbors[base + k] = rows[u][k].first;
            csr.weights[base + k] = rows[u][k].second;
        }
    }
    return csr;
}

void for_each_node(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || n < 2 * threads) {
        for (std::size_t u = 0; u < n; ++u) fn(u);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t u = lo; u < hi; ++u) fn(u);
        });
    }
    for (auto& th : pool) th.join();
}

// L1-normalizes in place; returns |recomputed sum - 1|.
double normalize_l1(std::span<double> v, const kernels::KernelTable& k) {
    double s = k.sum(v);
    if (!(s > 0.0)) throw Error("degenerate graph: zero score vector");
    k.scale(v, 1.0 / s);
    return std::fabs(k.sum(v) - 1.0);
}

}  // namespace

std::size_t HackerScoreTable::index_of(const std::string& author_id) const {
    auto it = std::lower_bound(authors.begin(), authors.end(), author_id);
    if (it == authors.end() || *it != author_id) throw Error("unknown author: " + author_id);
    return static_cast<std::size_t>(it - authors.begin());
}

HackerScoreTable hacker_score(const graph::AuthorAuthorGraph& g, double tolerance,
                              std::size_t max_iter, unsigned threads) {
    if (!(tolerance > 0.0)) throw ConfigError("tolerance must be positive");
    if (max_iter < 1) throw ConfigError("max_iter must be at least 1");
    if (!g.weighted) throw Error("graph is unweighted; apply_weights first");
    const std::size_t n = g.nodes.size();
    if (n == 0) throw Error("degenerate graph: zero score vector");

    const Csr in = build_csr(n, g.edges, /*incoming=*/true);
    const Csr out = build_csr(n, g.edges, /*incoming=*/false);
    const kernels::KernelTable& k = kernels::active();

    HackerScoreTable table;
    table.authors = g.nodes;

    std::vector<double> phs(n, 1.0), chs(n, 1.0);
    std::vector<double> phs_next(n), chs_next(n);

    auto row = [](const Csr& csr, std::size_t u) {
        return std::pair(std::span<const double>(csr.weights.data() + csr.offsets[u],
                                                 csr.offsets[u + 1] - csr.offsets[u]),
                         std::span<const std::int32_t>(csr.neighbors.data() + csr.offsets[u],
                                                       csr.offsets[u + 1] - csr.offsets[u]));
    };

    for (std::size_t iter = 1; iter <= max_iter; ++iter) {
        for_each_node(n, threads, [&](std::size_t u) {
            auto [w, idx] = row(in, u);
            phs_next[u] = k.gather_weighted_sum(w, idx, chs.data());
        });
        for_each_node(n, threads, [&](std::size_t u) {
            auto [w, idx] = row(out, u);
            chs_next[u] = k.gather_weighted_sum(w, idx, phs_next.data());
        });
        table.max_norm_error = std::max(table.max_norm_error, normalize_l1(phs_next, k));
        table.max_norm_error = std::max(table.max_norm_error, normalize_l1(chs_next, k));

        double delta = std::max(k.max_abs_diff(phs_next, phs), k.max_abs_diff(chs_next, chs));
        table.deltas.push_back(delta);
        phs.swap(phs_next);
        chs.swap(chs_next);
        table.iterations = iter;
        if (delta < tolerance) {
            table.converged = true;
            break;
        }
    }

    table.phs = std::move(phs);
    table.chs = std::move(chs);
    return table;
}

KneeResult detect_knee(std::span<const double> scores) {
    const std::size_t n = scores.size();
    for (std::size_t i = 1; i < n; ++i)
        if (scores[i] > scores[i - 1]) throw Error("scores not sorted descending");

    std::set<double> distinct_positive;
    for (double s : scores)
        if (s > 0.0) distinct_positive.insert(s);
    if (distinct_positive.size() < 3) throw Error("no knee");

    const double y1 = scores.front();
    const double yn = scores.back();
    const double dx = static_cast<double>(n - 1);
    const double dy = yn - y1;

    // Signed area of (chord vector) x (point - first point); positive means
    // the point lies above the chord.
    double best = 0.0;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double cross = dx * (scores[i] - y1) - dy * static_cast<double>(i);
        if (cross > best) {
            best = cross;
            best_i = i;
        }
    }

    const double eps = 1e-12 * dx * (std::fabs(y1) + std::fabs(yn) + 1.0);
    if (best <= eps) return {y1, true};
    return {scores[best_i], false};
}

std::string_view to_string(Region r) {
    switch (r) {
        case Region::A: return "A";
        case Region::B: return "B";
        case Region::C: return "C";
        case Region::D: return "D";
    }
    return "?";
}

RegionClassification classify_regions(const HackerScoreTable& t, double phs_knee,
                                      double chs_knee) {
    if (!(phs_knee > 0.0) || !(chs_knee > 0.0)) throw ConfigError("knees must be positive");
    RegionClassification rc;
    rc.phs_knee = phs_knee;
    rc.chs_knee = chs_knee;
    rc.region.resize(t.authors.size());
    for (std::size_t i = 0; i < t.authors.size(); ++i) {
        bool high_p = t.phs[i] > phs_knee;
        bool high_c = t.chs[i] > chs_knee;
        Region r = high_p ? (high_c ? Region::B : Region::C)
                          : (high_c ? Region::A : Region::D);
        rc.region[i] = r;
        rc.count[static_cast<int>(r)]++;
        if (r != Region::D) rc.hig.push_back(t.authors[i]);
    }
    return rc;
}

ProfileRow author_profile(const std::string& author_id, const Corpus& corpus,
                          const graph::AuthorAuthorGraph& g, const HackerScoreTable& t) {
    if (!corpus.has_author(author_id)) throw Error("unknown author: " + author_id);

    ProfileRow rowv;
    rowv.author_id = author_id;
    rowv.username = corpus.author(author_id).username;
    rowv.phs = t.phs_of(author_id);
    rowv.chs = t.chs_of(author_id);

    for (const RepositoryRecord& r : corpus.repos)
        if (r.owner_id == author_id) ++rowv.repos;

    // Distinct followers come from the graph's follower in-edges; the event
    // counts below are raw interaction tallies on owned repos.
    const std::uint32_t node = g.node_index.at(author_id);
    for (const auto& e : g.edges)
        if (e.dst == node && e.label == graph::AaLabel::follower) ++rowv.followers;

    for (const InteractionRecord& it : corpus.interactions) {
        if (it.kind == Kind::follow) continue;
        const std::string& owner = corpus.owner_of(it.target_id);
        if (owner != author_id || it.actor_id == author_id) continue;
        switch (it.kind) {
            case Kind::fork: ++rowv.forks_received; break;
            case Kind::comment: ++rowv.comments_received; break;
            case Kind::contribute: ++rowv.contributions_received; break;
            default: break;
        }
    }
    return rowv;
}

}  // namespace authornet::influence
