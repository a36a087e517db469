#include "authornet/stats.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "authornet/errors.hpp"

namespace authornet::stats {

std::string_view to_string(CcdfMetric metric) {
    switch (metric) {
        case CcdfMetric::repos_created: return "repos_created";
        case CcdfMetric::followers: return "followers";
        case CcdfMetric::total_forks_received: return "total_forks_received";
    }
    return "?";
}

CcdfSeries ccdf(CcdfMetric metric, const Corpus& corpus) {
    std::unordered_map<std::string, double> value;  // author -> metric
    for (const AuthorRef& a : corpus.authors) value[a.author_id] = 0.0;

    switch (metric) {
        case CcdfMetric::repos_created:
            for (const RepositoryRecord& r : corpus.repos) value[r.owner_id] += 1.0;
            break;
        case CcdfMetric::followers: {
            std::set<std::pair<std::string, std::string>> seen;
            for (const InteractionRecord& it : corpus.interactions)
                if (it.kind == Kind::follow && seen.emplace(it.actor_id, it.target_id).second)
                    value[it.target_id] += 1.0;
            break;
        }
        case CcdfMetric::total_forks_received:
            for (const InteractionRecord& it : corpus.interactions)
                if (it.kind == Kind::fork) value[corpus.owner_of(it.target_id)] += 1.0;
            break;
    }

    std::vector<double> values;
    values.reserve(value.size());
    for (const auto& [id, v] : value) values.push_back(v);
    std::sort(values.begin(), values.end());

    CcdfSeries series{metric, {}};
    const double n = static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size();) {
        std::size_t j = i;
        while (j < values.size() && values[j] == values[i]) ++j;
        // P(X >= values[i]) = count of entries at index >= i
        series.points.emplace_back(values[i], static_cast<double>(values.size() - i) / n);
        i = j;
    }
    return series;
}

ForkStats fork_stats(const Corpus& corpus) {
    if (corpus.repos.empty()) throw Error("fork stats need at least one repository");
    std::unordered_map<std::string, std::size_t> forks;
    ForkStats fs;
    for (const InteractionRecord& it : corpus.interactions) {
        if (it.kind != Kind::fork) continue;
        forks[it.target_id]++;
        fs.total_fork_events++;
    }
    std::size_t forked_repos = forks.size();
    fs.mean_forks_per_repo =
        static_cast<double>(fs.total_fork_events) / static_cast<double>(corpus.repos.size());
    fs.fraction_forked_at_least_once =
        static_cast<double>(forked_repos) / static_cast<double>(corpus.repos.size());
    return fs;
}

YearlyCohorts yearly_cohorts(const Corpus& corpus) {
    YearlyCohorts yc;
    std::unordered_map<std::string, int> first_year;  // author -> earliest repo year
    std::unordered_map<std::string, bool> has_repo;

    for (const RepositoryRecord& r : corpus.repos) {
        has_repo[r.owner_id] = true;
        if (!r.created_at) {
            yc.undated_repos++;
            continue;
        }
        int year = r.created_at->year;
        yc.by_year[year].new_repos++;
        auto it = first_year.find(r.owner_id);
        if (it == first_year.end() || year < it->second) first_year[r.owner_id] = year;
    }
    for (const AuthorRef& a : corpus.authors) {
        auto it = first_year.find(a.author_id);
        if (it == first_year.end())
            yc.undated_authors++;  // no dated repo (possibly no repo at all)
        else
            yc.by_year[it->second].new_authors++;
    }
    return yc;
}

ReciprocityReport reciprocity(const Corpus& corpus) {
    ReciprocityReport report;
    static constexpr Kind kinds[] = {Kind::follow,     Kind::fork, Kind::comment,
                                     Kind::contribute, Kind::watch, Kind::star};

    std::map<Kind, std::set<std::pair<std::string, std::string>>> directed;
    for (const InteractionRecord& it : corpus.interactions) {
        if (it.kind == Kind::create) continue;
        const std::string& src = it.actor_id;
        const std::string& dst =
            it.kind == Kind::follow ? it.target_id : corpus.owner_of(it.target_id);
        if (src == dst) continue;
        directed[it.kind].emplace(src, dst);
    }

    for (Kind k : kinds) {
        ReciprocityEntry entry;
        const auto& pairs = directed[k];
        std::set<std::pair<std::string, std::string>> unordered;
        for (const auto& [u, v] : pairs)
            unordered.emplace(std::min(u, v), std::max(u, v));
        entry.pair_count = unordered.size();
        for (const auto& [u, v] : unordered)
            if (pairs.count({v, u}) && pairs.count({u, v})) entry.mutual_count++;
        if (entry.pair_count > 0)
            entry.ri = static_cast<double>(entry.mutual_count) /
                       static_cast<double>(entry.pair_count);
        report.by_kind[k] = entry;
    }
    return report;
}

}  // namespace authornet::stats
