#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "authornet/model.hpp"

namespace authornet::stats {

enum class CcdfMetric { repos_created, followers, total_forks_received };

std::string_view to_string(CcdfMetric metric);

/// Empirical complementary CDF: for each distinct observed value x,
/// the fraction of authors with metric >= x.
struct CcdfSeries {
    CcdfMetric metric;
    std::vector<std::pair<double, double>> points;  // (value, P(X >= value)), value ascending
};

CcdfSeries ccdf(CcdfMetric metric, const Corpus& corpus);

struct ForkStats {
    double mean_forks_per_repo = 0.0;
    double fraction_forked_at_least_once = 0.0;
    std::size_t total_fork_events = 0;
};

/// Mean fork events per repository and the fraction forked at least once.
/// Throws on a corpus with zero repositories.
ForkStats fork_stats(const Corpus& corpus);

struct CohortCounts {
    std::size_t new_authors = 0;
    std::size_t new_repos = 0;
};

struct YearlyCohorts {
    std::map<int, CohortCounts> by_year;
    std::size_t undated_authors = 0;  // authors with no dated repo
    std::size_t undated_repos = 0;
};

/// Per UTC calendar year: authors whose first dated repository falls in the
/// year, and repositories created that year.
YearlyCohorts yearly_cohorts(const Corpus& corpus);

struct ReciprocityEntry {
    std::size_t pair_count = 0;    // unordered author pairs related in >= 1 direction
    std::size_t mutual_count = 0;  // both directions present
    std::optional<double> ri;      // mutual / pairs; nullopt when no pairs
};

/// Reciprocity Index over the six relationships. Repo-directed kinds map to
/// author pairs through repository ownership; self-pairs are excluded.
struct ReciprocityReport {
    std::map<Kind, ReciprocityEntry> by_kind;  // follow, fork, comment, contribute, watch, star
};

ReciprocityReport reciprocity(const Corpus& corpus);

}  // namespace authornet::stats
