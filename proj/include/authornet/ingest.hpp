#pragma once

#include <set>
#include <string>

#include "authornet/model.hpp"

namespace authornet::ingest {

/// Loads and validates the three GitHub-side datasets.
///
/// Malformed rows are collected into Corpus::rejects and never abort the
/// load; an empty author set is fatal (InputError). The returned corpus is
/// canonically ordered, so two loads of permuted inputs compare equal.
Corpus load_dataset(const std::string& authors_path, const std::string& repos_path,
                    const std::string& interactions_path);

/// Loads forum posts; duplicate (forum, thread, post) triples are rejected.
ForumCorpus load_forums(const std::string& forums_path);

/// Reads a keyword config file: {"malware_types":[...],"platforms":[...]}.
/// Enforces: both sets non-empty, disjoint, lowercase, no whitespace-only
/// entries, no duplicates.
KeywordConfig load_keyword_config(const std::string& path);

/// Built-in keyword sets, used when no config file is given.
KeywordConfig default_keyword_config();

/// Keywords from S1 and S2 whose token sequence occurs in the repo metadata.
/// Matching is case-insensitive and token-bounded: the metadata is lowercased
/// and split on non-alphanumeric characters; a multi-word keyword must match
/// consecutive tokens.
std::set<std::string> extract_keyword_set(const RepositoryRecord& repo,
                                          const KeywordConfig& config);

/// Writes a rejects report: CSV `file,row,reason`.
void write_rejects(const std::string& path, const std::vector<Reject>& corpus_rejects,
                   const std::vector<Reject>& forum_rejects);

/// Canonical serialization of a corpus, usable for equality checks.
std::string serialize(const Corpus& corpus);

}  // namespace authornet::ingest
