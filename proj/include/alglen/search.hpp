#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alglen/classify.hpp"
#include "alglen/filtration.hpp"
#include "alglen/rng.hpp"

namespace alglen {

struct SearchConfig {
  int max_subset_size = 2;     // standard-basis subsets up to this size
  int random_sets = 0;         // seeded random candidate count
  int set_size_min = 1;        // random set size range
  int set_size_max = 2;
  std::uint64_t seed = 1;
  std::vector<GenSet> candidates;  // user-provided sets, tried after subsets
};

struct CandidateOutcome {
  std::string label;
  bool generating = false;
  std::optional<int> length;
};

struct SearchResult {
  std::optional<int> best_length;
  std::optional<GenSet> witness;
  std::string witness_label;
  std::vector<CandidateOutcome> log;
  std::optional<Bound> bound;
  bool exact = false;  // best_length equals a certified upper bound
};

// Maximizes l(S) over basis subsets, user candidates, and seeded random
// sets. Deterministic for a fixed config; ties keep the first witness.
SearchResult search_length(const Algebra& a, const SearchConfig& cfg,
                           std::optional<Bound> bound = std::nullopt);

bool verify_set_claim(const Algebra& a, const GenSet& s, int claimed_length);

// Shared deterministic generator draw: small-integer palette over the
// rationals, uniform residues over prime fields.
Vec random_algebra_vector(const Algebra& a, Rng& rng);
GenSet random_genset(const Algebra& a, int size, Rng& rng, const std::string& label);

}  // namespace alglen
