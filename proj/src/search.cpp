#include "alglen/search.hpp"

#include <algorithm>

namespace alglen {

Vec random_algebra_vector(const Algebra& a, Rng& rng) {
  Vec v;
  v.reserve(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) {
    if (a.field().is_rational()) {
      v.push_back(Scalar::of_int(a.field(), rng.range(-2, 2)));
    } else {
      v.push_back(Scalar::of_residue(a.field(), rng.below(a.field().p)));
    }
  }
  return v;
}

GenSet random_genset(const Algebra& a, int size, Rng& rng, const std::string& label) {
  std::vector<Vec> vectors;
  std::vector<std::string> labels;
  for (int i = 0; i < size; ++i) {
    vectors.push_back(random_algebra_vector(a, rng));
    labels.push_back(label + "." + std::to_string(i + 1));
  }
  GenSet s = GenSet::of(std::move(vectors), std::move(labels));
  s.spec_text = label;
  return s;
}

namespace {

// all index subsets of {0..d-1} of the given size, lexicographic
void subsets_of_size(int d, int size, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int pos = size - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == d - size + pos) --pos;
    if (pos < 0) break;
    cur[static_cast<std::size_t>(pos)]++;
    for (int i = pos + 1; i < size; ++i) {
      cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
}

}  // namespace

SearchResult search_length(const Algebra& a, const SearchConfig& cfg, std::optional<Bound> bound) {
  if (cfg.random_sets > 0 && cfg.seed == 0) {
    throw validation_error("random candidates need a nonzero seed");
  }
  SearchResult result;
  result.bound = bound;

  auto consider = [&](const GenSet& s, const std::string& label) {
    FiltrationTrace t = filtrate(a, s);
    result.log.push_back({label, t.generating, t.length});
    if (t.generating && (!result.best_length || *t.length > *result.best_length)) {
      result.best_length = t.length;
      result.witness = s;
      result.witness_label = label;
    }
  };

  for (int size = 1; size <= std::min(cfg.max_subset_size, a.dim()); ++size) {
    std::vector<std::vector<int>> subsets;
    subsets_of_size(a.dim(), size, subsets);
    for (const auto& subset : subsets) {
      std::vector<Vec> vectors;
      std::vector<std::string> labels;
      std::string label = "@";
      for (std::size_t i = 0; i < subset.size(); ++i) {
        vectors.push_back(a.basis_vector(subset[i]));
        labels.push_back(a.basis_name(subset[i]));
        label += (i ? "," : "") + a.basis_name(subset[i]);
      }
      GenSet s = GenSet::of(std::move(vectors), std::move(labels));
      s.spec_text = label;
      consider(s, label);
    }
  }

  for (std::size_t i = 0; i < cfg.candidates.size(); ++i) {
    const GenSet& s = cfg.candidates[i];
    std::string label =
        s.spec_text.empty() ? "candidate#" + std::to_string(i + 1) : s.spec_text;
    consider(s, label);
  }

  if (cfg.random_sets > 0) {
    if (cfg.set_size_min < 1 || cfg.set_size_max < cfg.set_size_min) {
      throw validation_error("invalid random set size range");
    }
    Rng rng(cfg.seed);
    for (int i = 0; i < cfg.random_sets; ++i) {
      int size = static_cast<int>(rng.range(cfg.set_size_min, cfg.set_size_max));
      GenSet s = random_genset(a, size, rng, "random#" + std::to_string(i + 1));
      consider(s, s.spec_text);
    }
  }

  result.exact = bound && result.best_length && *result.best_length == bound->value;
  return result;
}

bool verify_set_claim(const Algebra& a, const GenSet& s, int claimed_length) {
  auto len = length_of_set(a, s);
  return len && *len == claimed_length;
}

}  // namespace alglen
