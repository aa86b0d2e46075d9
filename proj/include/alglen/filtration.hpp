#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alglen/algebra.hpp"
#include "alglen/errors.hpp"

namespace alglen {

// A finite set of algebra elements used as generators. Labels are used
// when rendering witness words ("g3", "@e1", basis names...).
struct GenSet {
  std::vector<Vec> vectors;
  std::vector<std::string> labels;
  std::string spec_text;  // echo of the textual spec when parsed

  static GenSet of(std::vector<Vec> vectors, std::vector<std::string> labels = {});
  // Accepts "@basis", "@e1,e3" (basis names or positional eK), or
  // semicolon-separated coordinate lists like "1,0,0; 0,1,0".
  static GenSet parse(const std::string& text, const Algebra& a);

  std::string label(int i) const { return labels[static_cast<std::size_t>(i)]; }
};

// One basis element of the span filtration: an irreducible word, its
// value, and its exact length. The unit, when present, is the unique
// length-0 witness and has no word.
struct Witness {
  std::optional<Word> word;
  Vec value;
  int length = 0;

  std::string word_str(const GenSet& s) const;
};

struct LevelRecord {
  int level;
  int dim;    // dim L_level
  int added;  // s_level
};

// Full account of the filtration L_0 <= L_1 <= ... for one generating
// set: processed levels, witnesses in discovery order, and the outcome.
// Levels where no witness-pair product can exist are skipped; their
// dimensions equal the previous processed level (see dim_at).
class FiltrationTrace {
 public:
  bool unital = false;
  int ambient_dim = 0;
  std::vector<Witness> witnesses;
  std::vector<LevelRecord> levels;
  std::vector<Subspace> level_spaces;  // parallel to levels
  bool generating = false;
  std::optional<int> length;
  int stabilized_at = 0;  // level at which the final dimension was reached

  int final_dim() const;
  int dim_at(int level) const;
  // Characteristic sequence: level k repeated s_k times (prefixed by one
  // 0 for unital algebras). Partial when the set does not generate.
  std::vector<int> char_seq() const;
  const Subspace& final_space() const;
};

FiltrationTrace filtrate(const Algebra& a, const GenSet& s);

// Length of the generating set, or nullopt when it does not generate.
std::optional<int> length_of_set(const Algebra& a, const GenSet& s);

struct not_generating : error {
  not_generating(std::string msg, std::vector<int> partial, int dim)
      : error(std::move(msg)), partial_sequence(std::move(partial)), stabilized_dim(dim) {}
  std::vector<int> partial_sequence;
  int stabilized_dim;
};

// Throws not_generating (carrying the partial sequence) when s does not
// generate a.
std::vector<int> characteristic_sequence(const Algebra& a, const GenSet& s);

// The witnesses of the filtration: dim L_final entries, s_j of exact
// length j, each extending the span of its predecessors.
std::vector<Witness> irreducible_basis(const Algebra& a, const GenSet& s);

// Independent oracle: spans every word of each length (all letter
// choices, all bracketings) cumulatively. Returns dim L_k for
// k = 0..k_max. Guarded: refuses more than `word_guard` words total.
inline constexpr long long kOracleWordGuard = 1'000'000;
std::vector<int> oracle_filtrate(const Algebra& a, const GenSet& s, int k_max,
                                 long long word_guard = kOracleWordGuard);

// Catalan numbers C_0.. used by the oracle guard and bracketing counts.
long long catalan(int n);

}  // namespace alglen
