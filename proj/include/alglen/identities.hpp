#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "alglen/algebra.hpp"

namespace alglen {

inline constexpr long long kDefaultEvalBudget = 10'000'000;

// A polynomial identity written as an integer combination of bracketed
// monomials, multilinear: every monomial uses each of the `arity`
// variables exactly once.
struct MultilinearIdentity {
  std::string name;
  int arity = 0;
  std::vector<std::pair<long long, Word>> terms;  // (coefficient, monomial)

  void validate() const;
  std::string str() const;

  static MultilinearIdentity from_json(const nlohmann::json& j);
};

struct Counterexample {
  std::string identity;     // which identity (or which check) failed
  std::vector<int> tuple;   // 0-based basis indices
  Vec defect;               // the nonzero evaluation
};

struct IdentityVerdict {
  bool holds = false;
  std::optional<Counterexample> failure;

  static IdentityVerdict yes() { return {true, std::nullopt}; }
  static IdentityVerdict no(Counterexample c) { return {false, std::move(c)}; }
};

// Evaluates the identity on every basis tuple (multilinearity makes this
// complete). Returns the lexicographically first failing tuple, if any.
// Throws budget_exceeded when dim^arity > budget.
IdentityVerdict check_identity(const Algebra& a, const MultilinearIdentity& id,
                               long long budget = kDefaultEvalBudget);

// Defining identity sets of the classical algebra classes. Known names:
// associative, commutative, anticommutative, lie, leibniz, novikov,
// zinbiel, vinberg, valya.
std::vector<MultilinearIdentity> builtin(const std::string& name);
std::vector<std::string> builtin_names();

// x*x = 0 on all basis vectors and pairwise sums e_i + e_j; by
// bilinearity this is complete for the alternating property in every
// characteristic (including 2, where "xy = -yx" alone is weaker).
IdentityVerdict check_alternating(const Algebra& a);

// Whether the class needs the alternating check on top of its
// multilinear identities (the anticommutative-flavoured classes).
bool class_needs_alternating(const std::string& name);

// The full membership test for a named class: its identities in order,
// then the alternating check where required.
IdentityVerdict check_class(const Algebra& a, const std::string& name,
                            long long budget = kDefaultEvalBudget);

// All binary bracketings of r ordered slots (leaves 0..r-1), exactly
// Catalan(r-1) of them. Guarded at r <= 12.
std::vector<Word> enumerate_bracketings(int r);

// Whether x * (y_1 ... y_r) = 0 for every bracketing of the product and
// all elements; checked on basis tuples, complete by multilinearity.
IdentityVerdict check_r_ended(const Algebra& a, int r, long long budget = kDefaultEvalBudget);

}  // namespace alglen
