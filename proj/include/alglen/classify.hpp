#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "alglen/algebra.hpp"
#include "alglen/identities.hpp"

namespace alglen {

// The fixed monomial vocabularies in variables x, y, z used by the
// sliding/mixing span conditions. Degree-3 entries keep z inside the
// inner product; q_l has the z-factor on the right of the outer product,
// q_r on the left, p_full is their union.
enum class MonSetTag { q_l, q_r, p_full };

struct Monomial {
  Word word;             // over variables 0=x, 1=y, 2=z
  std::string spelling;  // "x(zy)", "(xz)y", "xy", "x", ...
  int degree;
};

struct MonomialSet {
  MonSetTag tag;
  std::vector<Monomial> monomials;
};

const MonomialSet& monomial_set(MonSetTag tag);
std::string mon_set_name(MonSetTag tag);

// The two product orientations whose span membership is being decided.
enum class Target { left_product, right_product };  // (xy)z and z(xy)
const Word& target_word(Target t);
std::string target_spelling(Target t);

// A single coefficient vector expressing the target as a combination of
// the monomial set (plus the constant 1 when unital), valid on every
// basis triple and hence, by trilinearity, on all algebra elements.
struct Certificate {
  Target target;
  MonSetTag set;
  std::vector<std::pair<std::string, Scalar>> coefficients;  // spelling -> coefficient

  std::vector<std::string> support() const;          // nonzero entries
  std::vector<std::string> degree3_support() const;  // the T_*/S_* sets
  std::string equation() const;
};

std::optional<Certificate> certify_uniform(const Algebra& a, Target target,
                                           const MonomialSet& set);

// A triple where the target value escapes the span of the evaluated
// monomial set; this refutes the property outright.
struct Refutation {
  Target target;
  MonSetTag set;
  std::optional<std::array<int, 3>> basis_triple;  // set for basis scans
  std::array<Vec, 3> triple;
  Vec target_value;
  int span_dim = 0;
};

// Scans all basis triples lexicographically, then `random_triples`
// seeded random triples, and returns the first failure found.
std::optional<Refutation> refute_per_triple(const Algebra& a, Target target,
                                            const MonomialSet& set, int random_triples = 0,
                                            std::uint64_t seed = 1);

enum class Verdict { certified, refuted, undetermined };
std::string verdict_name(Verdict v);

struct PropertyResult {
  Verdict verdict = Verdict::undetermined;
  std::vector<Certificate> certificates;
  std::optional<Refutation> refutation;
};

struct ClassifyConfig {
  int random_triples = 0;
  std::uint64_t seed = 1;
};

// Tri-state report: mixing needs both targets over P; sliding holds when
// either of its two items does, so it is refuted only when both are.
struct ClassificationReport {
  PropertyResult mixing;
  PropertyResult sliding_item1;  // z(xy) over Q_r
  PropertyResult sliding_item2;  // (xy)z over Q_l

  Verdict sliding_verdict() const;
  Verdict mixing_verdict() const { return mixing.verdict; }
};

ClassificationReport classify(const Algebra& a, const ClassifyConfig& cfg = {});

// Everything length_upper_bound needs to pick the best provable bound.
struct BoundEvidence {
  int dim = 0;
  bool unital = false;
  Verdict mixing = Verdict::undetermined;
  Verdict sliding = Verdict::undetermined;
  bool lie = false;
  bool associative = false;
  std::optional<int> r_ended_r;
};

struct Bound {
  long long value = 0;
  std::string justification;
};

// Every bound the evidence supports, in fixed precedence order.
std::vector<Bound> applicable_bounds(const BoundEvidence& ev);
// The best (smallest) of them; ties keep the precedence order.
std::optional<Bound> length_upper_bound(const BoundEvidence& ev);

// Convenience evidence assembly: classification plus the Lie/associative
// suites; scans r = 2..max_r for the r-ended property on non-unital
// algebras only when nothing else bounds the length.
BoundEvidence gather_bound_evidence(const Algebra& a, const ClassificationReport& report,
                                    long long budget = kDefaultEvalBudget, int max_r = 4);

}  // namespace alglen
