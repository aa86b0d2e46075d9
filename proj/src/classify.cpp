#include "alglen/classify.hpp"

#include <algorithm>
#include "alglen/errors.hpp"
#include "alglen/filtration.hpp"

#include "alglen/rng.hpp"

namespace alglen {

namespace {

std::string spell(const Word& w, bool top = true) {
  static const char* kVars = "xyz";
  if (w.is_leaf()) return std::string(1, kVars[w.index()]);
  std::string body = spell(w.left(), false) + spell(w.right(), false);
  return top ? body : "(" + body + ")";
}

Monomial mono(const Word& w) { return {w, spell(w), w.length()}; }

MonomialSet build_set(MonSetTag tag) {
  const Word x = Word::leaf(0), y = Word::leaf(1), z = Word::leaf(2);
  auto p = [](const Word& a, const Word& b) { return Word::product(a, b); };

  std::vector<Monomial> cubic_l = {mono(p(x, p(z, y))), mono(p(x, p(y, z))), mono(p(y, p(x, z))),
                                   mono(p(y, p(z, x)))};
  std::vector<Monomial> cubic_r = {mono(p(p(x, z), y)), mono(p(p(z, x), y)), mono(p(p(y, z), x)),
                                   mono(p(p(z, y), x))};
  std::vector<Monomial> lower = {mono(p(x, y)), mono(p(y, x)), mono(p(x, z)), mono(p(z, x)),
                                 mono(p(y, z)), mono(p(z, y)), mono(x),       mono(y),
                                 mono(z)};

  std::vector<Monomial> all;
  if (tag == MonSetTag::q_l) {
    all = cubic_l;
  } else if (tag == MonSetTag::q_r) {
    all = cubic_r;
  } else {
    all = cubic_r;
    all.insert(all.end(), cubic_l.begin(), cubic_l.end());
  }
  all.insert(all.end(), lower.begin(), lower.end());
  return {tag, std::move(all)};
}

}  // namespace

const MonomialSet& monomial_set(MonSetTag tag) {
  static const MonomialSet ql = build_set(MonSetTag::q_l);
  static const MonomialSet qr = build_set(MonSetTag::q_r);
  static const MonomialSet pf = build_set(MonSetTag::p_full);
  switch (tag) {
    case MonSetTag::q_l:
      return ql;
    case MonSetTag::q_r:
      return qr;
    default:
      return pf;
  }
}

std::string mon_set_name(MonSetTag tag) {
  switch (tag) {
    case MonSetTag::q_l:
      return "Q_l";
    case MonSetTag::q_r:
      return "Q_r";
    default:
      return "P";
  }
}

const Word& target_word(Target t) {
  static const Word left = Word::product(Word::product(Word::leaf(0), Word::leaf(1)), Word::leaf(2));
  static const Word right = Word::product(Word::leaf(2), Word::product(Word::leaf(0), Word::leaf(1)));
  return t == Target::left_product ? left : right;
}

std::string target_spelling(Target t) { return spell(target_word(t)); }

std::vector<std::string> Certificate::support() const {
  std::vector<std::string> out;
  for (const auto& [spelling, c] : coefficients) {
    if (!c.is_zero()) out.push_back(spelling);
  }
  return out;
}

std::vector<std::string> Certificate::degree3_support() const {
  std::vector<std::string> out;
  const auto& ms = monomial_set(set);
  for (const auto& [spelling, c] : coefficients) {
    if (c.is_zero()) continue;
    for (const auto& m : ms.monomials) {
      if (m.spelling == spelling && m.degree == 3) {
        out.push_back(spelling);
        break;
      }
    }
  }
  return out;
}

std::string Certificate::equation() const {
  std::string rhs;
  for (const auto& [spelling, c] : coefficients) {
    if (c.is_zero()) continue;
    if (rhs.empty()) {
      rhs = c.is_one() ? spelling : c.str() + "*" + spelling;
    } else {
      std::string cs = c.str();
      if (!cs.empty() && cs[0] == '-') {
        rhs += cs == "-1" ? " - " + spelling : " - " + cs.substr(1) + "*" + spelling;
      } else {
        rhs += cs == "1" ? " + " + spelling : " + " + cs + "*" + spelling;
      }
    }
  }
  if (rhs.empty()) rhs = "0";
  return target_spelling(target) + " = " + rhs;
}

std::optional<Certificate> certify_uniform(const Algebra& a, Target target,
                                           const MonomialSet& set) {
  const int d = a.dim();
  const bool unital = a.is_unital();
  const std::size_t n_unknowns = set.monomials.size() + (unital ? 1 : 0);

  std::vector<Vec> rows;
  Vec rhs;
  std::vector<Vec> assign(3);
  for (int ia = 0; ia < d; ++ia) {
    assign[0] = a.basis_vector(ia);
    for (int ib = 0; ib < d; ++ib) {
      assign[1] = a.basis_vector(ib);
      for (int ic = 0; ic < d; ++ic) {
        assign[2] = a.basis_vector(ic);
        std::vector<Vec> values;
        values.reserve(n_unknowns);
        for (const auto& m : set.monomials) values.push_back(a.evaluate_word(m.word, assign));
        if (unital) values.push_back(*a.unit());
        Vec target_val = a.evaluate_word(target_word(target), assign);
        for (int t = 0; t < d; ++t) {
          Vec row;
          row.reserve(n_unknowns);
          for (const auto& v : values) row.push_back(v[static_cast<std::size_t>(t)]);
          rows.push_back(std::move(row));
          rhs.push_back(target_val[static_cast<std::size_t>(t)]);
        }
      }
    }
  }

  auto solution = solve(rows, rhs);
  if (!solution) return std::nullopt;

  Certificate cert;
  cert.target = target;
  cert.set = set.tag;
  for (std::size_t i = 0; i < set.monomials.size(); ++i) {
    cert.coefficients.emplace_back(set.monomials[i].spelling, (*solution)[i]);
  }
  if (unital) cert.coefficients.emplace_back("1", solution->back());
  return cert;
}

namespace {

std::optional<Refutation> test_triple(const Algebra& a, Target target, const MonomialSet& set,
                                      const std::array<Vec, 3>& triple,
                                      std::optional<std::array<int, 3>> basis_triple) {
  std::vector<Vec> assign(triple.begin(), triple.end());
  Subspace span(a.field(), a.dim());
  for (const auto& m : set.monomials) span.add_row(a.evaluate_word(m.word, assign));
  if (a.is_unital()) span.add_row(*a.unit());
  Vec value = a.evaluate_word(target_word(target), assign);
  if (span.contains(value)) return std::nullopt;
  Refutation r;
  r.target = target;
  r.set = set.tag;
  r.basis_triple = basis_triple;
  r.triple = triple;
  r.target_value = std::move(value);
  r.span_dim = span.dim();
  return r;
}

Vec random_vector(const Algebra& a, Rng& rng) {
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

}  // namespace

std::optional<Refutation> refute_per_triple(const Algebra& a, Target target,
                                            const MonomialSet& set, int random_triples,
                                            std::uint64_t seed) {
  const int d = a.dim();
  for (int ia = 0; ia < d; ++ia) {
    for (int ib = 0; ib < d; ++ib) {
      for (int ic = 0; ic < d; ++ic) {
        auto hit = test_triple(a, target, set,
                               {a.basis_vector(ia), a.basis_vector(ib), a.basis_vector(ic)},
                               std::array<int, 3>{ia, ib, ic});
        if (hit) return hit;
      }
    }
  }
  Rng rng(seed);
  for (int i = 0; i < random_triples; ++i) {
    std::array<Vec, 3> triple = {random_vector(a, rng), random_vector(a, rng),
                                 random_vector(a, rng)};
    auto hit = test_triple(a, target, set, triple, std::nullopt);
    if (hit) return hit;
  }
  return std::nullopt;
}

Verdict ClassificationReport::sliding_verdict() const {
  if (sliding_item1.verdict == Verdict::certified || sliding_item2.verdict == Verdict::certified) {
    return Verdict::certified;
  }
  if (sliding_item1.verdict == Verdict::refuted && sliding_item2.verdict == Verdict::refuted) {
    return Verdict::refuted;
  }
  return Verdict::undetermined;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::certified:
      return "certified";
    case Verdict::refuted:
      return "refuted";
    default:
      return "undetermined";
  }
}

namespace {

PropertyResult single_target_property(const Algebra& a, Target target, MonSetTag tag,
                                      const ClassifyConfig& cfg) {
  PropertyResult res;
  const MonomialSet& set = monomial_set(tag);
  if (auto cert = certify_uniform(a, target, set)) {
    res.verdict = Verdict::certified;
    res.certificates.push_back(std::move(*cert));
    return res;
  }
  if (auto ref = refute_per_triple(a, target, set, cfg.random_triples, cfg.seed)) {
    res.verdict = Verdict::refuted;
    res.refutation = std::move(*ref);
    return res;
  }
  res.verdict = Verdict::undetermined;
  return res;
}

}  // namespace

ClassificationReport classify(const Algebra& a, const ClassifyConfig& cfg) {
  ClassificationReport report;

  // mixing: both (xy)z and z(xy) must lie in <P, 1>; a failing triple for
  // either target refutes it
  const MonomialSet& pset = monomial_set(MonSetTag::p_full);
  auto cert_left = certify_uniform(a, Target::left_product, pset);
  auto cert_right = certify_uniform(a, Target::right_product, pset);
  if (cert_left && cert_right) {
    report.mixing.verdict = Verdict::certified;
    report.mixing.certificates.push_back(std::move(*cert_left));
    report.mixing.certificates.push_back(std::move(*cert_right));
  } else {
    auto ref = refute_per_triple(a, Target::left_product, pset, cfg.random_triples, cfg.seed);
    if (!ref) {
      ref = refute_per_triple(a, Target::right_product, pset, cfg.random_triples, cfg.seed);
    }
    if (ref) {
      report.mixing.verdict = Verdict::refuted;
      report.mixing.refutation = std::move(*ref);
    } else {
      report.mixing.verdict = Verdict::undetermined;
    }
  }

  report.sliding_item1 = single_target_property(a, Target::right_product, MonSetTag::q_r, cfg);
  report.sliding_item2 = single_target_property(a, Target::left_product, MonSetTag::q_l, cfg);
  return report;
}

std::vector<Bound> applicable_bounds(const BoundEvidence& ev) {
  std::vector<Bound> out;
  const long long d = ev.dim;
  if (d >= 2 && ev.mixing == Verdict::certified) out.push_back({d, "mixing"});
  if (d >= 2 && ev.sliding == Verdict::certified) out.push_back({d, "sliding"});
  if (d >= 2 && ev.lie) out.push_back({d - 1, "Lie"});
  // the strict associative bound rests on the unit starting the chain
  if (d >= 2 && ev.associative && ev.unital) out.push_back({d - 1, "associative"});
  if (ev.r_ended_r) {
    out.push_back({(static_cast<long long>(*ev.r_ended_r) - 1) * d,
                   "r-ended, r = " + std::to_string(*ev.r_ended_r)});
  }
  if (ev.unital && d >= 2 && d <= 62) out.push_back({1LL << (d - 2), "unital"});
  return out;
}

std::optional<Bound> length_upper_bound(const BoundEvidence& ev) {
  std::optional<Bound> best;
  for (const auto& b : applicable_bounds(ev)) {
    if (!best || b.value < best->value) best = b;
  }
  return best;
}

BoundEvidence gather_bound_evidence(const Algebra& a, const ClassificationReport& report,
                                    long long budget, int max_r) {
  BoundEvidence ev;
  ev.dim = a.dim();
  ev.unital = a.is_unital();
  ev.mixing = report.mixing_verdict();
  ev.sliding = report.sliding_verdict();
  ev.lie = check_class(a, "lie", budget).holds;
  ev.associative = check_class(a, "associative", budget).holds;

  // x * 1^r = x, so unital algebras are never r-ended; elsewhere the scan
  // only pays off when nothing else bounds the length
  bool have_bound = ev.mixing == Verdict::certified || ev.sliding == Verdict::certified ||
                    ev.lie || ev.associative;
  if (!ev.unital && !have_bound) {
    for (int r = 2; r <= max_r; ++r) {
      try {
        if (check_r_ended(a, r, budget).holds) {
          ev.r_ended_r = r;
          break;
        }
      } catch (const budget_exceeded&) {
        break;
      }
    }
  }
  return ev;
}

}  // namespace alglen
