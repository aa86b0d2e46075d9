#include "alglen/report.hpp"

namespace alglen {

ordered_json fingerprint_json(const Algebra& a) {
  ordered_json j;
  j["name"] = a.name();
  j["dim"] = a.dim();
  j["field"] = a.field().str();
  j["unital"] = a.is_unital();
  if (a.is_unital()) j["unit"] = vec_json(*a.unit());
  return j;
}

ordered_json vec_json(const Vec& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : v) arr.push_back(s.str());
  return arr;
}

ordered_json trace_json(const FiltrationTrace& t, const GenSet& s) {
  ordered_json j;
  j["generating"] = t.generating;
  if (t.length) j["length"] = *t.length;
  j["stabilized_at"] = t.stabilized_at;
  j["final_dim"] = t.final_dim();
  j["char_seq"] = t.char_seq();
  ordered_json levels = ordered_json::array();
  for (const auto& rec : t.levels) {
    levels.push_back(ordered_json{{"level", rec.level}, {"dim", rec.dim}, {"added", rec.added}});
  }
  j["levels"] = std::move(levels);
  ordered_json wits = ordered_json::array();
  for (const auto& w : t.witnesses) {
    wits.push_back(ordered_json{
        {"word", w.word_str(s)}, {"length", w.length}, {"value", vec_json(w.value)}});
  }
  j["witnesses"] = std::move(wits);
  return j;
}

ordered_json verdict_json(const IdentityVerdict& v, const Algebra& a) {
  ordered_json j;
  j["verdict"] = v.holds ? "holds" : "counterexample";
  if (v.failure) {
    ordered_json c;
    c["identity"] = v.failure->identity;
    ordered_json tuple = ordered_json::array();
    ordered_json names = ordered_json::array();
    for (int i : v.failure->tuple) {
      tuple.push_back(i + 1);
      names.push_back(a.basis_name(i));
    }
    c["tuple"] = std::move(tuple);
    c["tuple_names"] = std::move(names);
    c["defect"] = vec_json(v.failure->defect);
    j["counterexample"] = std::move(c);
  }
  return j;
}

ordered_json certificate_json(const Certificate& c) {
  ordered_json j;
  j["target"] = target_spelling(c.target);
  j["set"] = mon_set_name(c.set);
  ordered_json coeffs;
  for (const auto& [spelling, value] : c.coefficients) coeffs[spelling] = value.str();
  j["coefficients"] = std::move(coeffs);
  j["support"] = c.support();
  j["degree3_support"] = c.degree3_support();
  j["equation"] = c.equation();
  return j;
}

ordered_json refutation_json(const Refutation& r, const Algebra& a) {
  ordered_json j;
  j["target"] = target_spelling(r.target);
  j["set"] = mon_set_name(r.set);
  if (r.basis_triple) {
    ordered_json triple = ordered_json::array();
    ordered_json names = ordered_json::array();
    for (int i : *r.basis_triple) {
      triple.push_back(i + 1);
      names.push_back(a.basis_name(i));
    }
    j["basis_triple"] = std::move(triple);
    j["triple_names"] = std::move(names);
  }
  ordered_json vecs = ordered_json::array();
  for (const auto& v : r.triple) vecs.push_back(vec_json(v));
  j["triple"] = std::move(vecs);
  j["target_value"] = vec_json(r.target_value);
  j["span_dim"] = r.span_dim;
  return j;
}

ordered_json property_json(const PropertyResult& p, const Algebra& a) {
  ordered_json j;
  j["verdict"] = verdict_name(p.verdict);
  if (!p.certificates.empty()) {
    ordered_json certs = ordered_json::array();
    for (const auto& c : p.certificates) certs.push_back(certificate_json(c));
    j["certificates"] = std::move(certs);
  }
  if (p.refutation) j["refutation"] = refutation_json(*p.refutation, a);
  return j;
}

ordered_json classification_json(const ClassificationReport& r, const Algebra& a) {
  ordered_json j;
  j["mixing"] = property_json(r.mixing, a);
  j["sliding_item1"] = property_json(r.sliding_item1, a);
  j["sliding_item2"] = property_json(r.sliding_item2, a);
  j["is_mixing"] = verdict_name(r.mixing_verdict());
  j["is_sliding"] = verdict_name(r.sliding_verdict());
  return j;
}

ordered_json bounds_json(const std::vector<Bound>& bounds, const std::optional<Bound>& best) {
  ordered_json j;
  ordered_json arr = ordered_json::array();
  for (const auto& b : bounds) {
    arr.push_back(ordered_json{{"bound", b.value}, {"justification", b.justification}});
  }
  j["applicable"] = std::move(arr);
  if (best) {
    j["best"] = ordered_json{{"bound", best->value}, {"justification", best->justification}};
  }
  return j;
}

ordered_json search_json(const SearchResult& r) {
  ordered_json j;
  if (r.best_length) {
    j["best_length"] = *r.best_length;
    j["witness"] = r.witness_label;
    ordered_json vecs = ordered_json::array();
    for (const auto& v : r.witness->vectors) vecs.push_back(vec_json(v));
    j["witness_vectors"] = std::move(vecs);
  } else {
    j["best_length"] = nullptr;
  }
  if (r.bound) {
    j["upper_bound"] =
        ordered_json{{"bound", r.bound->value}, {"justification", r.bound->justification}};
  }
  j["exact"] = r.exact;
  ordered_json log = ordered_json::array();
  for (const auto& c : r.log) {
    ordered_json entry;
    entry["set"] = c.label;
    entry["generating"] = c.generating;
    if (c.length) entry["length"] = *c.length;
    log.push_back(std::move(entry));
  }
  j["candidates"] = std::move(log);
  return j;
}

}  // namespace alglen
