#pragma once

#include <json.hpp>

#include "alglen/classify.hpp"
#include "alglen/filtration.hpp"
#include "alglen/search.hpp"

namespace alglen {

using ordered_json = nlohmann::ordered_json;

// JSON builders shared by the CLI and the acceptance suite. All output
// is deterministic: keys in insertion order, scalars as exact strings.
ordered_json fingerprint_json(const Algebra& a);
ordered_json vec_json(const Vec& v);
ordered_json trace_json(const FiltrationTrace& t, const GenSet& s);
ordered_json verdict_json(const IdentityVerdict& v, const Algebra& a);
ordered_json certificate_json(const Certificate& c);
ordered_json refutation_json(const Refutation& r, const Algebra& a);
ordered_json property_json(const PropertyResult& p, const Algebra& a);
ordered_json classification_json(const ClassificationReport& r, const Algebra& a);
ordered_json bounds_json(const std::vector<Bound>& bounds, const std::optional<Bound>& best);
ordered_json search_json(const SearchResult& r);

}  // namespace alglen
