#include "alglen/identities.hpp"

#include <algorithm>
#include "alglen/errors.hpp"
#include "alglen/filtration.hpp"

namespace alglen {

using nlohmann::json;

namespace {

void collect_leaf_counts(const Word& w, std::vector<int>& counts) {
  if (w.is_leaf()) {
    if (w.index() < static_cast<int>(counts.size())) counts[static_cast<std::size_t>(w.index())]++;
    return;
  }
  collect_leaf_counts(w.left(), counts);
  collect_leaf_counts(w.right(), counts);
}

std::string monomial_str(const Word& w, bool top = true) {
  static const char* kVars = "xyzuvw";
  if (w.is_leaf()) {
    int i = w.index();
    return i < 6 ? std::string(1, kVars[i]) : "x" + std::to_string(i + 1);
  }
  std::string body = monomial_str(w.left(), false) + monomial_str(w.right(), false);
  return top ? body : "(" + body + ")";
}

}  // namespace

void MultilinearIdentity::validate() const {
  if (arity < 2) throw validation_error("identity arity must be at least 2");
  if (terms.empty()) throw validation_error("identity needs at least one term");
  for (const auto& [coeff, mon] : terms) {
    (void)coeff;
    std::vector<int> counts(static_cast<std::size_t>(arity), 0);
    if (mon.max_index() >= arity) {
      throw validation_error("monomial in '" + name + "' uses a variable beyond its arity");
    }
    collect_leaf_counts(mon, counts);
    for (int c : counts) {
      if (c != 1) {
        throw validation_error("monomial in '" + name +
                               "' must use each variable exactly once");
      }
    }
  }
}

std::string MultilinearIdentity::str() const {
  std::string out;
  bool first = true;
  for (const auto& [coeff, mon] : terms) {
    std::string c;
    if (coeff == 1) {
      c = first ? "" : "+ ";
    } else if (coeff == -1) {
      c = first ? "-" : "- ";
    } else if (coeff >= 0) {
      c = (first ? "" : "+ ") + std::to_string(coeff) + "*";
    } else {
      c = (first ? "-" : "- ") + std::to_string(-coeff) + "*";
    }
    out += (first ? "" : " ") + c + monomial_str(mon);
    first = false;
  }
  return out + " = 0";
}

namespace {

Word word_from_json(const json& j, int arity) {
  if (j.is_number_integer()) {
    long long v = j.get<long long>();
    if (v < 1 || v > arity) {
      throw validation_error("identity variable " + std::to_string(v) + " out of range 1.." +
                             std::to_string(arity));
    }
    return Word::leaf(static_cast<int>(v - 1));
  }
  if (j.is_array() && j.size() == 2) {
    return Word::product(word_from_json(j[0], arity), word_from_json(j[1], arity));
  }
  throw parse_error("monomial trees are nested two-element arrays with integer leaves");
}

}  // namespace

MultilinearIdentity MultilinearIdentity::from_json(const json& j) {
  MultilinearIdentity id;
  if (!j.is_object()) throw parse_error("identity file must be a JSON object");
  for (const char* key : {"name", "arity", "terms"}) {
    if (!j.contains(key)) throw parse_error(std::string("identity file missing '") + key + "'");
  }
  id.name = j.at("name").get<std::string>();
  id.arity = j.at("arity").get<int>();
  for (const auto& t : j.at("terms")) {
    long long coeff;
    const auto& cj = t.at("coeff");
    if (cj.is_number_integer()) {
      coeff = cj.get<long long>();
    } else if (cj.is_string()) {
      try {
        std::size_t used = 0;
        coeff = std::stoll(cj.get<std::string>(), &used);
        if (used != cj.get<std::string>().size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw parse_error("identity coefficients must be integers");
      }
    } else {
      throw parse_error("identity coefficients must be integers");
    }
    id.terms.emplace_back(coeff, word_from_json(t.at("monomial"), id.arity));
  }
  id.validate();
  return id;
}

IdentityVerdict check_identity(const Algebra& a, const MultilinearIdentity& id,
                               long long budget) {
  id.validate();
  const int d = a.dim();
  long long tuples = 1;
  for (int i = 0; i < id.arity; ++i) {
    if (__builtin_mul_overflow(tuples, static_cast<long long>(d), &tuples) || tuples > budget) {
      throw budget_exceeded("identity check needs more than " + std::to_string(budget) +
                            " evaluations");
    }
  }

  std::vector<int> tuple(static_cast<std::size_t>(id.arity), 0);
  std::vector<Vec> assign;
  assign.reserve(tuple.size());
  while (true) {
    assign.clear();
    for (int i : tuple) assign.push_back(a.basis_vector(i));
    Vec defect = a.zero();
    for (const auto& [coeff, mon] : id.terms) {
      Vec val = a.evaluate_word(mon, assign);
      axpy(defect, Scalar::of_int(a.field(), coeff), val);
    }
    if (!is_zero(defect)) {
      return IdentityVerdict::no({id.name, tuple, std::move(defect)});
    }
    // lexicographic odometer, most-significant first
    int pos = id.arity - 1;
    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == d - 1) {
      tuple[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    tuple[static_cast<std::size_t>(pos)]++;
  }
  return IdentityVerdict::yes();
}

namespace {

MultilinearIdentity make_identity(std::string name, int arity,
                                  std::vector<std::pair<long long, Word>> terms) {
  MultilinearIdentity id{std::move(name), arity, std::move(terms)};
  id.validate();
  return id;
}

}  // namespace

std::vector<MultilinearIdentity> builtin(const std::string& name) {
  const Word x = Word::leaf(0), y = Word::leaf(1), z = Word::leaf(2);
  auto p = [](const Word& a, const Word& b) { return Word::product(a, b); };

  if (name == "associative") {
    return {make_identity("associativity", 3, {{1, p(p(x, y), z)}, {-1, p(x, p(y, z))}})};
  }
  if (name == "commutative") {
    return {make_identity("commutativity", 2, {{1, p(x, y)}, {-1, p(y, x)}})};
  }
  if (name == "anticommutative") {
    return {make_identity("anticommutativity", 2, {{1, p(x, y)}, {1, p(y, x)}})};
  }
  if (name == "lie") {
    return {make_identity("anticommutativity", 2, {{1, p(x, y)}, {1, p(y, x)}}),
            make_identity("jacobi", 3,
                          {{1, p(p(x, y), z)}, {1, p(p(y, z), x)}, {1, p(p(z, x), y)}})};
  }
  if (name == "leibniz") {
    return {make_identity("leibniz", 3,
                          {{1, p(p(x, y), z)}, {-1, p(x, p(y, z))}, {-1, p(p(x, z), y)}})};
  }
  if (name == "novikov") {
    return {make_identity("left-symmetry", 3,
                          {{1, p(x, p(y, z))},
                           {-1, p(p(x, y), z)},
                           {-1, p(y, p(x, z))},
                           {1, p(p(y, x), z)}}),
            make_identity("right-commutativity", 3, {{1, p(p(x, y), z)}, {-1, p(p(x, z), y)}})};
  }
  if (name == "zinbiel") {
    return {make_identity("zinbiel", 3,
                          {{1, p(x, p(y, z))}, {-1, p(p(x, y), z)}, {-1, p(p(y, x), z)}})};
  }
  if (name == "vinberg") {
    return {make_identity("right-symmetry", 3,
                          {{1, p(p(x, y), z)},
                           {-1, p(x, p(y, z))},
                           {-1, p(p(x, z), y)},
                           {1, p(x, p(z, y))}})};
  }
  if (name == "valya") {
    // J(x1 x2, x3 x4, x5 x6) with J(a,b,c) = (ab)c + (bc)a + (ca)b
    const Word a = p(Word::leaf(0), Word::leaf(1));
    const Word b = p(Word::leaf(2), Word::leaf(3));
    const Word c = p(Word::leaf(4), Word::leaf(5));
    return {make_identity("anticommutativity", 2, {{1, p(x, y)}, {1, p(y, x)}}),
            make_identity("jacobiator-of-products", 6,
                          {{1, p(p(a, b), c)}, {1, p(p(b, c), a)}, {1, p(p(c, a), b)}})};
  }
  throw validation_error("unknown identity class '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"associative", "commutative", "anticommutative", "lie", "leibniz",
          "novikov",     "zinbiel",     "vinberg",         "valya"};
}

bool class_needs_alternating(const std::string& name) {
  return name == "lie" || name == "anticommutative" || name == "valya";
}

IdentityVerdict check_alternating(const Algebra& a) {
  const int d = a.dim();
  for (int i = 0; i < d; ++i) {
    Vec e = a.basis_vector(i);
    Vec sq = a.multiply(e, e);
    if (!is_zero(sq)) {
      return IdentityVerdict::no({"alternating (x*x = 0)", {i, i}, std::move(sq)});
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Vec v = add(a.basis_vector(i), a.basis_vector(j));
      Vec sq = a.multiply(v, v);
      if (!is_zero(sq)) {
        return IdentityVerdict::no({"alternating (x*x = 0)", {i, j}, std::move(sq)});
      }
    }
  }
  return IdentityVerdict::yes();
}

IdentityVerdict check_class(const Algebra& a, const std::string& name, long long budget) {
  for (const auto& id : builtin(name)) {
    IdentityVerdict v = check_identity(a, id, budget);
    if (!v.holds) return v;
  }
  if (class_needs_alternating(name)) {
    IdentityVerdict v = check_alternating(a);
    if (!v.holds) return v;
  }
  return IdentityVerdict::yes();
}

namespace {

void bracketings_range(int lo, int hi, std::vector<Word>& out) {
  if (hi - lo == 1) {
    out.push_back(Word::leaf(lo));
    return;
  }
  for (int mid = lo + 1; mid < hi; ++mid) {
    std::vector<Word> lefts, rights;
    bracketings_range(lo, mid, lefts);
    bracketings_range(mid, hi, rights);
    for (const auto& l : lefts) {
      for (const auto& r : rights) out.push_back(Word::product(l, r));
    }
  }
}

}  // namespace

std::vector<Word> enumerate_bracketings(int r) {
  if (r < 1) throw validation_error("bracketing count needs at least one slot");
  if (r > 12) throw budget_exceeded("bracketing enumeration guarded at 12 slots");
  std::vector<Word> out;
  bracketings_range(0, r, out);
  return out;
}

IdentityVerdict check_r_ended(const Algebra& a, int r, long long budget) {
  if (r < 2) throw validation_error("r must be at least 2");
  long long cost = catalan(r - 1);
  for (int i = 0; i <= r; ++i) {
    if (__builtin_mul_overflow(cost, static_cast<long long>(a.dim()), &cost) || cost > budget) {
      throw budget_exceeded("r-ended check needs more than " + std::to_string(budget) +
                            " evaluations");
    }
  }
  for (const auto& shape : enumerate_bracketings(r)) {
    // variable 0 is x, variables 1..r are y_1..y_r
    Word mon = Word::product(Word::leaf(0), shape.shift_leaves(1));
    std::string v_str = shape.str([](int i) { return "y" + std::to_string(i + 1); });
    MultilinearIdentity id{"x*v with v = " + v_str, r + 1, {{1, mon}}};
    IdentityVerdict v = check_identity(a, id, budget);
    if (!v.holds) return v;
  }
  return IdentityVerdict::yes();
}

}  // namespace alglen
