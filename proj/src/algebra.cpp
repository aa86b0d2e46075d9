#include "alglen/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "alglen/errors.hpp"

namespace alglen {

using nlohmann::json;
using nlohmann::ordered_json;

Algebra::Algebra(std::string name, Field field, int dim, std::vector<ProductEntry> entries,
                 std::vector<std::string> basis_names)
    : name_(std::move(name)), field_(field), dim_(dim) {
  if (dim < 1) throw validation_error("dimension must be at least 1");

  if (basis_names.empty()) {
    for (int i = 1; i <= dim; ++i) basis_names.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(basis_names.size()) != dim) {
    throw validation_error("basis name count does not match dimension");
  }
  names_ = std::move(basis_names);

  table_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), {});
  std::set<std::tuple<int, int, int>> seen;
  for (auto& e : entries) {
    if (e.left < 0 || e.left >= dim || e.right < 0 || e.right >= dim || e.out < 0 ||
        e.out >= dim) {
      throw validation_error("structure constant index out of range in '" + name_ + "'");
    }
    if (e.coeff.field() != field_) {
      throw validation_error("structure constant field mismatch in '" + name_ + "'");
    }
    if (e.coeff.is_zero()) continue;  // sparse canonical form
    if (!seen.insert({e.left, e.right, e.out}).second) {
      throw validation_error("duplicate product entry (" + std::to_string(e.left + 1) + "," +
                             std::to_string(e.right + 1) + "," + std::to_string(e.out + 1) + ")");
    }
    table_[static_cast<std::size_t>(e.left) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(e.right)]
        .emplace_back(e.out, e.coeff);
  }
  for (auto& cell : table_) {
    std::sort(cell.begin(), cell.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  detect_unit();
}

std::span<const std::pair<int, Scalar>> Algebra::basis_product(int i, int j) const {
  return table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                static_cast<std::size_t>(j)];
}

Vec Algebra::basis_vector(int i) const {
  Vec v = zero();
  v[static_cast<std::size_t>(i)] = Scalar::one(field_);
  return v;
}

void Algebra::require_vector(const Vec& v) const {
  if (static_cast<int>(v.size()) != dim_) {
    throw dimension_mismatch("vector length does not match algebra dimension");
  }
  for (const auto& s : v) {
    if (s.field() != field_) throw dimension_mismatch("vector field does not match algebra field");
  }
}

Vec Algebra::multiply(const Vec& u, const Vec& v) const {
  require_vector(u);
  require_vector(v);
  Vec out = zero();
  for (int i = 0; i < dim_; ++i) {
    if (u[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (v[static_cast<std::size_t>(j)].is_zero()) continue;
      Scalar uv = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
      for (const auto& [k, c] : basis_product(i, j)) {
        out[static_cast<std::size_t>(k)] += uv * c;
      }
    }
  }
  return out;
}

Vec Algebra::evaluate_word(const Word& w, std::span<const Vec> assignment) const {
  if (w.is_leaf()) {
    if (w.index() >= static_cast<int>(assignment.size())) {
      throw validation_error("word leaf " + std::to_string(w.index() + 1) +
                             " has no assigned vector");
    }
    const Vec& v = assignment[static_cast<std::size_t>(w.index())];
    require_vector(v);
    return v;
  }
  return multiply(evaluate_word(w.left(), assignment), evaluate_word(w.right(), assignment));
}

void Algebra::detect_unit() {
  // e * e_i = e_i and e_i * e = e_i, one linear system over the unit's
  // coordinates c_0..c_{d-1}
  std::vector<Vec> rows;
  Vec rhs;
  rows.reserve(2 * static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    for (int t = 0; t < dim_; ++t) {
      Vec left_row = zero();   // coefficient of c_j in (e_j * e_i)_t
      Vec right_row = zero();  // coefficient of c_j in (e_i * e_j)_t
      for (int jj = 0; jj < dim_; ++jj) {
        for (const auto& [k, c] : basis_product(jj, i)) {
          if (k == t) left_row[static_cast<std::size_t>(jj)] += c;
        }
        for (const auto& [k, c] : basis_product(i, jj)) {
          if (k == t) right_row[static_cast<std::size_t>(jj)] += c;
        }
      }
      Scalar want = t == i ? Scalar::one(field_) : Scalar::zero(field_);
      rows.push_back(std::move(left_row));
      rhs.push_back(want);
      rows.push_back(std::move(right_row));
      rhs.push_back(want);
    }
  }
  unit_ = solve(rows, rhs);
}

Algebra Algebra::commutator_algebra() const {
  std::vector<ProductEntry> out;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      Vec bracket = zero();
      for (const auto& [k, c] : basis_product(i, j)) bracket[static_cast<std::size_t>(k)] += c;
      for (const auto& [k, c] : basis_product(j, i)) bracket[static_cast<std::size_t>(k)] -= c;
      for (int k = 0; k < dim_; ++k) {
        if (!bracket[static_cast<std::size_t>(k)].is_zero()) {
          out.push_back({i, j, k, bracket[static_cast<std::size_t>(k)]});
        }
      }
    }
  }
  return Algebra(name_ + "^(-)", field_, dim_, std::move(out), names_);
}

std::vector<ProductEntry> Algebra::entries() const {
  std::vector<ProductEntry> out;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (const auto& [k, c] : basis_product(i, j)) out.push_back({i, j, k, c});
    }
  }
  return out;
}

int Algebra::entry_count() const { return static_cast<int>(entries().size()); }

namespace {

Field field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type")) throw parse_error("malformed field descriptor");
  std::string type = j.at("type").get<std::string>();
  if (type == "rational") return Field::rationals();
  if (type == "prime") {
    if (!j.contains("p") || !j.at("p").is_number_integer() || j.at("p").get<long long>() < 2) {
      throw parse_error("prime field needs an integer modulus >= 2");
    }
    return Field::prime(j.at("p").get<std::uint64_t>());
  }
  throw parse_error("unknown field type '" + type + "'");
}

int index_1based(const json& j, int dim, const char* what) {
  if (!j.is_number_integer()) throw parse_error(std::string("non-integer ") + what + " index");
  long long v = j.get<long long>();
  if (v < 1 || v > dim) {
    throw validation_error(std::string(what) + " index " + std::to_string(v) +
                           " out of range 1.." + std::to_string(dim));
  }
  return static_cast<int>(v - 1);
}

}  // namespace

Algebra Algebra::from_json(const json& j) {
  if (!j.is_object()) throw parse_error("algebra file must be a JSON object");
  for (const char* key : {"name", "field", "dim", "products"}) {
    if (!j.contains(key)) throw parse_error(std::string("algebra file missing '") + key + "'");
  }
  std::string name = j.at("name").get<std::string>();
  Field field = field_from_json(j.at("field"));
  if (!j.at("dim").is_number_integer()) throw parse_error("'dim' must be an integer");
  int dim = j.at("dim").get<int>();
  if (dim < 1) throw validation_error("dimension must be at least 1");

  std::vector<std::string> basis;
  if (j.contains("basis")) {
    for (const auto& b : j.at("basis")) basis.push_back(b.get<std::string>());
  }

  std::vector<ProductEntry> entries;
  std::set<std::pair<int, int>> seen_pairs;
  if (!j.at("products").is_array()) throw parse_error("'products' must be an array");
  for (const auto& p : j.at("products")) {
    int left = index_1based(p.at("left"), dim, "left");
    int right = index_1based(p.at("right"), dim, "right");
    if (!seen_pairs.insert({left, right}).second) {
      throw validation_error("duplicate product entry for (" + std::to_string(left + 1) + "," +
                             std::to_string(right + 1) + ")");
    }
    if (!p.contains("out") || !p.at("out").is_object()) {
      throw parse_error("product entry missing 'out' object");
    }
    for (const auto& [key, val] : p.at("out").items()) {
      int out;
      try {
        std::size_t used = 0;
        out = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw parse_error("non-integer output index '" + key + "'");
      }
      if (out < 1 || out > dim) {
        throw validation_error("output index " + std::to_string(out) + " out of range 1.." +
                               std::to_string(dim));
      }
      Scalar c = Scalar::parse(val.get<std::string>(), field);
      entries.push_back({left, right, out - 1, c});
    }
  }

  return Algebra(std::move(name), field, dim, std::move(entries), std::move(basis));
}

ordered_json Algebra::to_json() const {
  ordered_json j;
  j["name"] = name_;
  if (field_.is_rational()) {
    j["field"] = {{"type", "rational"}};
  } else {
    j["field"] = ordered_json{{"type", "prime"}, {"p", field_.p}};
  }
  j["dim"] = dim_;
  j["basis"] = names_;
  ordered_json products = ordered_json::array();
  for (int i = 0; i < dim_; ++i) {
    for (int jj = 0; jj < dim_; ++jj) {
      auto cell = basis_product(i, jj);
      if (cell.empty()) continue;
      ordered_json entry;
      entry["left"] = i + 1;
      entry["right"] = jj + 1;
      ordered_json out;
      for (const auto& [k, c] : cell) out[std::to_string(k + 1)] = c.str();
      entry["out"] = std::move(out);
      products.push_back(std::move(entry));
    }
  }
  j["products"] = std::move(products);
  return j;
}

Algebra Algebra::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw parse_error("invalid JSON in '" + path + "': " + ex.what());
  }
  return from_json(j);
}

}  // namespace alglen
