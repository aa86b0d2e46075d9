#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "alglen/linalg.hpp"
#include "alglen/word.hpp"

namespace alglen {

// One nonzero structure constant: e_left * e_right has `coeff` at e_out.
// Indices are 0-based in memory; files and reports use 1-based.
struct ProductEntry {
  int left;
  int right;
  int out;
  Scalar coeff;
};

// A finite-dimensional algebra given by structure constants over an
// exact field. Immutable after construction; the unit (if any) is
// detected eagerly and cached.
class Algebra {
 public:
  Algebra(std::string name, Field field, int dim, std::vector<ProductEntry> entries,
          std::vector<std::string> basis_names = {});

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const Field& field() const { return field_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::string& basis_name(int i) const { return names_[static_cast<std::size_t>(i)]; }

  // Nonzero components of e_i * e_j, sorted by output index.
  std::span<const std::pair<int, Scalar>> basis_product(int i, int j) const;

  Vec basis_vector(int i) const;
  Vec zero() const { return zero_vector(field_, dim_); }

  // The bilinear product of two coordinate vectors.
  Vec multiply(const Vec& u, const Vec& v) const;

  // Recursive evaluation: leaf i maps to assignment[i].
  Vec evaluate_word(const Word& w, std::span<const Vec> assignment) const;

  bool is_unital() const { return unit_.has_value(); }
  const std::optional<Vec>& unit() const { return unit_; }

  // Same space with the product [x,y] = xy - yx; name gains "^(-)".
  Algebra commutator_algebra() const;

  // All nonzero structure constants in (left, right, out) order.
  std::vector<ProductEntry> entries() const;
  int entry_count() const;

  static Algebra from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;
  static Algebra load_file(const std::string& path);

 private:
  std::string name_;
  Field field_;
  int dim_;
  std::vector<std::string> names_;
  // table_[i*dim + j] lists the nonzero (out, coeff) pairs of e_i * e_j
  std::vector<std::vector<std::pair<int, Scalar>>> table_;
  std::optional<Vec> unit_;

  void detect_unit();
  void require_vector(const Vec& v) const;
};

}  // namespace alglen
