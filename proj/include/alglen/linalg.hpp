#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alglen/scalar.hpp"

namespace alglen {

using Vec = std::vector<Scalar>;

Vec zero_vector(const Field& f, int dim);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec negate(const Vec& a);
Vec scale(const Scalar& a, const Vec& v);
// y += a * x
void axpy(Vec& y, const Scalar& a, const Vec& x);
bool same_shape(const Vec& a, const Vec& b);
std::string vec_str(const Vec& v);

// A linear subspace of F^dim held as a reduced row-echelon basis. The
// representation is canonical: equal subspaces have identical rows, so
// operator== decides subspace equality structurally.
class Subspace {
 public:
  Subspace(Field field, int ambient_dim);

  const Field& field() const { return field_; }
  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Residue of v modulo the subspace (v minus its projection onto the
  // pivot coordinates). Zero iff v is a member.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;

  // In-place basis extension; returns true iff v was outside the span.
  // Keeps the reduced-echelon form canonical.
  bool add_row(const Vec& v);

  bool operator==(const Subspace& o) const;

 private:
  Field field_;
  int ambient_;
  std::vector<Vec> rows_;   // pivot columns strictly increasing, pivot = 1
  std::vector<int> pivots_;

  void require_compatible(const Vec& v) const;
};

// Pure-function flavour of Subspace::add_row.
std::pair<Subspace, bool> extend(const Subspace& s, const Vec& v);

// Canonical reduced echelon form of the span of the given rows.
// The rows must be nonempty and share field and length.
std::pair<Subspace, int> rref(const std::vector<Vec>& rows);
Subspace span_of(const std::vector<Vec>& rows, const Field& f, int dim);

// One exact solution of the linear system rows * x = rhs (rows are the
// equations), or nullopt if inconsistent. Deterministic: free variables
// are set to zero.
std::optional<Vec> solve(const std::vector<Vec>& rows, const Vec& rhs);

}  // namespace alglen
