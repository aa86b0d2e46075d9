#include "alglen/linalg.hpp"

#include <algorithm>

#include "alglen/errors.hpp"

namespace alglen {

Vec zero_vector(const Field& f, int dim) {
  return Vec(static_cast<std::size_t>(dim), Scalar::zero(f));
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool same_shape(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  return a.front().field() == b.front().field();
}

Vec add(const Vec& a, const Vec& b) {
  if (!same_shape(a, b)) throw dimension_mismatch("vector shape mismatch in add");
  Vec out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec negate(const Vec& a) {
  Vec out = a;
  for (auto& s : out) s = -s;
  return out;
}

Vec scale(const Scalar& a, const Vec& v) {
  Vec out = v;
  for (auto& s : out) s *= a;
  return out;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (!same_shape(y, x)) throw dimension_mismatch("vector shape mismatch in axpy");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

std::string vec_str(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

Subspace::Subspace(Field field, int ambient_dim) : field_(field), ambient_(ambient_dim) {
  if (ambient_dim < 0) throw dimension_mismatch("negative ambient dimension");
}

void Subspace::require_compatible(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) {
    throw dimension_mismatch("vector length " + std::to_string(v.size()) +
                             " does not match ambient dimension " + std::to_string(ambient_));
  }
  for (const auto& s : v) {
    if (s.field() != field_) throw dimension_mismatch("mixed fields in subspace operation");
  }
}

Vec Subspace::reduce(const Vec& v) const {
  require_compatible(v);
  Vec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = r[static_cast<std::size_t>(pivots_[i])];
    if (!c.is_zero()) axpy(r, -c, rows_[i]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::add_row(const Vec& v) {
  Vec r = reduce(v);
  int pivot = -1;
  for (int i = 0; i < ambient_; ++i) {
    if (!r[static_cast<std::size_t>(i)].is_zero()) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) return false;

  // normalize the new row, clear its pivot column from the old rows,
  // and insert keeping pivots sorted
  Scalar lead = r[static_cast<std::size_t>(pivot)];
  for (auto& s : r) s = s / lead;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = rows_[i][static_cast<std::size_t>(pivot)];
    if (!c.is_zero()) axpy(rows_[i], -c, r);
  }
  auto it = std::upper_bound(pivots_.begin(), pivots_.end(), pivot);
  std::size_t at = static_cast<std::size_t>(it - pivots_.begin());
  pivots_.insert(it, pivot);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(r));
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return field_ == o.field_ && ambient_ == o.ambient_ && pivots_ == o.pivots_ && rows_ == o.rows_;
}

std::pair<Subspace, bool> extend(const Subspace& s, const Vec& v) {
  Subspace out = s;
  bool added = out.add_row(v);
  return {std::move(out), added};
}

std::pair<Subspace, int> rref(const std::vector<Vec>& rows) {
  if (rows.empty()) throw dimension_mismatch("rref of an empty row list");
  const Vec& first = rows.front();
  if (first.empty()) throw dimension_mismatch("rref of zero-width rows");
  Subspace s(first.front().field(), static_cast<int>(first.size()));
  for (const auto& r : rows) s.add_row(r);
  int rank = s.dim();
  return {std::move(s), rank};
}

Subspace span_of(const std::vector<Vec>& rows, const Field& f, int dim) {
  Subspace s(f, dim);
  for (const auto& r : rows) s.add_row(r);
  return s;
}

std::optional<Vec> solve(const std::vector<Vec>& rows, const Vec& rhs) {
  if (rows.size() != rhs.size()) throw dimension_mismatch("solve: row/rhs count mismatch");
  if (rows.empty()) throw dimension_mismatch("solve: empty system");
  const std::size_t n = rows.front().size();
  const Field f = rhs.empty() ? rows.front().front().field() : rhs.front().field();

  // reduced echelon form of the augmented matrix [rows | rhs]
  Subspace aug(f, static_cast<int>(n) + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw dimension_mismatch("solve: ragged rows");
    Vec row = rows[i];
    row.push_back(rhs[i]);
    aug.add_row(row);
  }

  Vec x = zero_vector(f, static_cast<int>(n));
  for (int i = 0; i < aug.dim(); ++i) {
    int p = aug.pivots()[static_cast<std::size_t>(i)];
    if (p == static_cast<int>(n)) return std::nullopt;  // 0 = 1 row: inconsistent
    x[static_cast<std::size_t>(p)] = aug.rows()[static_cast<std::size_t>(i)][n];
  }
  return x;
}

}  // namespace alglen
