#pragma once

#include <string>
#include <vector>

#include "alglen/algebra.hpp"

namespace alglen {

// Built-in constructors for the named algebra families used throughout
// the tests and the CLI `example` command.
enum class Family {
  leibniz_B,       // x_i x_1 = x_{i+1}
  filiform_A,      // filiform Lie: x_1 x_i = x_{i+1} = -x_i x_1
  novikov_C,       // x_1 x_i = x_{i+1}
  novikov_C4,      // dim 4: x1x1=x2, x1x2=x3, x2x1=x4
  zinbiel_Z,       // x_i x_j = (j/(i+j)) x_{i+j}
  zinbiel_Z5,      // dim 5: x1x2=x4=-x2x1, x4x3=x5
  bare_01245,      // unital dim 5: e1e1=e2, e2e2=e3, e1e3=e4
  vinberg_R4,      // dim 4: e1e1=e2, e1e2=e3, e3e2=e4
  valya_V6,        // dim 6 anticommutative chain e_i e_{i+1} = e_{i+2}
  r_ended_E,       // x_j x_1 = x_{j+1} (j<r-1); x_i x_{r-1} = x_{i+1}
  coordinatewise,  // e_i e_i = e_i (unital)
  matrix_full,     // full matrix algebra on n x n matrix units
};

struct FamilySpec {
  Family family;
  int d = 0;  // dimension parameter (matrix_full: the matrix size n)
  int r = 0;  // r_ended_E only
  Field field = Field::rationals();
};

Algebra make(const FamilySpec& spec);

Family family_from_string(const std::string& name);
std::vector<std::string> family_names();

// The class whose identities the family satisfies ("leibniz", "lie", ...),
// empty for r_ended_E.
std::string family_class(Family f);

}  // namespace alglen
