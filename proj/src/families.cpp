#include "alglen/families.hpp"

#include <map>

#include "alglen/errors.hpp"

namespace alglen {

namespace {

std::vector<std::string> x_names(int d) {
  std::vector<std::string> out;
  for (int i = 1; i <= d; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<std::string> e_names(int d, int first = 1) {
  std::vector<std::string> out;
  for (int i = first; i < first + d; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

void require_d(const FamilySpec& spec, int min_d, const std::string& name) {
  if (spec.d < min_d) {
    throw validation_error(name + " needs d >= " + std::to_string(min_d));
  }
}

Scalar one(const Field& f) { return Scalar::one(f); }

}  // namespace

Algebra make(const FamilySpec& spec) {
  const Field& f = spec.field;
  std::vector<ProductEntry> e;

  switch (spec.family) {
    case Family::leibniz_B: {
      require_d(spec, 3, "leibniz_B");
      for (int i = 0; i + 1 < spec.d; ++i) e.push_back({i, 0, i + 1, one(f)});
      return Algebra("B_" + std::to_string(spec.d), f, spec.d, std::move(e), x_names(spec.d));
    }
    case Family::filiform_A: {
      require_d(spec, 3, "filiform_A");
      for (int i = 1; i + 1 < spec.d; ++i) {
        e.push_back({0, i, i + 1, one(f)});
        e.push_back({i, 0, i + 1, -one(f)});
      }
      return Algebra("A_" + std::to_string(spec.d), f, spec.d, std::move(e), x_names(spec.d));
    }
    case Family::novikov_C: {
      require_d(spec, 3, "novikov_C");
      for (int i = 0; i + 1 < spec.d; ++i) e.push_back({0, i, i + 1, one(f)});
      return Algebra("C_" + std::to_string(spec.d), f, spec.d, std::move(e), x_names(spec.d));
    }
    case Family::novikov_C4: {
      e = {{0, 0, 1, one(f)}, {0, 1, 2, one(f)}, {1, 0, 3, one(f)}};
      return Algebra("C4", f, 4, std::move(e), x_names(4));
    }
    case Family::zinbiel_Z: {
      require_d(spec, 3, "zinbiel_Z");
      if (!f.is_rational() && f.p <= static_cast<std::uint64_t>(spec.d)) {
        throw validation_error("zinbiel_Z needs the coefficients j/(i+j); modulus " +
                               std::to_string(f.p) + " divides some i+j <= d");
      }
      for (int i = 1; i <= spec.d; ++i) {
        for (int j = 1; i + j <= spec.d; ++j) {
          Scalar c = Scalar::of_int(f, j) / Scalar::of_int(f, i + j);
          e.push_back({i - 1, j - 1, i + j - 1, c});
        }
      }
      return Algebra("Z_" + std::to_string(spec.d), f, spec.d, std::move(e), x_names(spec.d));
    }
    case Family::zinbiel_Z5: {
      e = {{0, 1, 3, one(f)}, {1, 0, 3, -one(f)}, {3, 2, 4, one(f)}};
      return Algebra("Z5", f, 5, std::move(e), x_names(5));
    }
    case Family::bare_01245: {
      // e0 is the unit; its products must be materialized
      for (int i = 0; i < 5; ++i) {
        e.push_back({0, i, i, one(f)});
        if (i > 0) e.push_back({i, 0, i, one(f)});
      }
      e.push_back({1, 1, 2, one(f)});
      e.push_back({2, 2, 3, one(f)});
      e.push_back({1, 3, 4, one(f)});
      return Algebra("bare_01245", f, 5, std::move(e), e_names(5, 0));
    }
    case Family::vinberg_R4: {
      e = {{0, 0, 1, one(f)}, {0, 1, 2, one(f)}, {2, 1, 3, one(f)}};
      return Algebra("R4", f, 4, std::move(e), e_names(4));
    }
    case Family::valya_V6: {
      for (int i = 0; i + 2 < 6; ++i) {
        e.push_back({i, i + 1, i + 2, one(f)});
        e.push_back({i + 1, i, i + 2, -one(f)});
      }
      return Algebra("V6", f, 6, std::move(e), e_names(6));
    }
    case Family::r_ended_E: {
      if (spec.r < 2) throw validation_error("r_ended_E needs r >= 2");
      if (spec.d < spec.r) throw validation_error("r_ended_E needs d >= r");
      for (int j = 1; j <= spec.r - 2; ++j) e.push_back({j - 1, 0, j, one(f)});
      for (int i = spec.r - 1; i <= spec.d - 1; ++i) {
        e.push_back({i - 1, spec.r - 2, i, one(f)});
      }
      return Algebra("E_" + std::to_string(spec.d) + "^" + std::to_string(spec.r), f, spec.d,
                     std::move(e), x_names(spec.d));
    }
    case Family::coordinatewise: {
      require_d(spec, 1, "coordinatewise");
      for (int i = 0; i < spec.d; ++i) e.push_back({i, i, i, one(f)});
      return Algebra("F^" + std::to_string(spec.d), f, spec.d, std::move(e), e_names(spec.d));
    }
    case Family::matrix_full: {
      require_d(spec, 1, "matrix_full");
      const int n = spec.d;
      auto idx = [n](int i, int j) { return i * n + j; };
      std::vector<std::string> names;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
      }
      // E_ij E_kl = delta_jk E_il
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          for (int l = 0; l < n; ++l) {
            e.push_back({idx(i, j), idx(j, l), idx(i, l), one(f)});
          }
        }
      }
      return Algebra("M_" + std::to_string(n), f, n * n, std::move(e), std::move(names));
    }
  }
  throw validation_error("unknown family");
}

namespace {

const std::map<std::string, Family>& family_table() {
  static const std::map<std::string, Family> table = {
      {"leibniz_B", Family::leibniz_B},   {"filiform_A", Family::filiform_A},
      {"novikov_C", Family::novikov_C},   {"novikov_C4", Family::novikov_C4},
      {"zinbiel_Z", Family::zinbiel_Z},   {"zinbiel_Z5", Family::zinbiel_Z5},
      {"bare_01245", Family::bare_01245}, {"vinberg_R4", Family::vinberg_R4},
      {"valya_V6", Family::valya_V6},     {"r_ended_E", Family::r_ended_E},
      {"coordinatewise", Family::coordinatewise}, {"matrix_full", Family::matrix_full},
  };
  return table;
}

}  // namespace

Family family_from_string(const std::string& name) {
  auto it = family_table().find(name);
  if (it == family_table().end()) throw validation_error("unknown family '" + name + "'");
  return it->second;
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : family_table()) out.push_back(name);
  return out;
}

std::string family_class(Family f) {
  switch (f) {
    case Family::leibniz_B:
      return "leibniz";
    case Family::filiform_A:
      return "lie";
    case Family::novikov_C:
    case Family::novikov_C4:
      return "novikov";
    case Family::zinbiel_Z:
    case Family::zinbiel_Z5:
      return "zinbiel";
    case Family::vinberg_R4:
      return "vinberg";
    case Family::valya_V6:
      return "valya";
    case Family::coordinatewise:
    case Family::matrix_full:
      return "associative";
    case Family::bare_01245:
      return "";
    case Family::r_ended_E:
      return "";
  }
  return "";
}

}  // namespace alglen
