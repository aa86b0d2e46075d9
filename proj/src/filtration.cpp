#include "alglen/filtration.hpp"

#include <algorithm>
#include <map>

namespace alglen {

GenSet GenSet::of(std::vector<Vec> vectors, std::vector<std::string> labels) {
  GenSet s;
  s.vectors = std::move(vectors);
  if (labels.empty()) {
    for (std::size_t i = 1; i <= s.vectors.size(); ++i) labels.push_back("g" + std::to_string(i));
  }
  if (labels.size() != s.vectors.size()) {
    throw validation_error("generator label count does not match vector count");
  }
  s.labels = std::move(labels);
  return s;
}

namespace {

int resolve_basis_token(const std::string& token, const Algebra& a) {
  for (int i = 0; i < a.dim(); ++i) {
    if (a.basis_name(i) == token) return i;
  }
  // positional fallback: eK means the K-th basis vector
  if (token.size() >= 2 && token[0] == 'e') {
    try {
      std::size_t used = 0;
      int k = std::stoi(token.substr(1), &used);
      if (used == token.size() - 1 && k >= 1 && k <= a.dim()) return k - 1;
    } catch (const std::exception&) {
    }
  }
  throw parse_error("unknown basis element '" + token + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

GenSet GenSet::parse(const std::string& text, const Algebra& a) {
  std::string t = trim(text);
  if (t.empty()) throw parse_error("empty generating-set spec");
  GenSet s;
  s.spec_text = t;
  if (t[0] == '@') {
    std::string body = t.substr(1);
    if (body == "basis") {
      for (int i = 0; i < a.dim(); ++i) {
        s.vectors.push_back(a.basis_vector(i));
        s.labels.push_back(a.basis_name(i));
      }
      return s;
    }
    for (const auto& raw : split(body, ',')) {
      std::string token = trim(raw);
      if (token.empty()) throw parse_error("empty basis token in '" + text + "'");
      int idx = resolve_basis_token(token, a);
      s.vectors.push_back(a.basis_vector(idx));
      s.labels.push_back(a.basis_name(idx));
    }
    return s;
  }
  int n = 0;
  for (const auto& vec_text : split(t, ';')) {
    auto coords = split(vec_text, ',');
    if (static_cast<int>(coords.size()) != a.dim()) {
      throw parse_error("vector '" + trim(vec_text) + "' does not have " +
                        std::to_string(a.dim()) + " coordinates");
    }
    Vec v;
    for (const auto& c : coords) v.push_back(Scalar::parse(c, a.field()));
    s.vectors.push_back(std::move(v));
    s.labels.push_back("g" + std::to_string(++n));
  }
  return s;
}

std::string Witness::word_str(const GenSet& s) const {
  if (!word) return "1";
  return word->str([&](int i) { return s.label(i); });
}

int FiltrationTrace::final_dim() const { return levels.empty() ? 0 : levels.back().dim; }

int FiltrationTrace::dim_at(int level) const {
  int dim = 0;
  for (const auto& rec : levels) {
    if (rec.level > level) break;
    dim = rec.dim;
  }
  return dim;
}

std::vector<int> FiltrationTrace::char_seq() const {
  std::vector<int> seq;
  for (const auto& rec : levels) {
    for (int i = 0; i < rec.added; ++i) seq.push_back(rec.level);
  }
  return seq;
}

const Subspace& FiltrationTrace::final_space() const {
  if (level_spaces.empty()) throw error("empty filtration trace");
  return level_spaces.back();
}

FiltrationTrace filtrate(const Algebra& a, const GenSet& s) {
  if (s.vectors.empty()) throw validation_error("empty generating set");
  const int d = a.dim();

  FiltrationTrace t;
  t.unital = a.is_unital();
  t.ambient_dim = d;

  Subspace space(a.field(), d);
  // witness indices grouped by exact word length
  std::map<int, std::vector<std::size_t>> by_length;

  auto record = [&](int level, int added) {
    t.levels.push_back({level, space.dim(), added});
    t.level_spaces.push_back(space);
    if (added > 0) t.stabilized_at = level;
    if (!t.length && space.dim() == d) {
      t.generating = true;
      t.length = level;
    }
  };

  // L_0: the span of the unit for unital algebras, {0} otherwise
  int added = 0;
  if (a.is_unital()) {
    space.add_row(*a.unit());
    t.witnesses.push_back({std::nullopt, *a.unit(), 0});
    added = 1;
  }
  record(0, added);

  // L_1: add the generators themselves
  added = 0;
  for (std::size_t g = 0; g < s.vectors.size(); ++g) {
    const Vec& v = s.vectors[g];
    if (static_cast<int>(v.size()) != d) {
      throw dimension_mismatch("generator " + s.label(static_cast<int>(g)) +
                               " does not match the algebra dimension");
    }
    for (const auto& entry : v) {
      if (entry.field() != a.field()) {
        throw dimension_mismatch("generator " + s.label(static_cast<int>(g)) +
                                 " does not match the algebra field");
      }
    }
    if (is_zero(v)) continue;  // zero generators add nothing
    if (space.add_row(v)) {
      by_length[1].push_back(t.witnesses.size());
      t.witnesses.push_back({Word::leaf(static_cast<int>(g)), v, 1});
      ++added;
    }
  }
  record(1, added);

  // Level k >= 2: candidates are products of witnesses whose exact
  // lengths sum to k. Levels with no such pair cannot grow and are
  // skipped; the iteration ends when no pair sums beyond the current
  // level (every product has been tried) or the space is full.
  int k = 1;
  while (!t.length) {
    int next_k = 0;
    for (const auto& [len_a, _] : by_length) {
      for (const auto& [len_b, __] : by_length) {
        int sum = len_a + len_b;
        if (sum > k && (next_k == 0 || sum < next_k)) next_k = sum;
      }
    }
    if (next_k == 0) break;
    k = next_k;
    added = 0;
    for (int i = 1; i < k; ++i) {
      auto it_l = by_length.find(i);
      auto it_r = by_length.find(k - i);
      if (it_l == by_length.end() || it_r == by_length.end()) continue;
      for (std::size_t ui : it_l->second) {
        for (std::size_t vi : it_r->second) {
          Vec prod = a.multiply(t.witnesses[ui].value, t.witnesses[vi].value);
          if (is_zero(prod) || !space.add_row(prod)) continue;
          by_length[k].push_back(t.witnesses.size());
          t.witnesses.push_back(
              {Word::product(*t.witnesses[ui].word, *t.witnesses[vi].word), std::move(prod), k});
          ++added;
        }
      }
    }
    record(k, added);
  }

  return t;
}

std::optional<int> length_of_set(const Algebra& a, const GenSet& s) {
  return filtrate(a, s).length;
}

std::vector<int> characteristic_sequence(const Algebra& a, const GenSet& s) {
  FiltrationTrace t = filtrate(a, s);
  if (!t.generating) {
    throw not_generating("set does not generate: filtration stabilized at dimension " +
                             std::to_string(t.final_dim()) + " of " +
                             std::to_string(t.ambient_dim),
                         t.char_seq(), t.final_dim());
  }
  return t.char_seq();
}

std::vector<Witness> irreducible_basis(const Algebra& a, const GenSet& s) {
  return filtrate(a, s).witnesses;
}

long long catalan(int n) {
  // C_0..C_30 fit comfortably in 64 bits
  if (n < 0 || n > 30) throw budget_exceeded("Catalan number index out of supported range");
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::vector<int> oracle_filtrate(const Algebra& a, const GenSet& s, int k_max,
                                 long long word_guard) {
  if (s.vectors.empty()) throw validation_error("empty generating set");
  if (k_max < 1) throw validation_error("k_max must be at least 1");

  const long long n_gen = static_cast<long long>(s.vectors.size());
  long long total = 0;
  long long power = 1;
  for (int k = 1; k <= k_max; ++k) {
    if (power > word_guard / n_gen) {
      throw budget_exceeded("word enumeration guard exceeded");
    }
    power *= n_gen;
    long long words_k;
    if (__builtin_mul_overflow(catalan(k - 1), power, &words_k) || words_k > word_guard) {
      throw budget_exceeded("word enumeration guard exceeded");
    }
    total += words_k;
    if (total > word_guard) throw budget_exceeded("word enumeration guard exceeded");
  }

  // every word value of each length, built bottom-up
  std::vector<std::vector<Vec>> words(static_cast<std::size_t>(k_max) + 1);
  for (const auto& v : s.vectors) {
    if (static_cast<int>(v.size()) != a.dim()) {
      throw dimension_mismatch("generator does not match the algebra dimension");
    }
    words[1].push_back(v);
  }
  for (int k = 2; k <= k_max; ++k) {
    for (int i = 1; i < k; ++i) {
      for (const auto& u : words[static_cast<std::size_t>(i)]) {
        for (const auto& v : words[static_cast<std::size_t>(k - i)]) {
          words[static_cast<std::size_t>(k)].push_back(a.multiply(u, v));
        }
      }
    }
  }

  std::vector<int> dims(static_cast<std::size_t>(k_max) + 1, 0);
  Subspace space(a.field(), a.dim());
  if (a.is_unital()) space.add_row(*a.unit());
  dims[0] = space.dim();
  for (int k = 1; k <= k_max; ++k) {
    for (const auto& v : words[static_cast<std::size_t>(k)]) space.add_row(v);
    dims[static_cast<std::size_t>(k)] = space.dim();
  }
  return dims;
}

}  // namespace alglen
