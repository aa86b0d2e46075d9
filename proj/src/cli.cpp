#include "alglen/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "alglen/families.hpp"
#include "alglen/report.hpp"

namespace alglen::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240614;

long long env_budget() {
  if (const char* env = std::getenv("ALGLEN_BUDGET")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw parse_error("ALGLEN_BUDGET is not an integer");
    }
  }
  return kDefaultEvalBudget;
}

Field parse_field_arg(const std::string& text) {
  if (text == "rational") return Field::rationals();
  try {
    std::size_t used = 0;
    unsigned long long p = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return Field::prime(p);
  } catch (const validation_error&) {
    throw;
  } catch (const std::exception&) {
    throw parse_error("--field expects 'rational' or a prime modulus");
  }
}

std::string verdict_text(const IdentityVerdict& v, const Algebra& a) {
  if (v.holds) return "Holds";
  std::string out = "Counterexample: " + v.failure->identity + " fails at (";
  for (std::size_t i = 0; i < v.failure->tuple.size(); ++i) {
    if (i) out += ", ";
    out += a.basis_name(v.failure->tuple[i]);
  }
  out += "), defect " + vec_str(v.failure->defect);
  return out;
}

void print_property(std::ostream& out, const std::string& label, const PropertyResult& p,
                    const Algebra& a) {
  out << label << ": " << verdict_name(p.verdict) << "\n";
  for (const auto& c : p.certificates) {
    out << "  certificate over " << mon_set_name(c.set) << ": " << c.equation() << "\n";
  }
  if (p.refutation) {
    const auto& r = *p.refutation;
    out << "  refuting triple for " << target_spelling(r.target) << " over "
        << mon_set_name(r.set);
    if (r.basis_triple) {
      out << " at (";
      for (std::size_t i = 0; i < 3; ++i) {
        out << (i ? ", " : "") << a.basis_name((*r.basis_triple)[i]);
      }
      out << ")";
    }
    out << ": value " << vec_str(r.target_value) << " escapes a span of dimension "
        << r.span_dim << "\n";
  }
}

struct CommonOptions {
  bool json = false;
  long long budget = 0;
  int threads = 1;  // accepted for compatibility; orchestration is sequential
};

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"alglen: exact lengths, characteristic sequences, and span"
               " certificates for finite-dimensional algebras"};
  app.require_subcommand(1);

  CommonOptions common;
  common.budget = env_budget();
  app.add_flag("--json", common.json, "emit JSON reports");
  app.add_option("--budget", common.budget, "evaluation budget for identity checks");
  app.add_option("--threads", common.threads, "accepted for compatibility (single-threaded)");

  // info
  auto* info = app.add_subcommand("info", "describe an algebra file");
  std::string info_file;
  info->add_option("file", info_file, "algebra JSON file")->required();

  // check
  auto* check = app.add_subcommand("check", "verify a polynomial identity class");
  std::string check_file, check_identity_name, check_identity_file;
  int check_r = 0;
  check->add_option("file", check_file, "algebra JSON file")->required();
  auto* opt_name = check->add_option("--identity", check_identity_name,
                                     "builtin class: associative, commutative, anticommutative, "
                                     "lie, leibniz, novikov, zinbiel, vinberg, valya");
  auto* opt_file = check->add_option("--identity-file", check_identity_file,
                                     "JSON file with a custom multilinear identity");
  auto* opt_r = check->add_option("--r-ended", check_r, "check x*(y1...yr) = 0 for this r");
  opt_name->excludes(opt_file)->excludes(opt_r);
  opt_file->excludes(opt_r);

  // length
  auto* length = app.add_subcommand("length", "length and characteristic sequence of a set");
  std::string length_file, length_set;
  length->add_option("file", length_file, "algebra JSON file")->required();
  length->add_option("--set", length_set, "generating set spec")->required();

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "sliding/mixing certificates and bounds");
  std::string classify_file;
  int classify_random = 0;
  std::uint64_t classify_seed = kDefaultSeed;
  classify_cmd->add_option("file", classify_file, "algebra JSON file")->required();
  classify_cmd->add_option("--random-triples", classify_random,
                           "extra seeded random triples in refutation scans");
  classify_cmd->add_option("--seed", classify_seed, "seed for random triples");

  // search
  auto* search_cmd = app.add_subcommand("search", "maximize l(S) over candidate sets");
  std::string search_file, search_sizes = "1..2", search_candidates;
  int search_subset = 2, search_random = 0;
  std::uint64_t search_seed = kDefaultSeed;
  bool search_bounds = false;
  search_cmd->add_option("file", search_file, "algebra JSON file")->required();
  search_cmd->add_option("--max-subset", search_subset, "basis subsets up to this size");
  search_cmd->add_option("--random", search_random, "number of seeded random sets");
  search_cmd->add_option("--set-size", search_sizes, "random set size range a..b");
  search_cmd->add_option("--seed", search_seed, "seed for random sets");
  search_cmd->add_option("--candidates", search_candidates,
                         "file with one generating-set spec per line");
  search_cmd->add_flag("--with-bounds", search_bounds,
                       "derive a certified upper bound and the exactness flag");

  // example
  auto* example = app.add_subcommand("example", "emit a built-in algebra file");
  std::string example_family, example_out, example_field = "rational";
  int example_d = 0, example_r = 0;
  example->add_option("family", example_family,
                      "one of: " + [] {
                        std::string s;
                        for (const auto& n : family_names()) s += (s.empty() ? "" : ", ") + n;
                        return s;
                      }())
      ->required();
  example->add_option("--d", example_d, "dimension parameter (matrix_full: matrix size)");
  example->add_option("--r", example_r, "r parameter (r_ended_E)");
  example->add_option("--field", example_field, "rational or a prime modulus");
  example->add_option("-o,--output", example_out, "output file (default stdout)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "compare the filtration against brute-force words");
  std::string oracle_file, oracle_set;
  int oracle_kmax = 0;
  oracle->add_option("file", oracle_file, "algebra JSON file")->required();
  oracle->add_option("--set", oracle_set, "generating set spec")->required();
  oracle->add_option("--kmax", oracle_kmax, "enumerate words up to this length")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  if (info->parsed()) {
    Algebra a = Algebra::load_file(info_file);
    if (common.json) {
      ordered_json j;
      j["command"] = "info";
      j["algebra"] = fingerprint_json(a);
      j["basis"] = a.basis_names();
      j["products"] = a.to_json()["products"];
      out << j.dump(2) << "\n";
    } else {
      out << a.name() << ": dim " << a.dim() << " over " << a.field().str()
          << (a.is_unital() ? ", unital, unit " + vec_str(*a.unit()) : ", not unital") << "\n";
      // one line per (left, right) pair: "e1*e2 = e3 - 2*e4"
      for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
          auto cell = a.basis_product(i, j);
          if (cell.empty()) continue;
          out << "  " << a.basis_name(i) << "*" << a.basis_name(j) << " =";
          bool first = true;
          for (const auto& [k, c] : cell) {
            std::string cs = c.str();
            if (first) {
              out << " " << (cs == "1" ? "" : cs == "-1" ? "-" : cs + "*");
            } else if (!cs.empty() && cs[0] == '-') {
              out << " - " << (cs == "-1" ? "" : cs.substr(1) + "*");
            } else {
              out << " + " << (cs == "1" ? "" : cs + "*");
            }
            out << a.basis_name(k);
            first = false;
          }
          out << "\n";
        }
      }
    }
    return kExitOk;
  }

  if (check->parsed()) {
    Algebra a = Algebra::load_file(check_file);
    IdentityVerdict v;
    std::string what;
    if (!check_identity_name.empty()) {
      what = check_identity_name;
      v = check_class(a, check_identity_name, common.budget);
    } else if (!check_identity_file.empty()) {
      std::ifstream in(check_identity_file);
      if (!in) throw parse_error("cannot open '" + check_identity_file + "'");
      nlohmann::json j;
      in >> j;
      MultilinearIdentity id = MultilinearIdentity::from_json(j);
      what = id.name + " (" + id.str() + ")";
      v = check_identity(a, id, common.budget);
    } else if (check_r > 0) {
      what = "r-ended, r = " + std::to_string(check_r);
      v = check_r_ended(a, check_r, common.budget);
    } else {
      err << "error: one of --identity, --identity-file, --r-ended is required\n";
      return kExitInput;
    }
    if (common.json) {
      ordered_json j;
      j["command"] = "check";
      j["algebra"] = fingerprint_json(a);
      j["check"] = what;
      j.update(verdict_json(v, a));
      out << j.dump(2) << "\n";
    } else {
      out << a.name() << " | " << what << ": " << verdict_text(v, a) << "\n";
    }
    return v.holds ? kExitOk : kExitRefuted;
  }

  if (length->parsed()) {
    Algebra a = Algebra::load_file(length_file);
    GenSet s = GenSet::parse(length_set, a);
    FiltrationTrace t = filtrate(a, s);
    if (common.json) {
      ordered_json j;
      j["command"] = "length";
      j["algebra"] = fingerprint_json(a);
      j["set"] = length_set;
      j.update(trace_json(t, s));
      out << j.dump(2) << "\n";
    } else {
      out << a.name() << " | set " << length_set << "\n";
      if (t.generating) {
        out << "length " << *t.length << "\n";
      } else {
        out << "not generating: stabilized at dimension " << t.final_dim() << " of "
            << t.ambient_dim << "\n";
      }
      out << "char seq ";
      auto seq = t.char_seq();
      for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? "," : "") << seq[i];
      out << (t.generating ? "" : " (partial)") << "\n";
      for (const auto& w : t.witnesses) {
        out << "  length " << w.length << ": " << w.word_str(s) << " = " << vec_str(w.value)
            << "\n";
      }
    }
    return t.generating ? kExitOk : kExitRefuted;
  }

  if (classify_cmd->parsed()) {
    Algebra a = Algebra::load_file(classify_file);
    ClassifyConfig cfg{classify_random, classify_seed};
    ClassificationReport report = classify(a, cfg);
    BoundEvidence ev = gather_bound_evidence(a, report, common.budget);
    auto bounds = applicable_bounds(ev);
    auto best = length_upper_bound(ev);
    if (common.json) {
      ordered_json j;
      j["command"] = "classify";
      j["algebra"] = fingerprint_json(a);
      j["seed"] = classify_seed;
      j["classification"] = classification_json(report, a);
      j["bounds"] = bounds_json(bounds, best);
      out << j.dump(2) << "\n";
    } else {
      out << a.name() << "\n";
      print_property(out, "mixing", report.mixing, a);
      print_property(out, "sliding item 1 (z(xy) over Q_r)", report.sliding_item1, a);
      print_property(out, "sliding item 2 ((xy)z over Q_l)", report.sliding_item2, a);
      out << "is_sliding: " << verdict_name(report.sliding_verdict()) << "\n";
      out << "is_mixing: " << verdict_name(report.mixing_verdict()) << "\n";
      if (best) {
        out << "length upper bound " << best->value << " (" << best->justification << ")\n";
      } else {
        out << "no certified upper bound\n";
      }
    }
    return kExitOk;
  }

  if (search_cmd->parsed()) {
    Algebra a = Algebra::load_file(search_file);
    SearchConfig cfg;
    cfg.max_subset_size = search_subset;
    cfg.random_sets = search_random;
    cfg.seed = search_seed;
    auto dots = search_sizes.find("..");
    if (dots == std::string::npos) throw parse_error("--set-size expects a..b");
    try {
      cfg.set_size_min = std::stoi(search_sizes.substr(0, dots));
      cfg.set_size_max = std::stoi(search_sizes.substr(dots + 2));
    } catch (const std::exception&) {
      throw parse_error("--set-size expects a..b");
    }
    if (!search_candidates.empty()) {
      std::ifstream in(search_candidates);
      if (!in) throw parse_error("cannot open '" + search_candidates + "'");
      std::string line;
      while (std::getline(in, line)) {
        std::string t = line;
        if (auto pos = t.find('#'); pos != std::string::npos) t = t.substr(0, pos);
        bool blank = t.find_first_not_of(" \t\r") == std::string::npos;
        if (!blank) cfg.candidates.push_back(GenSet::parse(t, a));
      }
    }
    std::optional<Bound> bound;
    if (search_bounds) {
      ClassificationReport report = classify(a, {0, search_seed});
      bound = length_upper_bound(gather_bound_evidence(a, report, common.budget));
    }
    SearchResult result = search_length(a, cfg, bound);
    if (common.json) {
      ordered_json j;
      j["command"] = "search";
      j["algebra"] = fingerprint_json(a);
      j["seed"] = search_seed;
      j.update(search_json(result));
      out << j.dump(2) << "\n";
    } else {
      out << a.name() << " | " << result.log.size() << " candidate sets\n";
      if (result.best_length) {
        out << "best length " << *result.best_length << " via " << result.witness_label << "\n";
      } else {
        out << "no generating candidate found\n";
      }
      if (result.bound) {
        out << "upper bound " << result.bound->value << " (" << result.bound->justification
            << ")\n";
      }
      out << "exact: " << (result.exact ? "yes" : "no") << "\n";
    }
    return kExitOk;
  }

  if (example->parsed()) {
    FamilySpec spec;
    spec.family = family_from_string(example_family);
    spec.d = example_d;
    spec.r = example_r;
    spec.field = parse_field_arg(example_field);
    Algebra a = make(spec);
    std::string text = a.to_json().dump(2) + "\n";
    if (example_out.empty()) {
      out << text;
    } else {
      std::ofstream f(example_out);
      if (!f) throw parse_error("cannot write '" + example_out + "'");
      f << text;
      out << "wrote " << a.name() << " to " << example_out << "\n";
    }
    return kExitOk;
  }

  if (oracle->parsed()) {
    Algebra a = Algebra::load_file(oracle_file);
    GenSet s = GenSet::parse(oracle_set, a);
    FiltrationTrace t = filtrate(a, s);
    std::vector<int> oracle_dims = oracle_filtrate(a, s, oracle_kmax);
    bool agree = true;
    for (int k = 0; k <= oracle_kmax; ++k) {
      if (t.dim_at(k) != oracle_dims[static_cast<std::size_t>(k)]) agree = false;
    }
    if (common.json) {
      ordered_json j;
      j["command"] = "oracle";
      j["algebra"] = fingerprint_json(a);
      j["set"] = oracle_set;
      j["k_max"] = oracle_kmax;
      ordered_json fast = ordered_json::array(), brute = ordered_json::array();
      for (int k = 0; k <= oracle_kmax; ++k) {
        fast.push_back(t.dim_at(k));
        brute.push_back(oracle_dims[static_cast<std::size_t>(k)]);
      }
      j["filtration_dims"] = std::move(fast);
      j["oracle_dims"] = std::move(brute);
      j["agree"] = agree;
      out << j.dump(2) << "\n";
    } else {
      out << a.name() << " | set " << oracle_set << " | k <= " << oracle_kmax << "\n";
      out << "level: filtration vs oracle\n";
      for (int k = 0; k <= oracle_kmax; ++k) {
        out << "  L_" << k << ": " << t.dim_at(k) << " vs "
            << oracle_dims[static_cast<std::size_t>(k)] << "\n";
      }
      out << (agree ? "agree" : "MISMATCH") << "\n";
    }
    return agree ? kExitOk : kExitRefuted;
  }

  err << "error: no subcommand\n";
  return kExitInput;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(args, out, err);
  } catch (const budget_exceeded& e) {
    err << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace alglen::cli
