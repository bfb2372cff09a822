// partmat: enumerate, count, compute and verify partition-matrix structures.

#include "partmat/partmat.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace partmat;

enum Exit { kOk = 0, kIdentityFailure = 1, kUsage = 2, kInvalidObject = 3, kDomainMismatch = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<int> env_max_n() {
  const char* v = std::getenv("PARTMAT_MAX_N");
  if (!v || !*v) return std::nullopt;
  try {
    std::size_t pos = 0;
    const int n = std::stoi(v, &pos);
    if (pos != std::string(v).size() || n < 1) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw UsageError(std::string("PARTMAT_MAX_N must be a positive integer, got \"") + v + "\"");
  }
}

void require_within_cap(int n) {
  if (auto cap = env_max_n(); cap && n > *cap)
    throw UsageError("n = " + std::to_string(n) + " exceeds PARTMAT_MAX_N = " + std::to_string(*cap));
}

const std::map<std::string, Family>& family_names() {
  static const std::map<std::string, Family> m = {
      {"is", Family::IS},         {"is-pattern", Family::IS_PATTERN}, {"pm", Family::PM},
      {"fm", Family::FM},         {"ippm", Family::IPPM},             {"ndpm", Family::NDPM},
      {"ndippm", Family::NDIPPM}, {"motzkin", Family::MOTZKIN},       {"dyck", Family::DYCK},
      {"gridpath", Family::GRIDPATH},
  };
  return m;
}

Strategy strategy_of(const std::string& s) { return s == "filter" ? Strategy::Filter : Strategy::Structural; }

// ---------------------------------------------------------------------------
// enumerate

std::string join(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return out;
}

std::string matrix_csv(const PartitionMatrix& p) {
  std::ostringstream s;
  s << p.weight() << ',' << p.dim() << ',' << inv(p) << ',' << semi_weight(p) << ',' << block_count(p) << ','
    << odd_count(p) << ',' << (is_improper(p) ? 1 : 0) << ',' << (is_nondecreasing(p) ? 1 : 0);
  return s.str();
}

template <class T, class Row>
void emit(Stream<T> stream, bool csv, const char* header, std::optional<long> limit, Row row) {
  if (csv) std::cout << header << '\n';
  long emitted = 0;
  while (auto x = stream.next()) {
    if (limit && emitted >= *limit) break;
    if (csv)
      std::cout << row(*x) << '\n';
    else
      std::cout << to_json(*x).dump() << '\n';
    ++emitted;
  }
}

void cmd_enumerate(const std::string& family, int n, const std::string& format, std::optional<long> limit,
                   const std::string& strategy) {
  require_within_cap(n);
  const bool csv = format == "csv";
  const char* matrix_header = "weight,dim,inv,v,blk,odd,improper,nondecreasing";
  const Strategy st = strategy_of(strategy);
  switch (family_names().at(family)) {
    case Family::IS:
    case Family::IS_PATTERN: {
      auto s = family == "is" ? inversion_sequences(n) : pattern_class(n);
      return emit(std::move(s), csv, "length,dist,pattern_class,e", limit, [](const InversionSequence& e) {
        return std::to_string(e.length()) + ',' + std::to_string(dist(e)) + ',' +
               (in_pattern_class(e) ? "1" : "0") + ',' + join(e.values(), ' ');
      });
    }
    case Family::PM: return emit(partition_matrices(n), csv, matrix_header, limit, matrix_csv);
    case Family::IPPM: return emit(improper_matrices(n, st), csv, matrix_header, limit, matrix_csv);
    case Family::NDPM: return emit(nondecreasing_matrices(n, false, st), csv, matrix_header, limit, matrix_csv);
    case Family::NDIPPM: return emit(nondecreasing_matrices(n, true, st), csv, matrix_header, limit, matrix_csv);
    case Family::FM:
      return emit(fishburn_matrices(n), csv, "weight,dim", limit, [](const FishburnMatrix& a) {
        return std::to_string(a.weight()) + ',' + std::to_string(a.dim());
      });
    case Family::MOTZKIN:
      return emit(motzkin_words(n), csv, "word,len,comp,level,up,down", limit, [](const MotzkinWord& m) {
        const MotzkinStats s = motzkin_stats(m);
        return m.word() + ',' + join({s.len, s.comp, s.level, s.up, s.down}, ',');
      });
    case Family::DYCK:
      return emit(dyck_words(n), csv, "word,semilen,touch", limit, [](const DyckWord& w) {
        return w.letters() + ',' + std::to_string(w.semilength()) + ',' + std::to_string(dyck_touch(w));
      });
    case Family::GRIDPATH:
      return emit(grid_paths(n), csv, "steps,dim,south,east,southeast,diag_south,diag_southeast", limit,
                  [](const GridPath& g) {
                    const GridPathStats s = grid_path_stats(g);
                    return g.letters() + ',' + join({g.dim(), s.south, s.east, s.southeast, s.diag_south, s.diag_southeast}, ',');
                  });
  }
}

// ---------------------------------------------------------------------------
// poly / series

void cmd_poly(const std::string& name, int n, const std::string& route) {
  require_within_cap(n);
  if (name == "s") {
    std::cout << to_json(route == "inv" ? s_poly_inv(n) : s_poly_fishburn(n), "q").dump() << '\n';
  } else if (name == "dist-rhs") {
    std::cout << to_json(dist_rhs_poly(n), "z").dump() << '\n';
  } else if (name == "eulerian") {
    std::cout << to_json(eulerian_poly(n), "x").dump() << '\n';
  } else if (name == "v-dist") {
    std::cout << to_json(v_dist_poly(n), "z").dump() << '\n';
  } else if (name == "dist") {
    std::cout << to_json(dist_poly(n), "z").dump() << '\n';
  }
}

int cmd_series(const std::string& name, int order) {
  if (auto cap = env_max_n(); cap && order > *cap) {
    std::cerr << "order clamped to PARTMAT_MAX_N = " << *cap << '\n';
    order = *cap;
  }
  SeriesReport r = name == "motzkin-stats" ? motzkin_stat_series(order)
                   : name == "ndippm-gf"   ? ndippm_gf_check(order)
                   : name == "ndpm-gf"     ? ndpm_gf_check(order)
                                           : lemma31_check(order);
  Json grades = Json::array();
  for (int k = 1; k <= order; ++k) grades.push_back(grade_to_string(r.primary(), k));
  Json residuals = Json::array();
  for (const auto& [label, s] : r.residuals)
    residuals.push_back({{"label", label}, {"status", s.is_zero() ? "zero" : "nonzero"}, {"series", to_json(s)}});
  Json out = {{"name", r.name},
              {"T", order},
              {"series", to_json(r.primary())},
              {"grades", grades},
              {"residuals", residuals},
              {"residual", r.all_zero() ? "zero" : "nonzero"}};
  std::cout << out.dump() << '\n';
  return r.all_zero() ? kOk : kIdentityFailure;
}

// ---------------------------------------------------------------------------
// apply

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file \"" + path + "\"");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json reduced_to_json(const ReducedMatrix& r) {
  Json cells = Json::array();
  for (const Cell& c : r.cells()) cells.push_back({{"row", c.row}, {"col", c.col}, {"set", c.elements}});
  std::vector<int> sizes(r.column_sizes().begin() + 1, r.column_sizes().end());
  return {{"dim", r.dim()}, {"column_sizes", sizes}, {"cells", cells}};
}

void cmd_apply(const std::string& map, const std::string& input) {
  const Json j = parse_json(read_input(input));
  auto matrix = [&] {
    PartitionMatrix p = partition_matrix_from_json(j);
    require_within_cap(p.weight());
    return p;
  };
  Json out;
  if (map == "theta") {
    out = to_json(theta(matrix()));
  } else if (map == "eta") {
    out = to_json(cdk_eta(matrix()));
  } else if (map == "eta-inv") {
    const InversionSequence e = inversion_sequence_from_json(j);
    require_within_cap(e.length());
    out = to_json(cdk_eta_inverse(e));
  } else if (map == "reduce") {
    out = reduced_to_json(reduce(matrix()));
  } else if (map == "phi") {
    out = to_json(phi(matrix()));
  } else if (map == "phi-inv") {
    const MotzkinWord m = motzkin_word_from_json(j);
    require_within_cap(m.length());
    out = to_json(phi_inv(m));
  } else if (map == "double") {
    out = Json::array();
    for (const PartitionMatrix& q : double_expand(matrix())) out.push_back(to_json(q));
  } else if (map == "natural-fishburn") {
    out = to_json(natural_fishburn(matrix()));
  } else if (map == "parity-append") {
    if (j.is_object() && j.contains("e")) {
      const InversionSequence e = inversion_sequence_from_json(j);
      require_within_cap(e.length());
      out = to_json(seq_append(e));
    } else {
      out = to_json(parity_append(matrix()));
    }
  }
  std::cout << out.dump() << '\n';
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& check, std::optional<int> max_n, std::optional<int> max_t) {
  std::vector<CheckInfo> selected;
  if (check == "all") {
    selected = check_registry();
  } else if (auto c = find_check(check)) {
    selected.push_back(*c);
  } else {
    throw UsageError("unknown check \"" + check + "\"");
  }
  const auto cap = env_max_n();
  bool all_passed = true;
  for (const CheckInfo& c : selected) {
    const bool weight = c.bound_kind == BoundKind::Weight;
    const auto requested = weight ? max_n : max_t;
    int bound = requested.value_or(c.default_bound);
    if (bound < 1) throw UsageError("bounds must be at least 1");
    if (bound > c.max_bound)
      throw UsageError(std::string(c.name) + " supports " + (weight ? "n" : "T") + " <= " +
                       std::to_string(c.max_bound));
    if (cap && bound > *cap) bound = *cap;
    const CheckResult r = run_check(c.id, bound);
    all_passed = all_passed && r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << c.name << " [" << (weight ? "n" : "T") << " <= " << bound
              << "] " << c.statement;
    if (!r.passed) std::cout << ": " << r.detail;
    std::cout << '\n';
    if (r.counterexample) std::cout << "  counterexample: " << r.counterexample->dump() << '\n';
  }
  return all_passed ? kOk : kIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition matrices, Fishburn matrices and the structures around them"};
  app.require_subcommand(1);

  std::vector<std::string> family_keys;
  for (const auto& [k, v] : family_names()) family_keys.push_back(k);
  const std::vector<std::string> strategies = {"filter", "structural", "doubling", "fast"};

  std::string family, format = "json", strategy = "structural";
  int n = 0;
  std::optional<long> limit;
  auto* enumerate = app.add_subcommand("enumerate", "Stream every object of a family, one per line");
  enumerate->add_option("--family", family, "Family")->required()->check(CLI::IsMember(family_keys));
  enumerate->add_option("--n", n, "Weight, length, semilength, or dimension for gridpath")->required()->check(CLI::Range(1, 1000000));
  enumerate->add_option("--format", format, "json (json-lines) or csv (statistics)")->check(CLI::IsMember({"json", "csv"}));
  enumerate->add_option("--limit", limit, "Stop after this many objects")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--strategy", strategy, "filter or structural (doubling / fast)")->check(CLI::IsMember(strategies));

  unsigned threads = 1;
  auto* count_cmd = app.add_subcommand("count", "Count a family without storing it");
  count_cmd->add_option("--family", family, "Family")->required()->check(CLI::IsMember(family_keys));
  count_cmd->add_option("--n", n, "Weight, length, semilength, or dimension for gridpath")->required()->check(CLI::Range(1, 1000000));
  count_cmd->add_option("--strategy", strategy, "filter or structural (doubling / fast)")->check(CLI::IsMember(strategies));
  count_cmd->add_option("--threads", threads, "Worker threads for families counted over partition matrices")->check(CLI::Range(1u, 64u));

  std::string name, route = "fishburn";
  auto* poly = app.add_subcommand("poly", "Print an exact polynomial as JSON");
  poly->add_option("--name", name, "s, dist-rhs, eulerian, v-dist or dist")->required()
      ->check(CLI::IsMember({"s", "dist-rhs", "eulerian", "v-dist", "dist"}));
  poly->add_option("--n", n, "Index")->required()->check(CLI::Range(1, 1000000));
  poly->add_option("--route", route, "For s: fishburn or inv")->check(CLI::IsMember({"fishburn", "inv"}));

  int order = 0;
  auto* series = app.add_subcommand("series", "Print a truncated series and its identity residuals");
  series->add_option("--name", name, "motzkin-stats, ndippm-gf, ndpm-gf or lemma31")->required()
      ->check(CLI::IsMember({"motzkin-stats", "ndippm-gf", "ndpm-gf", "lemma31"}));
  series->add_option("--order", order, "Truncation order T in t")->required()->check(CLI::Range(1, 1000000));

  std::string map, input = "-";
  auto* apply = app.add_subcommand("apply", "Apply a map to one JSON object");
  apply->add_option("--map", map, "Map")->required()->check(CLI::IsMember(
      {"theta", "eta", "eta-inv", "reduce", "phi", "phi-inv", "double", "natural-fishburn", "parity-append"}));
  apply->add_option("--input", input, "Input file, or - for stdin");

  std::string check = "all";
  std::optional<int> max_n, max_t;
  auto* verify = app.add_subcommand("verify", "Run named identity checks");
  verify->add_option("--check", check, "Check name or all");
  verify->add_option("--max-n", max_n, "Weight bound for weight-bounded checks");
  verify->add_option("--max-t", max_t, "Order bound for series checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*enumerate) cmd_enumerate(family, n, format, limit, strategy);
    if (*count_cmd) {
      require_within_cap(n);
      std::cout << parallel_count_family(family_names().at(family), n, threads, strategy_of(strategy)) << '\n';
    }
    if (*poly) cmd_poly(name, n, route);
    if (*series) return cmd_series(name, order);
    if (*apply) cmd_apply(map, input);
    if (*verify) return cmd_verify(check, max_n, max_t);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidObject& e) {
    std::cerr << "invalid object: " << e.what() << '\n';
    return kInvalidObject;
  } catch (const DomainError& e) {
    std::cerr << "domain mismatch: " << e.what() << '\n';
    return kDomainMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
