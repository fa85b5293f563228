// Command-line front end: inventory inspection, dataset conversion,
// matching statistics, solver evaluation, reduction dumps, and
// confidence intervals. All outputs are deterministic for a fixed
// configuration; the resolved configuration is echoed to stderr.
//
// Exit codes: 0 success, 2 input or configuration error, 3 degenerate
// evaluation (no scored instances).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <sense_reduce/sense_reduce.hpp>

namespace sr = sense_reduce;
using nlohmann::json;

namespace {

std::string env_wordnet() {
  const char* v = std::getenv("SENSE_REDUCE_WORDNET");
  return v ? v : "";
}

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw sr::Error("cannot open output file: " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct Banner {
  std::string command;
  std::vector<std::pair<std::string, std::string>> fields;
  void add(const std::string& k, const std::string& v) {
    if (!v.empty()) fields.emplace_back(k, v);
  }
  void print() const {
    std::cerr << "# sense-reduce " << command;
    for (const auto& [k, v] : fields) std::cerr << ' ' << k << '=' << v;
    std::cerr << '\n';
  }
};

struct WorldShape {
  int lemmas = 5;
  int senses = 3;
  int examples = 2;
};

WorldShape parse_world(const std::string& s) {
  WorldShape w;
  if (s.empty()) return w;
  std::vector<std::string> parts = sr::split(s, 'x');
  if (parts.size() != 3) throw sr::InvalidParameter("--world expects LxSxE, got '" + s + "'");
  try {
    w.lemmas = std::stoi(parts[0]);
    w.senses = std::stoi(parts[1]);
    w.examples = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw sr::InvalidParameter("--world expects integers LxSxE, got '" + s + "'");
  }
  return w;
}

// Everything a solver chain may need; pieces are null until loaded.
struct SolverEnv {
  const sr::SenseInventory* inv = nullptr;
  const sr::ExampleIndex* idx = nullptr;
  const sr::SyntheticWorld* world = nullptr;
  uint64_t seed = 0;
};

sr::WicSolver build_wic(const std::vector<std::string>& t, size_t at, const SolverEnv& env);
sr::WsdSolver build_wsd(const std::vector<std::string>& t, size_t at, const SolverEnv& env);
sr::TsvSolver build_tsv(const std::vector<std::string>& t, size_t at, const SolverEnv& env);

void need(const void* p, const char* what, const std::string& tok) {
  if (!p) throw sr::InvalidParameter("solver '" + tok + "' needs " + what);
}

sr::WsdSolver build_wsd(const std::vector<std::string>& t, size_t at, const SolverEnv& env) {
  if (at >= t.size()) throw sr::InvalidParameter("solver chain ends where a WSD solver is required");
  const std::string& tok = t[at];
  if (tok == "wsd-via-tsv") {
    need(env.inv, "a sense inventory (--wordnet or synthetic world)", tok);
    return sr::wsd_via_tsv(build_tsv(t, at + 1, env), *env.inv);
  }
  if (at + 1 != t.size())
    throw sr::InvalidParameter("'" + tok + "' cannot take a ':...' continuation here");
  if (tok == "match-backoff") {
    need(env.idx, "a sense inventory (--wordnet or synthetic world)", tok);
    return sr::matching_wsd_solver(*env.idx, *env.inv,
                                   sr::BackoffPolicy::random_uniform(env.seed));
  }
  if (tok == "match-abstain") {
    need(env.idx, "a sense inventory (--wordnet or synthetic world)", tok);
    return sr::matching_wsd_solver(*env.idx, *env.inv, sr::BackoffPolicy::abstain());
  }
  if (tok == "gold-oracle") {
    need(env.world, "--format synthetic", tok);
    return sr::make_gold_solvers(*env.world).wsd;
  }
  throw sr::InvalidParameter("unknown WSD solver '" + tok + "'");
}

sr::TsvSolver build_tsv(const std::vector<std::string>& t, size_t at, const SolverEnv& env) {
  if (at >= t.size()) throw sr::InvalidParameter("solver chain ends where a TSV solver is required");
  const std::string& tok = t[at];
  if (tok == "tsv-via-wic") {
    need(env.inv, "a sense inventory (--wordnet or synthetic world)", tok);
    return sr::tsv_via_wic(build_wic(t, at + 1, env),
                           sr::default_example_provider(*env.inv), *env.inv);
  }
  if (at + 1 != t.size())
    throw sr::InvalidParameter("'" + tok + "' cannot take a ':...' continuation here");
  if (tok == "gold-oracle") {
    need(env.world, "--format synthetic", tok);
    return sr::make_gold_solvers(*env.world).tsv;
  }
  if (tok == "constant-true") return [](const sr::TsvInstance&) { return true; };
  if (tok == "constant-false") return [](const sr::TsvInstance&) { return false; };
  throw sr::InvalidParameter("unknown TSV solver '" + tok + "'");
}

sr::WicSolver build_wic(const std::vector<std::string>& t, size_t at, const SolverEnv& env) {
  if (at >= t.size()) throw sr::InvalidParameter("solver chain ends where a WiC solver is required");
  const std::string& tok = t[at];
  if (tok == "wic-via-wsd") return sr::wic_via_wsd(build_wsd(t, at + 1, env));
  if (tok == "match-backoff" || tok == "match-abstain")
    return sr::wic_via_wsd(build_wsd(t, at, env));  // shorthand
  if (at + 1 != t.size())
    throw sr::InvalidParameter("'" + tok + "' cannot take a ':...' continuation here");
  if (tok == "gold-oracle") {
    need(env.world, "--format synthetic", tok);
    return sr::make_gold_solvers(*env.world).wic;
  }
  if (tok == "constant-true") return [](const sr::WicInstance&) { return true; };
  if (tok == "constant-false") return [](const sr::WicInstance&) { return false; };
  throw sr::InvalidParameter("unknown WiC solver '" + tok + "'");
}

// The bare matching pipelines get instrumented verdicts (matched
// flags, per-side senses); anything else answers through the generic
// wrapper.
bool is_instrumented_chain(const std::vector<std::string>& t) {
  if (t.size() == 1) return t[0] == "match-backoff" || t[0] == "match-abstain";
  if (t.size() == 2 && t[0] == "wic-via-wsd")
    return t[1] == "match-backoff" || t[1] == "match-abstain";
  return false;
}

// ---- dataset plumbing ------------------------------------------------

enum class Task { Wic, Tsv };

struct LoadedData {
  Task task = Task::Wic;
  std::string name;
  std::vector<sr::WicInstance> wic;
  std::vector<sr::TsvInstance> tsv;
  std::unique_ptr<sr::SyntheticWorld> world;  // only for --format synthetic
};

void check_format(const std::string& format) {
  if (format != "wic" && format != "mclwic" && format != "wictsv" && format != "synthetic")
    throw sr::InvalidParameter("unknown --format '" + format + "'");
}

LoadedData load_dataset(const std::string& format, const std::vector<std::string>& data,
                        const std::string& gold, const std::string& world_spec,
                        uint64_t world_seed) {
  check_format(format);
  LoadedData out;
  if (format == "wic") {
    if (data.size() != 1) throw sr::InvalidParameter("--format wic expects one --data path");
    out.task = Task::Wic;
    out.wic = sr::load_wic(data[0], gold);
    out.name = "wic:" + sr::detail::split_stem(data[0]);
  } else if (format == "mclwic") {
    if (data.size() != 1) throw sr::InvalidParameter("--format mclwic expects one --data path");
    out.task = Task::Wic;
    out.wic = sr::load_mclwic(data[0], gold);
    out.name = "mclwic:" + sr::detail::split_stem(data[0]);
  } else if (format == "wictsv") {
    if (data.size() != 2)
      throw sr::InvalidParameter("--format wictsv expects two --data paths (examples, definitions)");
    out.task = Task::Tsv;
    out.tsv = sr::load_wictsv(data[0], data[1], gold);
    out.name = "wictsv:" + sr::detail::split_stem(data[0]);
  } else {  // synthetic
    WorldShape w = parse_world(world_spec);
    out.task = Task::Wic;
    out.world = std::make_unique<sr::SyntheticWorld>(
        sr::generate_synthetic_world(world_seed, w.lemmas, w.senses, w.examples));
    out.wic = out.world->wic;
    out.tsv = out.world->tsv;
    out.name = "synthetic:" + std::to_string(w.lemmas) + "x" + std::to_string(w.senses) +
               "x" + std::to_string(w.examples) + "@" + std::to_string(world_seed);
  }
  return out;
}

json errors_json(const sr::ErrorCounts& e) {
  return json{{"abstained", e.abstained},
              {"zero_true", e.zero_true},
              {"multi_true", e.multi_true},
              {"no_example", e.no_example},
              {"unknown_lemma", e.unknown_lemma},
              {"unresolved_definition", e.unresolved_definition},
              {"unknown_context", e.unknown_context},
              {"other", e.other}};
}

json report_json(const sr::EvaluationReport& r) {
  json j{{"dataset", r.dataset},
         {"n", r.n},
         {"n_scored", r.n_scored},
         {"accuracy", r.accuracy},
         {"coverage", r.coverage},
         {"ci_estimate", r.ci_estimate},
         {"ci_margin", r.ci_margin},
         {"errors", errors_json(r.errors)}};
  if (r.match_fraction) j["match_fraction"] = *r.match_fraction;
  if (r.expected_accuracy) j["expected_accuracy"] = *r.expected_accuracy;
  return j;
}

// ---- commands --------------------------------------------------------

struct CommonArgs {
  std::string wordnet;
  std::string format;
  std::vector<std::string> data;
  std::string gold;
  std::string out;
  std::string solver;
  std::string world_spec;
  uint64_t seed = 0;
  uint64_t world_seed = 1;
  std::string seeds;  // "A..B" sweep
  bool json_out = false;
  bool ladder = false;
  std::string verdicts;
  std::string to;

  std::string resolved_wordnet() const {
    return wordnet.empty() ? env_wordnet() : wordnet;
  }
};

int cmd_inventory_stats(const CommonArgs& a) {
  const std::string dir = a.resolved_wordnet();
  if (dir.empty())
    throw sr::InvalidParameter("--wordnet (or SENSE_REDUCE_WORDNET) is required");
  Banner b{"inventory-stats", {}};
  b.add("wordnet", dir);
  b.print();

  sr::SenseInventory inv = sr::load_inventory(dir);
  sr::InventoryStats st = inv.stats();
  Output out(a.out);
  if (a.json_out) {
    json by_pos_syn, by_pos_sen, by_pos_ex;
    for (const auto& [p, c] : st.synsets_by_pos) by_pos_syn[std::string(1, sr::pos_letter(p))] = c;
    for (const auto& [p, c] : st.senses_by_pos) by_pos_sen[std::string(1, sr::pos_letter(p))] = c;
    for (const auto& [p, c] : st.examples_by_pos) by_pos_ex[std::string(1, sr::pos_letter(p))] = c;
    json j{{"synsets", st.synsets},
           {"senses", st.senses},
           {"examples", st.examples},
           {"synsets_by_pos", by_pos_syn},
           {"senses_by_pos", by_pos_sen},
           {"examples_by_pos", by_pos_ex},
           {"duplicate_lemma_synset", inv.diagnostics().duplicate_lemma_synset},
           {"sense_lemma_not_in_synset", inv.diagnostics().sense_lemma_not_in_synset}};
    out.os() << j.dump(2) << '\n';
  } else {
    out.os() << "synsets\t" << st.synsets << '\n';
    for (const auto& [p, c] : st.synsets_by_pos)
      out.os() << "synsets." << sr::pos_letter(p) << '\t' << c << '\n';
    out.os() << "senses\t" << st.senses << '\n';
    for (const auto& [p, c] : st.senses_by_pos)
      out.os() << "senses." << sr::pos_letter(p) << '\t' << c << '\n';
    out.os() << "examples\t" << st.examples << '\n';
    for (const auto& [p, c] : st.examples_by_pos)
      out.os() << "examples." << sr::pos_letter(p) << '\t' << c << '\n';
    out.os() << "diagnostics.duplicate_lemma_synset\t"
             << inv.diagnostics().duplicate_lemma_synset << '\n';
    out.os() << "diagnostics.sense_lemma_not_in_synset\t"
             << inv.diagnostics().sense_lemma_not_in_synset << '\n';
  }
  return 0;
}

int cmd_convert(const CommonArgs& a) {
  LoadedData d = load_dataset(a.format, a.data, a.gold, a.world_spec, a.world_seed);
  Banner b{"convert", {}};
  b.add("format", a.format);
  for (const auto& p : a.data) b.add("data", p);
  b.add("gold", a.gold);
  b.print();

  Output out(a.out);
  size_t n = 0;
  if (d.task == Task::Wic) {
    for (const auto& i : d.wic) sr::write_unified(out.os(), i), ++n;
  } else {
    for (const auto& i : d.tsv) sr::write_unified(out.os(), i), ++n;
  }
  std::cerr << "# converted " << n << " instances\n";
  return 0;
}

int cmd_match_stats(const CommonArgs& a) {
  if (a.format != "wic" && a.format != "mclwic")
    throw sr::InvalidParameter("match-stats applies to --format wic or mclwic");
  const std::string dir = a.resolved_wordnet();
  if (dir.empty())
    throw sr::InvalidParameter("--wordnet (or SENSE_REDUCE_WORDNET) is required");
  if (a.data.empty()) throw sr::InvalidParameter("at least one --data path is required");

  Banner b{"match-stats", {}};
  b.add("wordnet", dir);
  b.add("format", a.format);
  for (const auto& p : a.data) b.add("data", p);
  b.print();

  sr::SenseInventory inv = sr::load_inventory(dir);
  sr::ExampleIndex idx = sr::ExampleIndex::build(inv);

  Output out(a.out);
  json rows = json::array();
  if (!a.json_out) {
    out.os() << "split\tn\tn_both_matched\tfraction\tn_ambiguous";
    if (a.ladder) out.os() << "\tn_side1\tn_side2\trung_raw\trung_casefold\trung_norm";
    out.os() << '\n';
  }
  for (const std::string& path : a.data) {
    std::vector<sr::WicInstance> split =
        a.format == "wic" ? sr::load_wic(path) : sr::load_mclwic(path);
    sr::MatchStats st = sr::match_stats(idx, split);
    const std::string name = sr::detail::split_stem(path);
    if (a.json_out) {
      rows.push_back(json{{"split", name},
                          {"n", st.n},
                          {"n_both_matched", st.n_both_matched},
                          {"fraction", st.fraction},
                          {"n_ambiguous", st.n_ambiguous},
                          {"n_side1", st.n_side1},
                          {"n_side2", st.n_side2},
                          {"rung_raw", st.rung_raw},
                          {"rung_casefold", st.rung_casefold},
                          {"rung_norm", st.rung_norm},
                          {"expected_accuracy", sr::expected_accuracy_with_backoff(st.fraction)}});
    } else {
      out.os() << name << '\t' << st.n << '\t' << st.n_both_matched << '\t'
               << sr::format_fixed3(st.fraction) << '\t' << st.n_ambiguous;
      if (a.ladder)
        out.os() << '\t' << st.n_side1 << '\t' << st.n_side2 << '\t'
                 << sr::format_fixed3(st.rung_raw) << '\t'
                 << sr::format_fixed3(st.rung_casefold) << '\t'
                 << sr::format_fixed3(st.rung_norm);
      out.os() << '\n';
    }
  }
  if (a.json_out) out.os() << rows.dump(2) << '\n';
  return 0;
}

std::pair<uint64_t, uint64_t> parse_seed_range(const std::string& s) {
  size_t dots = s.find("..");
  if (dots == std::string::npos)
    throw sr::InvalidParameter("--seeds expects A..B, got '" + s + "'");
  try {
    uint64_t a = std::stoull(s.substr(0, dots));
    uint64_t b = std::stoull(s.substr(dots + 2));
    if (b < a) throw sr::InvalidParameter("--seeds range is empty: '" + s + "'");
    return {a, b};
  } catch (const sr::Error&) {
    throw;
  } catch (const std::exception&) {
    throw sr::InvalidParameter("--seeds expects integers A..B, got '" + s + "'");
  }
}

// Shared by evaluate and solve: load data, build env, build chain.
struct RunContext {
  LoadedData data;
  std::unique_ptr<sr::SenseInventory> inv;  // owned when loaded from --wordnet
  std::unique_ptr<sr::ExampleIndex> idx;
  SolverEnv env;
  std::vector<std::string> chain;
};

RunContext make_run_context(const CommonArgs& a) {
  if (a.solver.empty()) throw sr::InvalidParameter("--solver is required");
  RunContext rc;
  rc.data = load_dataset(a.format, a.data, a.gold, a.world_spec, a.world_seed);
  rc.chain = sr::split(a.solver, ':');

  const std::string dir = a.resolved_wordnet();
  if (rc.data.world) {
    rc.env.world = rc.data.world.get();
    rc.env.inv = &rc.data.world->inventory;
  } else if (!dir.empty()) {
    rc.inv = std::make_unique<sr::SenseInventory>(sr::load_inventory(dir));
    rc.env.inv = rc.inv.get();
  }
  if (rc.env.inv) {
    rc.idx = std::make_unique<sr::ExampleIndex>(sr::ExampleIndex::build(*rc.env.inv));
    rc.env.idx = rc.idx.get();
  }
  rc.env.seed = a.seed;
  return rc;
}

int cmd_evaluate(const CommonArgs& a) {
  RunContext rc = make_run_context(a);

  Banner b{"evaluate", {}};
  b.add("format", a.format);
  for (const auto& p : a.data) b.add("data", p);
  b.add("gold", a.gold);
  b.add("wordnet", a.resolved_wordnet());
  b.add("solver", a.solver);
  if (rc.data.world) b.add("world", rc.data.name);

  std::vector<uint64_t> seeds;
  if (!a.seeds.empty()) {
    auto [s0, s1] = parse_seed_range(a.seeds);
    for (uint64_t s = s0; s <= s1; ++s) seeds.push_back(s);
    b.add("seeds", a.seeds);
  } else {
    seeds.push_back(a.seed);
    b.add("seed", std::to_string(a.seed));
  }
  b.print();

  // match statistics once per run; they do not depend on the seed
  std::optional<sr::MatchStats> mst;
  if (rc.data.task == Task::Wic && rc.env.idx)
    mst = sr::match_stats(*rc.env.idx, rc.data.wic);

  struct SeedResult {
    uint64_t seed;
    sr::EvaluationReport rep;
  };
  std::vector<SeedResult> results;
  std::vector<sr::WicVerdict> wic_dump;
  std::vector<sr::TsvVerdict> tsv_dump;
  const bool want_dump = !a.verdicts.empty() && seeds.size() == 1;

  for (uint64_t s : seeds) {
    SolverEnv env = rc.env;
    env.seed = s;
    sr::EvaluationReport rep;
    if (rc.data.task == Task::Wic) {
      sr::WicVerdictFn fn =
          is_instrumented_chain(rc.chain) && env.idx
              ? sr::verdict_matching_wic(*env.idx, *env.inv,
                                         rc.chain.back() == "match-backoff"
                                             ? sr::BackoffPolicy::random_uniform(s)
                                             : sr::BackoffPolicy::abstain())
              : sr::verdict_wic_solver(build_wic(rc.chain, 0, env));
      rep = sr::evaluate_wic_verdicts(fn, rc.data.wic, rc.data.name,
                                      want_dump ? &wic_dump : nullptr);
    } else {
      rep = sr::evaluate_tsv(build_tsv(rc.chain, 0, env), rc.data.tsv, rc.data.name,
                             want_dump ? &tsv_dump : nullptr);
    }
    if (mst) {
      rep.match_fraction = mst->fraction;
      rep.expected_accuracy = sr::expected_accuracy_with_backoff(mst->fraction);
    }
    results.push_back({s, std::move(rep)});
  }

  if (want_dump) {
    Output vout(a.verdicts);
    if (rc.data.task == Task::Wic) {
      sr::write_wic_verdicts(vout.os(), std::move(wic_dump));
    } else {
      std::sort(tsv_dump.begin(), tsv_dump.end(),
                [](const sr::TsvVerdict& x, const sr::TsvVerdict& y) { return x.id < y.id; });
      vout.os() << "# id\tprediction\tgold\terror\n";
      for (const auto& v : tsv_dump)
        vout.os() << v.id << '\t' << sr::verdict_flag(v.prediction) << '\t'
                  << sr::verdict_flag(v.gold) << '\t'
                  << (v.error.empty() ? "-" : v.error) << '\n';
    }
  }

  Output out(a.out);
  if (results.size() == 1) {
    const auto& r = results.front().rep;
    if (a.json_out) {
      json j = report_json(r);
      j["seed"] = results.front().seed;
      j["solver"] = a.solver;
      out.os() << j.dump(2) << '\n';
    } else {
      out.os() << "solver\t" << a.solver << '\n';
      out.os() << "seed\t" << results.front().seed << '\n';
      sr::write_report_text(out.os(), r);
    }
  } else {
    double sum = 0;
    for (const auto& r : results) sum += r.rep.accuracy;
    double mean = sum / static_cast<double>(results.size());
    if (a.json_out) {
      json per_seed = json::array();
      for (const auto& r : results)
        per_seed.push_back(json{{"seed", r.seed},
                                {"accuracy", r.rep.accuracy},
                                {"coverage", r.rep.coverage},
                                {"n_scored", r.rep.n_scored}});
      json j{{"dataset", rc.data.name},
             {"solver", a.solver},
             {"n", results.front().rep.n},
             {"seeds", per_seed},
             {"mean_accuracy", mean}};
      if (mst) {
        j["match_fraction"] = mst->fraction;
        j["expected_accuracy"] = sr::expected_accuracy_with_backoff(mst->fraction);
      }
      out.os() << j.dump(2) << '\n';
    } else {
      out.os() << "dataset\t" << rc.data.name << '\n';
      out.os() << "solver\t" << a.solver << '\n';
      for (const auto& r : results)
        out.os() << "seed." << r.seed << ".accuracy\t" << sr::format_fixed3(r.rep.accuracy)
                 << '\n';
      out.os() << "mean_accuracy\t" << sr::format_fixed3(mean) << '\n';
      if (mst) {
        out.os() << "match_fraction\t" << sr::format_fixed3(mst->fraction) << '\n';
        out.os() << "expected_accuracy\t"
                 << sr::format_fixed3(sr::expected_accuracy_with_backoff(mst->fraction)) << '\n';
      }
    }
  }
  return 0;
}

int cmd_solve(const CommonArgs& a) {
  RunContext rc = make_run_context(a);
  Banner b{"solve", {}};
  b.add("format", a.format);
  for (const auto& p : a.data) b.add("data", p);
  b.add("wordnet", a.resolved_wordnet());
  b.add("solver", a.solver);
  b.add("seed", std::to_string(a.seed));
  b.print();

  Output out(a.out);
  if (rc.data.task == Task::Wic) {
    sr::WicVerdictFn fn =
        is_instrumented_chain(rc.chain) && rc.env.idx
            ? sr::verdict_matching_wic(*rc.env.idx, *rc.env.inv,
                                       rc.chain.back() == "match-backoff"
                                           ? sr::BackoffPolicy::random_uniform(a.seed)
                                           : sr::BackoffPolicy::abstain())
            : sr::verdict_wic_solver(build_wic(rc.chain, 0, rc.env));
    std::vector<sr::WicVerdict> dump;
    for (const auto& inst : rc.data.wic) {
      sr::WicVerdict v;
      try {
        v = fn(inst);
        v.id = inst.id;
        v.gold = inst.gold;
      } catch (const sr::ReductionError& e) {
        v = sr::WicVerdict{};
        v.id = inst.id;
        v.gold = inst.gold;
        v.error = sr::error_label(e);
      }
      if (!v.error.empty()) v.prediction = std::nullopt;
      dump.push_back(std::move(v));
    }
    sr::write_wic_verdicts(out.os(), std::move(dump));
  } else {
    sr::TsvSolver solver = build_tsv(rc.chain, 0, rc.env);
    struct Row {
      std::string id;
      std::optional<bool> pred, gold;
      std::string error;
    };
    std::vector<Row> rows;
    for (const auto& inst : rc.data.tsv) {
      Row r{inst.id, std::nullopt, inst.gold, ""};
      try {
        r.pred = solver(inst);
      } catch (const sr::ReductionError& e) {
        r.error = sr::error_label(e);
      }
      rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) { return x.id < y.id; });
    out.os() << "# id\tprediction\tgold\terror\n";
    for (const auto& r : rows)
      out.os() << r.id << '\t' << sr::verdict_flag(r.pred) << '\t'
               << sr::verdict_flag(r.gold) << '\t' << (r.error.empty() ? "-" : r.error)
               << '\n';
  }
  return 0;
}

int cmd_reduce(const CommonArgs& a) {
  if (a.to != "wsd" && a.to != "tsv" && a.to != "wic")
    throw sr::InvalidParameter("--to expects wsd, tsv, or wic");
  LoadedData d = load_dataset(a.format, a.data, a.gold, a.world_spec, a.world_seed);

  Banner b{"reduce", {}};
  b.add("format", a.format);
  for (const auto& p : a.data) b.add("data", p);
  b.add("to", a.to);
  b.print();

  Output out(a.out);
  size_t n = 0, skipped = 0;

  if (d.world) {
    // synthetic worlds carry all three datasets natively
    if (a.to == "wsd")
      for (const auto& i : d.world->wsd) sr::write_unified(out.os(), i), ++n;
    else if (a.to == "tsv")
      for (const auto& i : d.world->tsv) sr::write_unified(out.os(), i), ++n;
    else
      for (const auto& i : d.world->wic) sr::write_unified(out.os(), i), ++n;
  } else if (d.task == Task::Wic && a.to == "wsd") {
    for (const auto& i : d.wic) {
      auto [x, y] = sr::wsd_instances_of(i);
      sr::write_unified(out.os(), x);
      sr::write_unified(out.os(), y);
      n += 2;
    }
  } else if (d.task == Task::Tsv && a.to == "wic") {
    const std::string dir = a.resolved_wordnet();
    if (dir.empty())
      throw sr::InvalidParameter("--wordnet (or SENSE_REDUCE_WORDNET) is required to reduce tsv to wic");
    sr::SenseInventory inv = sr::load_inventory(dir);
    sr::ExampleProvider provider = sr::default_example_provider(inv);
    for (const auto& i : d.tsv) {
      try {
        sr::write_unified(out.os(), sr::wic_instance_of(i, provider, inv));
        ++n;
      } catch (const sr::ReductionError& e) {
        std::cerr << "# skipped " << i.id << " " << sr::error_label(e) << '\n';
        ++skipped;
      }
    }
  } else {
    throw sr::InvalidParameter("no reduction from --format " + a.format + " to " + a.to);
  }
  std::cerr << "# reduced " << n << " instances";
  if (skipped) std::cerr << " (" << skipped << " skipped)";
  std::cerr << '\n';
  return 0;
}

int cmd_ci(uint64_t successes, uint64_t n, double z, bool wilson, bool json_out,
           const std::string& out_path) {
  Banner b{"ci", {}};
  b.add("successes", std::to_string(successes));
  b.add("n", std::to_string(n));
  b.add("z", std::to_string(z));
  b.add("method", wilson ? "wilson" : "wald");
  b.print();

  sr::BinomialCi ci = wilson ? sr::wilson_ci(successes, n, z) : sr::binomial_ci(successes, n, z);
  Output out(out_path);
  if (json_out) {
    json j{{"estimate", ci.estimate},
           {"margin", ci.margin},
           {"formatted", sr::format_ci(ci)},
           {"method", wilson ? "wilson" : "wald"},
           {"z", z}};
    out.os() << j.dump(2) << '\n';
  } else {
    out.os() << sr::format_ci(ci) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sense inventories, WiC/TSV/WSD datasets, and task reductions"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file; command-line flags win");

  CommonArgs a;
  uint64_t ci_successes = 0, ci_n = 0;
  double ci_z = 1.96;
  bool ci_wilson = false;

  auto add_common = [&](CLI::App* c, bool with_data) {
    c->add_option("--wordnet", a.wordnet, "WordNet dict directory (or SENSE_REDUCE_WORDNET)");
    if (with_data) {
      c->add_option("--format", a.format, "wic | mclwic | wictsv | synthetic")->required();
      c->add_option("--data", a.data, "dataset path(s); wictsv takes examples + definitions");
      c->add_option("--gold", a.gold, "gold labels path");
      c->add_option("--world", a.world_spec, "synthetic shape LxSxE (default 5x3x2)");
      c->add_option("--world-seed", a.world_seed, "synthetic generation seed (default 1)");
    }
    c->add_option("--out", a.out, "write output to this file instead of stdout");
    c->add_flag("--json", a.json_out, "JSON output");
  };

  CLI::App* c_stats = app.add_subcommand("inventory-stats", "counts per part of speech");
  add_common(c_stats, false);

  CLI::App* c_convert = app.add_subcommand("convert", "dump a dataset in the unified format");
  add_common(c_convert, true);

  CLI::App* c_match = app.add_subcommand("match-stats", "example-match fractions per split");
  add_common(c_match, true);
  c_match->add_flag("--ladder", a.ladder, "add per-rung normalization columns");

  CLI::App* c_eval = app.add_subcommand("evaluate", "score a solver pipeline against gold");
  add_common(c_eval, true);
  c_eval->add_option("--solver", a.solver, "solver chain, e.g. wic-via-wsd:match-backoff")->required();
  c_eval->add_option("--seed", a.seed, "back-off seed (default 0)");
  c_eval->add_option("--seeds", a.seeds, "seed sweep A..B; reports per-seed and mean accuracy");
  c_eval->add_option("--verdicts", a.verdicts, "write per-instance verdicts to this file");

  CLI::App* c_solve = app.add_subcommand("solve", "run a solver pipeline, dump verdicts");
  add_common(c_solve, true);
  c_solve->add_option("--solver", a.solver, "solver chain")->required();
  c_solve->add_option("--seed", a.seed, "back-off seed (default 0)");

  CLI::App* c_reduce = app.add_subcommand("reduce", "rewrite a dataset as another task");
  add_common(c_reduce, true);
  c_reduce->add_option("--to", a.to, "target task: wsd | tsv | wic")->required();

  CLI::App* c_ci = app.add_subcommand("ci", "binomial confidence interval");
  c_ci->add_option("successes", ci_successes, "number of successes")->required();
  c_ci->add_option("n", ci_n, "number of trials")->required();
  c_ci->add_option("--z", ci_z, "critical value (default 1.96)");
  c_ci->add_flag("--wilson", ci_wilson, "Wilson score interval instead of Wald");
  c_ci->add_option("--out", a.out, "write output to this file instead of stdout");
  c_ci->add_flag("--json", a.json_out, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(c_stats)) return cmd_inventory_stats(a);
    if (app.got_subcommand(c_convert)) return cmd_convert(a);
    if (app.got_subcommand(c_match)) return cmd_match_stats(a);
    if (app.got_subcommand(c_eval)) return cmd_evaluate(a);
    if (app.got_subcommand(c_solve)) return cmd_solve(a);
    if (app.got_subcommand(c_reduce)) return cmd_reduce(a);
    if (app.got_subcommand(c_ci)) return cmd_ci(ci_successes, ci_n, ci_z, ci_wilson, a.json_out, a.out);
  } catch (const sr::NoScored& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const sr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
