// Copyright 2026 the oracle-summ authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Batch front end: task ingestion, command dispatch, result serialization.
//
//   oracle_summ oracle    task.json            one optimal summary
//   oracle_summ enumerate task.json [more...]  all optimal summaries
//   oracle_summ greedy    task.json            density-greedy baseline
//   oracle_summ count     task.json            feasible-summary count
//   oracle_summ export-lp task.json -o m.lp    solver-ready ILP file
//   oracle_summ evaluate  task.json --system 0,2,5
//   oracle_summ bench     task_dir/            search-space statistics
//
// Results are deterministic: rerunning any command on the same inputs
// writes byte-identical output (timings appear only behind --timings).

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "osumm/count.hpp"
#include "osumm/error.hpp"
#include "osumm/ilp.hpp"
#include "osumm/log.hpp"
#include "osumm/metrics.hpp"
#include "osumm/search.hpp"
#include "osumm/task.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using osumm::Error;
using osumm::Score;
using osumm::count::BigInt;

constexpr int kSchemaVersion = 1;

struct CommonOpts {
  osumm::task::Overrides overrides;
  bool no_stem = false;
  bool keep_stopwords = false;
  bool remove_stopwords = false;
  bool ref_cross = false;
  std::string length_mode;
  std::string stopword_file;

  bool minimal_oracles = false;
  bool no_prune = false;
  bool timings = false;
  uint64_t seed = 0;
  unsigned jobs = 1;
  std::string format = "json";
  std::string out_path;

  std::vector<std::string> tasks;      // positional task.json files
  std::vector<std::string> doc_files;  // plain-text alternative
  std::vector<std::string> ref_files;
};

void add_common_options(CLI::App* cmd, CommonOpts& opts, bool with_tasks) {
  cmd->add_option("--n", opts.overrides.n, "n-gram order (>= 1)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--lmax", opts.overrides.l_max, "word budget (>= 1)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--stopwords", opts.stopword_file,
                  "stopword file, one token per line");
  cmd->add_flag("--no-stem", opts.no_stem, "disable Porter stemming");
  cmd->add_flag("--keep-stopwords", opts.keep_stopwords,
                "keep stopwords regardless of n");
  cmd->add_flag("--remove-stopwords", opts.remove_stopwords,
                "remove stopwords regardless of n");
  cmd->add_flag("--ref-cross-sentences", opts.ref_cross,
                "extract reference n-grams across sentence boundaries");
  cmd->add_option("--length-mode", opts.length_mode,
                  "sentence length measure: raw (default) or tokens")
      ->check(CLI::IsMember({"raw", "tokens"}));
  cmd->add_flag("--minimal-oracles", opts.minimal_oracles,
                "report only inclusion-minimal oracle sets");
  cmd->add_flag("--no-prune", opts.no_prune,
                "disable bound pruning (audit mode)");
  cmd->add_option("--seed", opts.seed, "seed for randomized evaluation");
  cmd->add_option("--jobs", opts.jobs,
                  "parallel tasks in batch mode (0 = hardware)");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("-o,--out", opts.out_path, "write the result here");
  cmd->add_flag("--timings", opts.timings,
                "include wall-clock fields (breaks byte determinism)");
  if (with_tasks) {
    cmd->add_option("tasks", opts.tasks, "task file(s), JSON");
    cmd->add_option("--doc", opts.doc_files,
                    "plain-text document, one sentence per line");
    cmd->add_option("--ref", opts.ref_files,
                    "plain-text reference summary, one sentence per line");
  }
}

void finalize_overrides(CommonOpts& opts) {
  if (opts.no_stem) opts.overrides.stemming = false;
  if (opts.keep_stopwords && opts.remove_stopwords)
    throw Error::validation(
        "--keep-stopwords and --remove-stopwords are mutually exclusive");
  if (opts.keep_stopwords) opts.overrides.stopword_removal = false;
  if (opts.remove_stopwords) opts.overrides.stopword_removal = true;
  if (opts.ref_cross) opts.overrides.ref_cross_sentences = true;
  if (!opts.length_mode.empty()) opts.overrides.length_mode = opts.length_mode;
  if (!opts.stopword_file.empty())
    opts.overrides.stopword_file = opts.stopword_file;
}

std::vector<osumm::task::TaskSpec> gather_tasks(const CommonOpts& opts) {
  std::vector<osumm::task::TaskSpec> specs;
  if (!opts.doc_files.empty() || !opts.ref_files.empty()) {
    if (!opts.tasks.empty())
      throw Error::validation(
          "give either task files or --doc/--ref files, not both");
    if (opts.doc_files.empty() || opts.ref_files.empty())
      throw Error::validation("--doc and --ref must both be given");
    osumm::task::TaskSpec spec;
    spec.name = "<files>";
    for (const auto& f : opts.doc_files)
      spec.documents.push_back(osumm::task::load_sentence_file(f));
    for (const auto& f : opts.ref_files)
      spec.references.push_back(osumm::task::load_sentence_file(f));
    specs.push_back(std::move(spec));
    return specs;
  }
  if (opts.tasks.empty())
    throw Error::validation("no task given (task file or --doc/--ref)");
  specs.reserve(opts.tasks.size());
  for (const auto& path : opts.tasks)
    specs.push_back(osumm::task::load_task_json(path));
  return specs;
}

osumm::task::TaskSpec gather_single_task(const CommonOpts& opts) {
  auto specs = gather_tasks(opts);
  if (specs.size() != 1)
    throw Error::validation("this command takes exactly one task");
  return std::move(specs.front());
}

osumm::search::Config search_config(const CommonOpts& opts) {
  osumm::search::Config cfg;
  cfg.prune = !opts.no_prune;
  cfg.minimal_only = opts.minimal_oracles;
  return cfg;
}

// --- result serialization ---

ordered_json score_json(const Score& s) {
  return ordered_json{{"num", s.num}, {"den", s.den}};
}

ordered_json preprocessing_json(const osumm::task::PreparedTask& t) {
  return ordered_json{
      {"lowercase", t.cfg.lowercase},
      {"stemming", t.cfg.stemming},
      {"stopword_removal", t.cfg.stopword_removal},
      {"stopword_count", t.cfg.stopwords.size()},
      {"ref_cross_sentences", t.cfg.ref_cross_sentences},
      {"length_mode", t.cfg.length_mode == osumm::text::LengthMode::raw_words
                          ? "raw"
                          : "tokens"},
  };
}

ordered_json task_header(const osumm::task::PreparedTask& t) {
  return ordered_json{
      {"task", t.name},
      {"n", t.n},
      {"l_max", t.l_max},
      {"num_sentences", t.docs.sentences.size()},
      {"num_references", t.refs.size()},
      {"denominator", t.bank->denominator()},
      {"preprocessing", preprocessing_json(t)},
  };
}

ordered_json greedy_json(const osumm::search::GreedyResult& g) {
  return ordered_json{
      {"score", g.score.value()},
      {"score_exact", score_json(g.score)},
      {"ids", g.ids},
      {"length", g.total_length},
  };
}

// Lower-overhead exact median for mixed magnitudes: sorts and averages the
// middle pair, rendering halves as "<q>.5".
std::string median_string(std::vector<BigInt> values) {
  if (values.empty()) return "0";
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  if (n % 2 == 1) return values[n / 2].str();
  const BigInt sum = values[n / 2 - 1] + values[n / 2];
  const BigInt half = sum / 2;
  return sum % 2 == 0 ? half.str() : half.str() + ".5";
}

// --- plain-text rendering of the JSON result ---

bool all_scalars(const ordered_json& arr) {
  for (const auto& v : arr)
    if (v.is_object() || v.is_array()) return false;
  return true;
}

void render_text(const ordered_json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !all_scalars(value))) {
        out << pad << key << ":\n";
        render_text(value, out, indent + 2);
      } else if (value.is_array()) {
        out << pad << key << ":";
        for (const auto& v : value) out << " " << v.dump();
        out << "\n";
      } else {
        out << pad << key << ": " << (value.is_string()
                                          ? value.get<std::string>()
                                          : value.dump())
            << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        out << pad << "-\n";
        render_text(v, out, indent + 2);
      } else {
        out << pad << "- " << v.dump() << "\n";
      }
    }
  } else {
    out << pad << j.dump() << "\n";
  }
}

void emit(const ordered_json& result, const CommonOpts& opts) {
  std::ostringstream text;
  if (opts.format == "json") {
    text << result.dump(2) << "\n";
  } else {
    render_text(result, text, 0);
  }
  if (opts.out_path.empty()) {
    std::cout << text.str();
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) throw Error::io("cannot open output file: " + opts.out_path);
  out << text.str();
  if (!out) throw Error::io("failed writing output file: " + opts.out_path);
}

// --- batch helper ---

template <typename Fn>
std::vector<std::variant<ordered_json, std::string>> run_batch(
    size_t count, unsigned jobs, Fn&& per_task) {
  std::vector<std::variant<ordered_json, std::string>> results(count);
  unsigned width = jobs == 0 ? std::thread::hardware_concurrency() : jobs;
  width = std::max(1u, std::min<unsigned>(width, count));
  if (width == 1) {
    for (size_t i = 0; i < count; ++i) {
      try {
        results[i] = per_task(i);
      } catch (const std::exception& e) {
        results[i] = std::string(e.what());
      }
    }
    return results;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < width; ++t) {
    pool.emplace_back([&]() {
      for (size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          results[i] = per_task(i);
        } catch (const std::exception& e) {
          results[i] = std::string(e.what());
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

// --- command handlers ---

ordered_json enumerate_one(const osumm::task::TaskSpec& spec,
                           const CommonOpts& opts) {
  const auto prepared = osumm::task::prepare(spec, opts.overrides);
  const auto greedy =
      osumm::search::greedy_initial(*prepared.bank, {prepared.l_max});
  const auto result = osumm::search::enumerate_oracles(
      *prepared.bank, {prepared.l_max}, search_config(opts));
  ordered_json j = task_header(prepared);
  j["greedy"] = greedy_json(greedy);
  j["tau"] = result.tau.value();
  j["tau_exact"] = score_json(result.tau);
  j["oracle_count"] = result.oracles.size();
  j["oracles"] = result.oracles;
  j["nodes_checked"] = result.nodes_checked;
  if (opts.timings) j["wall_ms"] = result.wall_ms;
  return j;
}

int cmd_enumerate(const CommonOpts& opts) {
  const auto specs = gather_tasks(opts);
  const auto outcomes = run_batch(
      specs.size(), opts.jobs,
      [&](size_t i) { return enumerate_one(specs[i], opts); });

  ordered_json result{{"schema_version", kSchemaVersion},
                      {"command", "enumerate"}};
  if (specs.size() == 1) {
    if (std::holds_alternative<std::string>(outcomes[0]))
      throw Error::runtime(specs[0].name + ": " +
                           std::get<std::string>(outcomes[0]));
    result.update(std::get<ordered_json>(outcomes[0]));
    const uint64_t count = result["oracle_count"].get<uint64_t>();
    result["aggregate"] = ordered_json{
        {"task_count", 1},
        {"median_oracle_count", std::to_string(count)},
        {"multiple_oracle_rate", count >= 2 ? 1.0 : 0.0},
    };
    emit(result, opts);
    return 0;
  }

  ordered_json tasks = ordered_json::array();
  std::vector<BigInt> counts;
  size_t with_multiple = 0;
  for (size_t i = 0; i < outcomes.size(); ++i) {
    if (std::holds_alternative<std::string>(outcomes[i]))
      throw Error::runtime(specs[i].name + ": " +
                           std::get<std::string>(outcomes[i]));
    const auto& j = std::get<ordered_json>(outcomes[i]);
    const uint64_t count = j["oracle_count"].get<uint64_t>();
    counts.emplace_back(count);
    if (count >= 2) ++with_multiple;
    tasks.push_back(j);
  }
  result["tasks"] = tasks;
  result["aggregate"] = ordered_json{
      {"task_count", specs.size()},
      {"median_oracle_count", median_string(counts)},
      {"multiple_oracle_rate",
       static_cast<double>(with_multiple) / specs.size()},
  };
  emit(result, opts);
  return 0;
}

int cmd_oracle(const CommonOpts& opts) {
  const auto spec = gather_single_task(opts);
  const auto prepared = osumm::task::prepare(spec, opts.overrides);
  const auto greedy =
      osumm::search::greedy_initial(*prepared.bank, {prepared.l_max});
  const auto one = osumm::search::extract_one_oracle(
      *prepared.bank, {prepared.l_max}, search_config(opts));
  ordered_json result{{"schema_version", kSchemaVersion},
                      {"command", "oracle"}};
  result.update(task_header(prepared));
  result["greedy"] = greedy_json(greedy);
  result["tau"] = one.score.value();
  result["tau_exact"] = score_json(one.score);
  result["oracle"] = one.ids;
  result["nodes_checked"] = one.nodes_checked;
  if (opts.timings) result["wall_ms"] = one.wall_ms;
  emit(result, opts);
  return 0;
}

int cmd_greedy(const CommonOpts& opts) {
  const auto spec = gather_single_task(opts);
  const auto prepared = osumm::task::prepare(spec, opts.overrides);
  const auto greedy =
      osumm::search::greedy_initial(*prepared.bank, {prepared.l_max});
  ordered_json result{{"schema_version", kSchemaVersion},
                      {"command", "greedy"}};
  result.update(task_header(prepared));
  result["greedy"] = greedy_json(greedy);
  emit(result, opts);
  return 0;
}

int cmd_count(const CommonOpts& opts, bool no_filter) {
  const auto spec = gather_single_task(opts);
  const auto prepared = osumm::task::prepare(spec, opts.overrides);
  const bool filter = !no_filter;
  const BigInt feasible =
      osumm::count::count_feasible(*prepared.bank, prepared.l_max, filter);
  ordered_json result{{"schema_version", kSchemaVersion},
                      {"command", "count"}};
  result.update(task_header(prepared));
  result["filter_no_overlap"] = filter;
  result["feasible_count"] = feasible.str();
  emit(result, opts);
  return 0;
}

int cmd_export_lp(const CommonOpts& opts, const std::string& lp_path) {
  if (lp_path.empty())
    throw Error::validation("export-lp needs a destination (--lp-out)");
  const auto spec = gather_single_task(opts);
  const auto prepared = osumm::task::prepare(spec, opts.overrides);
  const auto model = osumm::ilp::build_ilp(*prepared.bank, {prepared.l_max});
  osumm::ilp::write_lp_file(model, lp_path);
  ordered_json result{{"schema_version", kSchemaVersion},
                      {"command", "export_lp"}};
  result.update(task_header(prepared));
  result["path"] = lp_path;
  result["binaries"] = model.num_sentences();
  result["generals"] = model.num_slots();
  result["constraints"] =
      ordered_json{{"length", 1},
                   {"supply", model.num_slots()},
                   {"demand", model.num_slots()}};
  emit(result, opts);
  return 0;
}

std::vector<uint32_t> parse_id_list(std::string text) {
  for (char& c : text)
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') c = ',';
  std::vector<uint32_t> ids;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    if (token.find_first_not_of("0123456789") != std::string::npos)
      throw Error::validation("bad sentence id '" + token + "'");
    try {
      ids.push_back(static_cast<uint32_t>(std::stoul(token)));
    } catch (const std::exception&) {
      throw Error::validation("sentence id out of range: '" + token + "'");
    }
  }
  return ids;
}

std::vector<std::vector<uint32_t>> load_oracle_family_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error::io("cannot open oracle family file: " + path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error::validation(path + ": " + e.what());
  }
  if (!doc.contains("oracles") || !doc["oracles"].is_array())
    throw Error::validation(path + ": no 'oracles' array (expected the "
                                   "output of the enumerate command)");
  std::vector<std::vector<uint32_t>> sets;
  for (const auto& o : doc["oracles"])
    sets.push_back(o.get<std::vector<uint32_t>>());
  return sets;
}

int cmd_evaluate(const CommonOpts& opts, const std::string& system_ids,
                 const std::string& system_file,
                 const std::string& oracles_file, unsigned random_single) {
  const auto spec = gather_single_task(opts);
  const auto prepared = osumm::task::prepare(spec, opts.overrides);

  std::vector<uint32_t> system;
  if (!system_ids.empty()) {
    system = parse_id_list(system_ids);
  } else if (!system_file.empty()) {
    std::ifstream in(system_file);
    if (!in) throw Error::io("cannot open system file: " + system_file);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    for (char& c : text)
      if (c == '[' || c == ']' || c == '\n' || c == '\t') c = ',';
    system = parse_id_list(text);
  } else {
    throw Error::validation("evaluate needs --system or --system-file");
  }
  for (const uint32_t id : system)
    if (id >= prepared.docs.sentences.size())
      throw Error::validation("system sentence id " + std::to_string(id) +
                              " out of range");

  std::vector<std::vector<uint32_t>> family_sets;
  if (!oracles_file.empty()) {
    family_sets = load_oracle_family_file(oracles_file);
  } else {
    const auto result = osumm::search::enumerate_oracles(
        *prepared.bank, {prepared.l_max}, search_config(opts));
    family_sets = result.oracles;
  }
  const auto family = osumm::metrics::OracleFamily::validated(family_sets);
  const auto report = osumm::metrics::multi_oracle_prf(system, family);

  ordered_json result{{"schema_version", kSchemaVersion},
                      {"command", "evaluate"}};
  result.update(task_header(prepared));
  result["system"] = system;
  result["family_size"] = family.oracles.size();
  result["precision"] = report.averaged.precision;
  result["recall"] = report.averaged.recall;
  result["f_measure"] = report.averaged.f;
  ordered_json per = ordered_json::array();
  for (size_t i = 0; i < report.per_oracle.size(); ++i) {
    per.push_back(ordered_json{{"oracle", family.oracles[i]},
                               {"precision", report.per_oracle[i].precision},
                               {"recall", report.per_oracle[i].recall},
                               {"f", report.per_oracle[i].f}});
  }
  result["per_oracle"] = per;
  if (random_single > 0) {
    const auto rnd = osumm::metrics::random_single_eval(
        system, family, random_single, opts.seed);
    result["random_single"] =
        ordered_json{{"draws", rnd.draws},
                     {"seed", opts.seed},
                     {"precision", rnd.mean.precision},
                     {"recall", rnd.mean.recall},
                     {"f_measure", rnd.mean.f},
                     {"f_ci95", ordered_json::array(
                                    {rnd.f_ci_low, rnd.f_ci_high})}};
  }
  emit(result, opts);
  return 0;
}

int cmd_bench(const CommonOpts& opts, const std::string& dir) {
  std::vector<std::string> files;
  {
    std::error_code ec;
    fs::directory_iterator it(dir, ec);
    if (ec) throw Error::io("cannot read task directory: " + dir);
    for (const fs::directory_iterator end; it != end; it.increment(ec)) {
      if (ec) throw Error::io("cannot read task directory: " + dir);
      if (it->is_regular_file() && it->path().extension() == ".json")
        files.push_back(it->path().string());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty())
    throw Error::validation("no .json task files in " + dir);

  const auto outcomes = run_batch(files.size(), opts.jobs, [&](size_t i) {
    const auto spec = osumm::task::load_task_json(files[i]);
    const auto prepared = osumm::task::prepare(spec, opts.overrides);
    osumm::search::Config pruned = search_config(opts);
    osumm::search::Config unpruned = pruned;
    unpruned.prune = false;
    const auto with =
        osumm::search::enumerate_oracles(*prepared.bank, {prepared.l_max}, pruned);
    const auto without = osumm::search::enumerate_oracles(
        *prepared.bank, {prepared.l_max}, unpruned);
    const BigInt feasible =
        osumm::count::count_feasible(*prepared.bank, prepared.l_max, true);
    ordered_json j{{"task", files[i]},
                   {"n", prepared.n},
                   {"l_max", prepared.l_max},
                   {"num_sentences", prepared.docs.sentences.size()},
                   {"feasible_count", feasible.str()},
                   {"nodes_checked_pruned", with.nodes_checked},
                   {"nodes_checked_unpruned", without.nodes_checked},
                   {"tau", with.tau.value()},
                   {"oracle_count", with.oracles.size()}};
    if (opts.timings) {
      j["wall_ms_pruned"] = with.wall_ms;
      j["wall_ms_unpruned"] = without.wall_ms;
    }
    return j;
  });

  ordered_json tasks = ordered_json::array();
  std::vector<BigInt> feasible, pruned_nodes, unpruned_nodes;
  for (size_t i = 0; i < outcomes.size(); ++i) {
    if (std::holds_alternative<std::string>(outcomes[i])) {
      OSUMM_WARN("bench: skipping %s: %s", files[i].c_str(),
                 std::get<std::string>(outcomes[i]).c_str());
      tasks.push_back(ordered_json{
          {"task", files[i]},
          {"error", std::get<std::string>(outcomes[i])}});
      continue;
    }
    const auto& j = std::get<ordered_json>(outcomes[i]);
    feasible.emplace_back(BigInt(j["feasible_count"].get<std::string>()));
    pruned_nodes.emplace_back(j["nodes_checked_pruned"].get<uint64_t>());
    unpruned_nodes.emplace_back(j["nodes_checked_unpruned"].get<uint64_t>());
    tasks.push_back(j);
  }

  ordered_json result{{"schema_version", kSchemaVersion},
                      {"command", "bench"},
                      {"task_dir", dir},
                      {"tasks", tasks}};
  result["aggregate"] =
      ordered_json{{"task_count", files.size()},
                   {"completed", feasible.size()},
                   {"median_feasible_count", median_string(feasible)},
                   {"median_nodes_checked_pruned", median_string(pruned_nodes)},
                   {"median_nodes_checked_unpruned",
                    median_string(unpruned_nodes)}};
  emit(result, opts);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact extractive oracle summaries: enumeration, ILP export, "
               "counting and evaluation"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string lp_path;
  std::string system_ids, system_file, oracles_file;
  unsigned random_single = 0;
  std::string bench_dir;

  CLI::App* oracle = app.add_subcommand("oracle", "extract one oracle summary");
  add_common_options(oracle, opts, true);

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "enumerate all oracle summaries");
  add_common_options(enumerate, opts, true);

  CLI::App* greedy =
      app.add_subcommand("greedy", "density-greedy baseline summary");
  add_common_options(greedy, opts, true);

  CLI::App* count =
      app.add_subcommand("count", "count length-feasible summaries");
  add_common_options(count, opts, true);
  bool count_no_filter = false;
  count->add_flag("--no-filter", count_no_filter,
                  "count over all sentences, not just those sharing a "
                  "reference n-gram");

  CLI::App* export_lp =
      app.add_subcommand("export-lp", "write the ILP as a CPLEX LP file");
  add_common_options(export_lp, opts, true);
  export_lp->add_option("--lp-out", lp_path, "LP file destination")
      ->required();

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "score a system summary against the oracle family");
  add_common_options(evaluate, opts, true);
  evaluate->add_option("--system", system_ids,
                       "system summary sentence ids, comma separated");
  evaluate->add_option("--system-file", system_file,
                       "file of sentence ids (whitespace or JSON array)");
  evaluate->add_option("--oracles", oracles_file,
                       "oracle family JSON (enumerate output); computed "
                       "when omitted");
  evaluate->add_option("--random-single", random_single,
                       "also evaluate N random single-oracle draws");

  CLI::App* bench = app.add_subcommand(
      "bench", "search-space statistics over a directory of tasks");
  add_common_options(bench, opts, false);
  bench->add_option("task_dir", bench_dir, "directory of task JSON files")
      ->required();

  try {
    app.parse(argc, argv);
    finalize_overrides(opts);
    if (oracle->parsed()) return cmd_oracle(opts);
    if (enumerate->parsed()) return cmd_enumerate(opts);
    if (greedy->parsed()) return cmd_greedy(opts);
    if (count->parsed()) return cmd_count(opts, count_no_filter);
    if (export_lp->parsed()) return cmd_export_lp(opts, lp_path);
    if (evaluate->parsed())
      return cmd_evaluate(opts, system_ids, system_file, oracles_file,
                          random_single);
    if (bench->parsed()) return cmd_bench(opts, bench_dir);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "oracle_summ: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "oracle_summ: " << e.what() << "\n";
    return 3;
  }
}
