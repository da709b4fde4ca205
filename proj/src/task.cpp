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

#include "osumm/task.hpp"

#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "osumm/error.hpp"

namespace osumm::task {
namespace {

using nlohmann::json;

[[noreturn]] void bad_task(const std::string& name, const std::string& what) {
  throw Error::validation(name + ": " + what);
}

std::vector<std::vector<std::string>> parse_sentence_groups(
    const std::string& name, const json& node, const char* field) {
  if (!node.is_array() || node.empty())
    bad_task(name, std::string(field) + " must be a non-empty array");
  std::vector<std::vector<std::string>> groups;
  for (const auto& group : node) {
    if (!group.is_array())
      bad_task(name, std::string(field) +
                         " entries must be arrays of sentence strings");
    std::vector<std::string> sentences;
    for (const auto& sent : group) {
      if (!sent.is_string())
        bad_task(name, std::string(field) + " sentences must be strings");
      sentences.push_back(sent.get<std::string>());
    }
    groups.push_back(std::move(sentences));
  }
  return groups;
}

}  // namespace

TaskSpec load_task_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error::io("cannot open task file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error::validation(path + ": " + e.what());
  }
  if (!doc.is_object()) bad_task(path, "task must be a JSON object");

  TaskSpec spec;
  spec.name = path;
  if (doc.contains("schema_version") &&
      (!doc["schema_version"].is_number_integer() ||
       doc["schema_version"].get<int64_t>() != 1))
    bad_task(path, "unsupported schema_version");

  if (!doc.contains("documents")) bad_task(path, "missing field 'documents'");
  spec.documents = parse_sentence_groups(path, doc["documents"], "documents");
  if (!doc.contains("references"))
    bad_task(path, "missing field 'references'");
  spec.references =
      parse_sentence_groups(path, doc["references"], "references");

  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<int64_t>() < 1)
      bad_task(path, "field 'n' must be an integer >= 1");
    spec.n = doc["n"].get<int>();
  }
  if (doc.contains("l_max")) {
    if (!doc["l_max"].is_number_integer() || doc["l_max"].get<int64_t>() < 1)
      bad_task(path, "field 'l_max' must be an integer >= 1");
    spec.l_max = doc["l_max"].get<int64_t>();
  }

  if (doc.contains("preprocessing")) {
    const json& pp = doc["preprocessing"];
    if (!pp.is_object()) bad_task(path, "'preprocessing' must be an object");
    const auto get_bool = [&](const char* key) -> std::optional<bool> {
      if (!pp.contains(key)) return std::nullopt;
      if (!pp[key].is_boolean())
        bad_task(path, std::string("preprocessing.") + key +
                           " must be a boolean");
      return pp[key].get<bool>();
    };
    spec.lowercase = get_bool("lowercase");
    spec.stemming = get_bool("stemming");
    spec.stopword_removal = get_bool("stopword_removal");
    spec.ref_cross_sentences = get_bool("ref_cross_sentences");
    if (pp.contains("stopword_file")) {
      if (!pp["stopword_file"].is_string())
        bad_task(path, "preprocessing.stopword_file must be a string");
      spec.stopword_file = pp["stopword_file"].get<std::string>();
    }
    if (pp.contains("length_mode")) {
      if (!pp["length_mode"].is_string())
        bad_task(path, "preprocessing.length_mode must be a string");
      spec.length_mode = pp["length_mode"].get<std::string>();
    }
  }
  return spec;
}

std::vector<std::string> load_sentence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error::io("cannot open sentence file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

PreparedTask prepare(const TaskSpec& spec, const Overrides& overrides) {
  PreparedTask out;
  out.name = spec.name;

  out.n = overrides.n > 0 ? overrides.n : (spec.n > 0 ? spec.n : 1);
  const int64_t l_max =
      overrides.l_max > 0 ? overrides.l_max : spec.l_max;
  if (l_max < 1)
    throw Error::validation(spec.name +
                            ": l_max must be given (task field or --lmax)");
  out.l_max = static_cast<uint64_t>(l_max);

  text::PreprocessConfig cfg;
  cfg.n = out.n;
  cfg.lowercase = spec.lowercase.value_or(true);
  cfg.stemming = overrides.stemming.value_or(spec.stemming.value_or(true));
  // ROUGE_1 drops stopwords, ROUGE_2 keeps them, unless told otherwise.
  cfg.stopword_removal = overrides.stopword_removal.value_or(
      spec.stopword_removal.value_or(out.n == 1));
  cfg.ref_cross_sentences = overrides.ref_cross_sentences.value_or(
      spec.ref_cross_sentences.value_or(false));
  const std::string length_mode = overrides.length_mode.value_or(
      spec.length_mode.value_or("raw"));
  if (length_mode == "raw") {
    cfg.length_mode = text::LengthMode::raw_words;
  } else if (length_mode == "tokens") {
    cfg.length_mode = text::LengthMode::retained_tokens;
  } else {
    throw Error::validation(spec.name + ": length_mode must be 'raw' or "
                                        "'tokens', got '" + length_mode + "'");
  }
  std::optional<std::string> stopword_file = overrides.stopword_file;
  if (!stopword_file && spec.stopword_file) {
    // task-file paths resolve relative to the task file itself
    std::filesystem::path p(*spec.stopword_file);
    if (p.is_relative())
      p = std::filesystem::path(spec.name).parent_path() / p;
    stopword_file = p.string();
  }
  if (stopword_file) cfg.stopwords = text::load_stopwords(*stopword_file);

  out.cfg = cfg;
  out.docs = text::make_document_set(spec.documents, cfg);
  if (out.docs.sentences.empty())
    throw Error::validation(spec.name + ": documents contain no sentences");
  try {
    out.refs = text::make_references(spec.references, cfg);
  } catch (const Error& e) {
    throw Error(e.kind(), spec.name + ": " + e.what());
  }

  ReferenceBank::Options opt;
  opt.n = out.n;
  opt.ref_cross_sentences = cfg.ref_cross_sentences;
  opt.length_mode = cfg.length_mode;
  out.bank = std::make_unique<ReferenceBank>(out.refs, out.docs, opt);
  return out;
}

}  // namespace osumm::task
