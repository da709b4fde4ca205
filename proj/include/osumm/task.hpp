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

#ifndef OSUMM_TASK_HPP
#define OSUMM_TASK_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "osumm/bank.hpp"
#include "osumm/text.hpp"

namespace osumm::task {

// One summarization task: raw documents and reference summaries plus the
// scoring configuration. Mirrors the JSON task schema (schema_version 1).
struct TaskSpec {
  std::string name;  // source file, for diagnostics
  int n = 0;         // 0 = unset
  int64_t l_max = -1;
  std::vector<std::vector<std::string>> documents;   // raw sentences per doc
  std::vector<std::vector<std::string>> references;  // raw sentences per ref
  std::optional<bool> lowercase;
  std::optional<bool> stemming;
  std::optional<bool> stopword_removal;
  std::optional<bool> ref_cross_sentences;
  std::optional<std::string> stopword_file;
  std::optional<std::string> length_mode;  // "raw" | "tokens"
};

// Command-line overrides; they win over task-file fields.
struct Overrides {
  int n = 0;
  int64_t l_max = -1;
  std::optional<bool> stemming;
  std::optional<bool> stopword_removal;
  std::optional<std::string> stopword_file;
  std::optional<bool> ref_cross_sentences;
  std::optional<std::string> length_mode;
};

TaskSpec load_task_json(const std::string& path);

// One sentence per line; blank lines skipped.
std::vector<std::string> load_sentence_file(const std::string& path);

// Fully resolved task: preprocessing applied and the bank built.
struct PreparedTask {
  std::string name;
  int n = 1;
  uint64_t l_max = 1;
  text::PreprocessConfig cfg;
  text::DocumentSet docs;
  std::vector<text::ReferenceSummary> refs;
  std::unique_ptr<ReferenceBank> bank;
};

// Resolution order for every knob: override > task field > default.
// By default ROUGE_1 removes stopwords and ROUGE_2 keeps them; stemming
// and lowercasing are on.
PreparedTask prepare(const TaskSpec& spec, const Overrides& overrides);

}  // namespace osumm::task

#endif  // OSUMM_TASK_HPP
