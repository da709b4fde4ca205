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

#include "osumm/ilp.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "osumm/error.hpp"

namespace osumm::ilp {

std::string IlpModel::x_name(size_t i) const {
  return "x_" + std::to_string(i);
}

std::string IlpModel::z_name(size_t slot) const {
  size_t k = 0;
  while (k < ref_ranges.size() && slot >= ref_ranges[k].second) ++k;
  const size_t j = slot - ref_ranges[k].first;
  return "z_" + std::to_string(k) + "_" + std::to_string(j);
}

IlpModel build_ilp(const ReferenceBank& bank, search::Budget budget) {
  bank.require_scorable();
  IlpModel model;
  model.l_max = budget.l_max;
  model.lengths = bank.sentence_lengths();
  model.demand = bank.ref_counts();
  model.ref_ranges.resize(bank.num_refs());
  for (size_t k = 0; k < bank.num_refs(); ++k)
    model.ref_ranges[k] = bank.slot_range(k);
  model.denominator = bank.denominator();

  // supply = transpose of the per-sentence clip-relevant counts
  model.supply.resize(bank.num_slots());
  for (uint32_t id = 0; id < bank.num_sentences(); ++id)
    for (const auto& [slot, count] : bank.sentence_counts(id).items)
      model.supply[slot].emplace_back(id, count);
  return model;
}

Score objective_to_rouge(const IlpModel& model, uint64_t objective_value) {
  return {objective_value, model.denominator};
}

uint64_t evaluate_assignment(const IlpModel& model,
                             std::span<const uint32_t> chosen) {
  std::vector<char> picked(model.num_sentences(), 0);
  uint64_t length = 0;
  for (const uint32_t id : chosen) {
    if (id >= model.num_sentences())
      throw Error::validation("sentence id " + std::to_string(id) +
                              " out of range");
    if (picked[id]) continue;
    picked[id] = 1;
    length += model.lengths[id];
  }
  if (length > model.l_max)
    throw Error::validation("assignment violates the length constraint: " +
                            std::to_string(length) + " > " +
                            std::to_string(model.l_max));
  uint64_t objective = 0;
  for (size_t slot = 0; slot < model.num_slots(); ++slot) {
    uint64_t supplied = 0;
    for (const auto& [id, count] : model.supply[slot])
      if (picked[id]) supplied += count;
    objective += std::min<uint64_t>(model.demand[slot], supplied);
  }
  return objective;
}

namespace {

// Writes one constraint/objective body with deterministic wrapping;
// continuation lines are indented.
class RowWriter {
 public:
  explicit RowWriter(std::ostream& out) : out_(out) {}

  void begin(const std::string& label) {
    line_ = " " + label + ":";
    first_term_ = true;
  }

  void term(int64_t coeff, const std::string& var) {
    std::string text;
    if (coeff < 0)
      text = first_term_ ? "-" : "- ";
    else if (!first_term_)
      text = "+ ";
    const uint64_t mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) text += std::to_string(mag) + " ";
    text += var;
    append(text);
    first_term_ = false;
  }

  void relation(const std::string& op, uint64_t rhs) {
    append(op + " " + std::to_string(rhs));
  }

  void end() {
    out_ << line_ << "\n";
    line_.clear();
  }

 private:
  void append(const std::string& text) {
    if (line_.size() + text.size() + 1 > 72) {
      out_ << line_ << "\n";
      line_ = "   ";
    }
    line_ += " " + text;
  }

  std::ostream& out_;
  std::string line_;
  bool first_term_ = true;
};

}  // namespace

void write_lp_file(const IlpModel& model, std::ostream& out) {
  RowWriter row(out);

  out << "Maximize\n";
  row.begin("obj");
  for (size_t slot = 0; slot < model.num_slots(); ++slot)
    row.term(1, model.z_name(slot));
  row.end();

  out << "Subject To\n";
  row.begin("len");
  for (size_t i = 0; i < model.num_sentences(); ++i)
    row.term(static_cast<int64_t>(model.lengths[i]), model.x_name(i));
  row.relation("<=", model.l_max);
  row.end();

  for (size_t slot = 0; slot < model.num_slots(); ++slot) {
    row.begin("sup_" + model.z_name(slot).substr(2));
    for (const auto& [id, count] : model.supply[slot])
      row.term(static_cast<int64_t>(count), model.x_name(id));
    row.term(-1, model.z_name(slot));
    row.relation(">=", 0);
    row.end();
  }
  for (size_t slot = 0; slot < model.num_slots(); ++slot) {
    row.begin("dem_" + model.z_name(slot).substr(2));
    row.term(1, model.z_name(slot));
    row.relation("<=", model.demand[slot]);
    row.end();
  }

  out << "Bounds\n";
  for (size_t slot = 0; slot < model.num_slots(); ++slot)
    out << " 0 <= " << model.z_name(slot) << " <= " << model.demand[slot]
        << "\n";

  out << "Generals\n";
  {
    std::string line;
    for (size_t slot = 0; slot < model.num_slots(); ++slot) {
      const std::string name = model.z_name(slot);
      if (line.size() + name.size() + 1 > 72) {
        out << line << "\n";
        line.clear();
      }
      line += " " + name;
    }
    if (!line.empty()) out << line << "\n";
  }

  out << "Binaries\n";
  {
    std::string line;
    for (size_t i = 0; i < model.num_sentences(); ++i) {
      const std::string name = model.x_name(i);
      if (line.size() + name.size() + 1 > 72) {
        out << line << "\n";
        line.clear();
      }
      line += " " + name;
    }
    if (!line.empty()) out << line << "\n";
  }

  out << "End\n";
}

void write_lp_file(const IlpModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // LF endings everywhere
  if (!out) throw Error::io("cannot open LP output file: " + path);
  write_lp_file(model, out);
  out.flush();
  if (!out) throw Error::io("failed writing LP file: " + path);
}

}  // namespace osumm::ilp
