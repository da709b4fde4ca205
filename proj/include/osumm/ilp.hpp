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

#ifndef OSUMM_ILP_HPP
#define OSUMM_ILP_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "osumm/bank.hpp"
#include "osumm/search.hpp"

namespace osumm::ilp {

// 0-1 ILP whose optimum is the exact oracle numerator: binaries x_i pick
// sentences, integer z_kj variables count covered occurrences of the j-th
// gram of reference k, clipped by supply (chosen sentences) and demand
// (the reference count). Solver-agnostic; write_lp_file serializes it.
struct IlpModel {
  uint64_t l_max = 0;
  std::vector<uint32_t> lengths;        // per sentence x_i
  std::vector<uint32_t> demand;         // per slot z_kj: N(g_j, R_k)
  std::vector<std::pair<uint32_t, uint32_t>> ref_ranges;  // slots per k
  // per slot: (sentence id, N(g_j, s_i)) for sentences containing the gram
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> supply;
  uint64_t denominator = 0;

  size_t num_sentences() const { return lengths.size(); }
  size_t num_slots() const { return demand.size(); }
  size_t num_refs() const { return ref_ranges.size(); }

  // Deterministic variable names: x_<i> and z_<k>_<j> with j the index of
  // the gram in the lexicographic order of U(R_k).
  std::string x_name(size_t i) const;
  std::string z_name(size_t slot) const;
};

IlpModel build_ilp(const ReferenceBank& bank, search::Budget budget);

Score objective_to_rouge(const IlpModel& model, uint64_t objective_value);

// Objective of the optimal completion for a fixed sentence choice:
// each z_kj set to min(demand, supplied count). Throws when the choice
// violates the length constraint.
uint64_t evaluate_assignment(const IlpModel& model,
                             std::span<const uint32_t> chosen);

// CPLEX LP text: Maximize / Subject To (len, sup_k_j, dem_k_j) / Bounds /
// Generals / Binaries / End. ASCII, LF line endings, fixed ordering; two
// builds of the same task serialize byte-identically.
void write_lp_file(const IlpModel& model, std::ostream& out);
void write_lp_file(const IlpModel& model, const std::string& path);

}  // namespace osumm::ilp

#endif  // OSUMM_ILP_HPP
