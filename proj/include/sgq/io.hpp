// Copyright 2026 the sgq developers
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

#pragma once

#include <string>

#include "sgq/constructions.hpp"
#include "sgq/quiver.hpp"

namespace sgq {

//! Semigroup files carry either an explicit table
//! {"order": n, "table": [[...]], "identity": i|null, "labels": [...]}
//! or a generator description
//! {"generators": {"degree": m, "maps": [[...], ...]}, "adjoin_identity": b}.
FiniteSemigroup parse_semigroup_json(const std::string& text, size_t element_cap);

//! Generator files: {"degree": m, "maps": [[...], ...]}.
std::vector<std::vector<int>> parse_generators_json(const std::string& text,
                                                    int* degree);

//! Character-table files, validated against the intended group:
//! {"group_order": N, "conductor": m, "classes": [{"rep": i, "size": s}, ...],
//!  "irreducibles": [{"label": str, "values": [[exp,num,den], ...]}, ...]}.
//! A value is the sum of (num/den) * zeta_m^exp over its triples; the class
//! list fixes the column order.
CharacterTable parse_character_table_json(const std::string& text,
                                          const Subsemigroup& G);

std::string quiver_to_json(const QuiverGraph& q);
std::string quiver_to_dot(const QuiverGraph& q);
std::string quiver_to_text(const QuiverGraph& q);

std::string analyze_report(const Analysis& A, bool as_json);
std::string directed_report(const Analysis& A, const DirectednessReport& rep,
                            bool as_json);
std::string nico_report(const Analysis& A, const NicoData& nd, bool as_json);
std::string cartan_report(const Analysis& A, const CartanResult& cr,
                          bool as_json);

}  // namespace sgq
