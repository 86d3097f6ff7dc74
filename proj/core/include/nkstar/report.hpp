// Copyright 2026 The nkstar Authors
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

#ifndef NKSTAR_REPORT_HPP
#define NKSTAR_REPORT_HPP

#include <functional>
#include <string>

#include <nlohmann/json.hpp>

#include "nkstar/cut_projection.hpp"
#include "nkstar/fault_tolerance.hpp"
#include "nkstar/verification.hpp"

namespace nkstar {

/// Version of the report layout. Bumping it invalidates cached entries.
inline constexpr int kSchemaVersion = 1;

using VertexNamer = std::function<std::string(VertexId)>;
using VertexParser = std::function<VertexId(const std::string&)>;

/// Vertex names as textual permutations.
VertexNamer star_namer(const StarGraph& g);
VertexParser star_parser(const StarGraph& g);
/// Plain decimal IDs, for graphs without permutation labels.
VertexNamer id_namer();
VertexParser id_parser();

nlohmann::json vertex_list_json(const VertexSet& s, const VertexNamer& name);
VertexSet vertex_set_from_json(const nlohmann::json& j, std::size_t order,
                               const VertexParser& parse);

nlohmann::json to_json(const CutCertificate& c, const VertexNamer& name);
CutCertificate cut_certificate_from_json(const nlohmann::json& j, std::size_t order,
                                         const VertexParser& parse);

nlohmann::json to_json(const SearchResult& r, const VertexNamer& name);
SearchResult search_result_from_json(const nlohmann::json& j,
                                     const VertexParser& parse);

nlohmann::json to_json(const VerificationReport& r, const VertexNamer& name);
VerificationReport verification_report_from_json(const nlohmann::json& j,
                                                 const VertexParser& parse);

nlohmann::json to_json(const ProjectionAnalysis& a, const VertexNamer& name);

/// Top-level document: {"schema-version", "command", "parameters", "status",
/// ...body}. Keys are emitted in sorted order, so dumps are deterministic.
nlohmann::json make_document(const std::string& command,
                             nlohmann::json parameters, const std::string& status,
                             nlohmann::json body);

/// Copy with every "elapsed-ms" and "created-at" member removed, recursively.
/// Two runs with equal inputs produce equal stripped documents.
nlohmann::json strip_volatile(nlohmann::json j);

}  // namespace nkstar

#endif  // NKSTAR_REPORT_HPP
