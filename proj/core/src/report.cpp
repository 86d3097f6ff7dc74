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

#include "nkstar/report.hpp"

#include <charconv>

#include "nkstar/errors.hpp"

namespace nkstar {

using nlohmann::json;

VertexNamer star_namer(const StarGraph& g) {
  return [&g](VertexId v) { return g.vertex_name(v); };
}

VertexParser star_parser(const StarGraph& g) {
  return [&g](const std::string& s) { return g.parse_vertex(s); };
}

VertexNamer id_namer() {
  return [](VertexId v) { return std::to_string(v); };
}

VertexParser id_parser() {
  return [](const std::string& s) {
    VertexId v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw DomainError("malformed vertex id '" + s + "'");
    }
    return v;
  };
}

json vertex_list_json(const VertexSet& s, const VertexNamer& name) {
  json out = json::array();
  s.for_each([&](VertexId v) { out.push_back(name(v)); });
  return out;
}

VertexSet vertex_set_from_json(const json& j, std::size_t order,
                               const VertexParser& parse) {
  VertexSet s(order);
  for (const auto& item : j) {
    const VertexId v = parse(item.get<std::string>());
    s.check(v);
    s.set(v);
  }
  return s;
}

json to_json(const CutCertificate& c, const VertexNamer& name) {
  return {{"S", vertex_list_json(c.cut, name)},
          {"X", vertex_list_json(c.witness, name)},
          {"h", c.h},
          {"size", c.size},
          {"valid", c.valid},
          {"diagnostic", c.diagnostic}};
}

CutCertificate cut_certificate_from_json(const json& j, std::size_t order,
                                         const VertexParser& parse) {
  CutCertificate c;
  c.cut = vertex_set_from_json(j.at("S"), order, parse);
  c.witness = vertex_set_from_json(j.at("X"), order, parse);
  c.h = j.at("h").get<int>();
  c.size = j.at("size").get<std::size_t>();
  c.valid = j.at("valid").get<bool>();
  c.diagnostic = j.at("diagnostic").get<std::string>();
  if (c.size != c.cut.count()) throw DomainError("certificate size mismatch");
  return c;
}

json to_json(const SearchResult& r, const VertexNamer& name) {
  json levels = json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"size", l.size},
                      {"candidates", l.candidates},
                      {"total", l.total},
                      {"hit", l.hit},
                      {"complete", l.complete}});
  }
  return {{"h", r.h},
          {"order", r.order},
          {"value", r.value ? json(*r.value) : json("none-found")},
          {"certificate", r.certificate ? to_json(*r.certificate, name) : json(nullptr)},
          {"exhaustive-below", r.exhaustive_below},
          {"lower-bound-start", r.lower_bound_start},
          {"upper-bound", r.upper_bound ? json(*r.upper_bound) : json(nullptr)},
          {"candidates-examined", r.candidates_examined},
          {"elapsed-ms", r.elapsed_ms},
          {"budget-hit", r.budget_hit},
          {"levels", levels}};
}

SearchResult search_result_from_json(const json& j, const VertexParser& parse) {
  SearchResult r;
  r.h = j.at("h").get<int>();
  r.order = j.at("order").get<std::size_t>();
  if (j.at("value").is_number()) r.value = j.at("value").get<std::size_t>();
  else if (j.at("value") != "none-found") throw DomainError("bad search value");
  if (!j.at("certificate").is_null()) {
    r.certificate = cut_certificate_from_json(j.at("certificate"), r.order, parse);
  }
  r.exhaustive_below = j.at("exhaustive-below").get<std::size_t>();
  r.lower_bound_start = j.at("lower-bound-start").get<std::size_t>();
  if (!j.at("upper-bound").is_null()) r.upper_bound = j.at("upper-bound").get<std::size_t>();
  r.candidates_examined = j.at("candidates-examined").get<std::uint64_t>();
  r.elapsed_ms = j.at("elapsed-ms").get<double>();
  r.budget_hit = j.at("budget-hit").get<bool>();
  for (const auto& l : j.at("levels")) {
    r.levels.push_back({l.at("size").get<std::size_t>(),
                        l.at("candidates").get<std::uint64_t>(),
                        l.at("total").get<std::uint64_t>(), l.at("hit").get<bool>(),
                        l.at("complete").get<bool>()});
  }
  if (r.value && (!r.certificate || r.certificate->size != *r.value)) {
    throw DomainError("search value without matching certificate");
  }
  return r;
}

json to_json(const VerificationReport& r, const VertexNamer& name) {
  json params = {{"n", r.parameters.n}, {"k", r.parameters.k}};
  if (r.parameters.h) params["h"] = *r.parameters.h;
  if (r.parameters.t) params["t"] = *r.parameters.t;
  return {{"target", r.target},
          {"parameters", params},
          {"status", to_string(r.status)},
          {"counters", r.counters},
          {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)},
          {"notes", r.notes},
          {"search", r.search ? to_json(*r.search, name) : json(nullptr)},
          {"elapsed-ms", r.elapsed_ms}};
}

VerificationReport verification_report_from_json(const json& j,
                                                 const VertexParser& parse) {
  VerificationReport r;
  r.target = j.at("target").get<std::string>();
  const auto& p = j.at("parameters");
  r.parameters.n = p.at("n").get<int>();
  r.parameters.k = p.at("k").get<int>();
  if (p.contains("h")) r.parameters.h = p.at("h").get<int>();
  if (p.contains("t")) r.parameters.t = p.at("t").get<int>();
  r.status = parse_report_status(j.at("status").get<std::string>());
  r.counters = j.at("counters").get<std::map<std::string, std::int64_t>>();
  if (!j.at("counterexample").is_null()) {
    r.counterexample = j.at("counterexample").get<std::string>();
  }
  r.notes = j.at("notes").get<std::vector<std::string>>();
  if (!j.at("search").is_null()) r.search = search_result_from_json(j.at("search"), parse);
  r.elapsed_ms = j.at("elapsed-ms").get<double>();
  return r;
}

json to_json(const ProjectionAnalysis& a, const VertexNamer& name) {
  auto names = [&](const std::vector<VertexId>& vs) {
    json out = json::array();
    for (VertexId v : vs) out.push_back(name(v));
    return out;
  };
  json slices = json::array();
  for (const auto& s : a.slices) {
    json js = {{"i", s.i},
               {"X_i", names(s.x)},
               {"Y_i", names(s.y)},
               {"S_i", names(s.s)}};
    if (s.s_is_lower_cut) {
      js["S_i-is-lower-cut"] = *s.s_is_lower_cut;
      js["diagnostic"] = s.diagnostic;
    }
    slices.push_back(std::move(js));
  }
  return {{"t", a.t},
          {"cut-size", a.cut_size},
          {"X", names(a.x)},
          {"Y-size", a.y.size()},
          {"J", a.j},
          {"J-prime", a.j_prime},
          {"T", a.t_set},
          {"slices", slices},
          {"slices-are-lower-cuts", a.slices_are_lower_cuts},
          {"covers-alphabet", a.covers_alphabet},
          {"product-bound", a.product_bound},
          {"product-bound-holds", a.product_bound_holds},
          {"witness-note", a.witness_note}};
}

json make_document(const std::string& command, json parameters,
                   const std::string& status, json body) {
  json doc = std::move(body);
  if (!doc.is_object()) doc = json::object();
  doc["schema-version"] = kSchemaVersion;
  doc["command"] = command;
  doc["parameters"] = std::move(parameters);
  doc["status"] = status;
  return doc;
}

json strip_volatile(json j) {
  if (j.is_object()) {
    j.erase("elapsed-ms");
    j.erase("created-at");
    for (auto& [key, value] : j.items()) value = strip_volatile(std::move(value));
  } else if (j.is_array()) {
    for (auto& value : j) value = strip_volatile(std::move(value));
  }
  return j;
}

}  // namespace nkstar
