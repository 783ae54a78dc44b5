// Copyright 2026 The Dressian Authors.
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


#include "dressian/dressian.h"

#include <cstdlib>
#include <cstring>
#include <initializer_list>
#include <new>
#include <string>

#include "dressian/acceptance.hpp"
#include "dressian/arrangement.hpp"
#include "dressian/errors.hpp"
#include "dressian/formats.hpp"
#include "dressian/pluecker.hpp"
#include "dressian/subdivision.hpp"

struct dr_weight {
  dressian::WeightVector value;
};

struct dr_arrangement {
  dressian::TreeArrangement value;
};

namespace {

using dressian::formats::Json;

thread_local std::string last_error;

dr_status fail(dr_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
dr_status guard(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const dressian::ParseError& e) {
    return fail(DR_ERR_PARSE, e.what());
  } catch (const dressian::ParameterError& e) {
    return fail(DR_ERR_PARAMETER, e.what());
  } catch (const dressian::MembershipError& e) {
    return fail(DR_ERR_MEMBERSHIP, e.what());
  } catch (const dressian::CompatibilityError& e) {
    return fail(DR_ERR_COMPATIBILITY, e.what());
  } catch (const dressian::EmptyConeError& e) {
    return fail(DR_ERR_EMPTY_CONE, e.what());
  } catch (const dressian::NonMaximalConeError& e) {
    return fail(DR_ERR_NON_MAXIMAL, e.what());
  } catch (const dressian::ReconstructionError& e) {
    return fail(DR_ERR_RECONSTRUCTION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DR_ERR_INTERNAL, e.what());
  }
}

char* copy_out(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

dr_status emit(const Json& j, char** out) {
  *out = copy_out(j.dump(2));
  return DR_OK;
}

bool any_null(std::initializer_list<const void*> ptrs) {
  for (const void* p : ptrs) {
    if (p == nullptr) return true;
  }
  return false;
}

dr_status null_argument() { return fail(DR_ERR_NULL_ARGUMENT, "null argument"); }

Json subsets_json(const std::vector<dressian::KSubset>& subsets) {
  Json out = Json::array();
  for (const auto& s : subsets) out.push_back(s.elements());
  return out;
}

Json whitehead_json(const dressian::WhiteheadDiff& d) {
  return Json{{"relation", dressian::relation_name(d.relation)}, {"differing", d.differing}};
}

}  // namespace

extern "C" {

const char* dr_last_error(void) { return last_error.c_str(); }

const char* dr_status_name(dr_status status) {
  switch (status) {
    case DR_OK: return "ok";
    case DR_ERR_PARSE: return "parse error";
    case DR_ERR_PARAMETER: return "parameter error";
    case DR_ERR_MEMBERSHIP: return "membership error";
    case DR_ERR_COMPATIBILITY: return "compatibility error";
    case DR_ERR_EMPTY_CONE: return "empty cone";
    case DR_ERR_NON_MAXIMAL: return "non-maximal cone";
    case DR_ERR_RECONSTRUCTION: return "reconstruction error";
    case DR_ERR_INFEASIBLE: return "infeasible";
    case DR_ERR_INTERNAL: return "internal error";
    case DR_ERR_NULL_ARGUMENT: return "null argument";
  }
  return "unknown status";
}

void dr_string_free(char* text) { std::free(text); }

dr_status dr_weight_from_json(const char* json, dr_weight** out) {
  if (any_null({json, out})) return null_argument();
  return guard([&] {
    auto w = dressian::formats::weight_from_json(dressian::formats::parse_document(json));
    *out = new dr_weight{std::move(w)};
    return DR_OK;
  });
}

dr_status dr_weight_to_json(const dr_weight* w, const char* ordering, char** out) {
  if (any_null({w, out})) return null_argument();
  return guard([&] {
    const auto o = dressian::formats::parse_ordering(ordering ? ordering : "lex");
    return emit(dressian::formats::weight_to_json(w->value, o), out);
  });
}

void dr_weight_free(dr_weight* w) { delete w; }

dr_status dr_check(const dr_weight* w, char** out) {
  if (any_null({w, out})) return null_argument();
  return guard([&] {
    const auto check = dressian::is_in_dressian(w->value);
    Json j{{"member", check.member}};
    const bool has_relations = w->value.k() >= 2 && w->value.n() - w->value.k() >= 2;
    j["relations"] = has_relations ? dressian::relations_for(w->value.k(), w->value.n()).size() : 0;
    if (check.failing) {
      Json values = Json::array();
      for (const auto& v : check.failing_values) values.push_back(dressian::to_string(v));
      j["failing"] = Json{{"relation", check.failing->to_string()}, {"values", values}};
      j["signature"] = nullptr;
    } else {
      j["failing"] = nullptr;
      j["signature"] = dressian::cone_signature(w->value).str();
    }
    return emit(j, out);
  });
}

dr_status dr_subdivide(const dr_weight* w, int certify, char** out) {
  if (any_null({w, out})) return null_argument();
  return guard([&] {
    return emit(dressian::formats::subdivision_to_json(dressian::regular_subdivision(w->value),
                                                       certify != 0),
                out);
  });
}

dr_status dr_arrange(const dr_weight* w, char** out) {
  if (any_null({w, out})) return null_argument();
  return guard([&] {
    return emit(dressian::formats::arrangement_to_json(dressian::arrangement_from_weight(w->value)),
                out);
  });
}

dr_status dr_arrangement_from_json(const char* json, dr_arrangement** out) {
  if (any_null({json, out})) return null_argument();
  return guard([&] {
    auto a = dressian::formats::arrangement_from_json(dressian::formats::parse_document(json));
    *out = new dr_arrangement{std::move(a)};
    return DR_OK;
  });
}

dr_status dr_arrangement_to_json(const dr_arrangement* a, char** out) {
  if (any_null({a, out})) return null_argument();
  return guard([&] { return emit(dressian::formats::arrangement_to_json(a->value), out); });
}

void dr_arrangement_free(dr_arrangement* a) { delete a; }

dr_status dr_pi(const dr_arrangement* a, char** out) {
  if (any_null({a, out})) return null_argument();
  return guard([&] {
    return emit(dressian::formats::weight_to_json(dressian::weight_from_arrangement(a->value)), out);
  });
}

dr_status dr_metrize(const dr_arrangement* a, char** out) {
  if (any_null({a, out})) return null_argument();
  return guard([&] {
    const auto m = dressian::metrize_abstract_arrangement(a->value);
    if (!m) return fail(DR_ERR_INFEASIBLE, "no metrization satisfies the compatibility equalities");
    return emit(dressian::formats::arrangement_to_json(*m), out);
  });
}

dr_status dr_cherries(const dr_arrangement* a, char** out) {
  if (any_null({a, out})) return null_argument();
  return guard([&] { return emit(subsets_json(dressian::arrangement_cherries(a->value)), out); });
}

dr_status dr_compare(const dr_arrangement* a, const dr_arrangement* b, char** out) {
  if (any_null({a, b, out})) return null_argument();
  return guard([&] {
    return emit(whitehead_json(dressian::generalized_whitehead_diff(a->value, b->value)), out);
  });
}

dr_status dr_adjacent(const dr_weight* w, char** out) {
  if (any_null({w, out})) return null_argument();
  return guard([&] {
    namespace fm = dressian::formats;
    const auto report = dressian::adjacent_cones(w->value);
    const auto source = dressian::arrangement_from_weight(w->value);
    Json adjacent = Json::array();
    for (const auto& a : report.adjacent) {
      const auto arr = dressian::arrangement_from_weight(a.representative);
      std::size_t facet = 0;
      while (facet < report.facets.size() && report.facets[facet].normal != a.facet.normal) ++facet;
      Json entry = whitehead_json(dressian::generalized_whitehead_diff(source, arr));
      entry["facet"] = facet;
      entry["signature"] = a.signature.str();
      entry["weight"] = fm::weight_to_json(a.representative);
      entry["arrangement"] = fm::arrangement_to_json(arr);
      entry["cherries"] = subsets_json(dressian::arrangement_cherries(arr));
      adjacent.push_back(std::move(entry));
    }
    Json j{{"source", Json{{"signature", report.source.str()},
                           {"dimension", report.dimension},
                           {"cherries", subsets_json(dressian::arrangement_cherries(source))}}},
           {"facets", report.facets.size()},
           {"boundary_facets", report.boundary.size()},
           {"adjacent", adjacent}};
    return emit(j, out);
  });
}

dr_status dr_ingest_fan(const char* json, char** out, int* all_members) {
  if (any_null({json, out, all_members})) return null_argument();
  return guard([&] {
    namespace fm = dressian::formats;
    const auto fan = fm::fan_from_json(fm::parse_document(json));
    *all_members = 1;
    Json cones = Json::array();
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
      const auto point = fm::fan_cone_point(fan, c);
      const bool member = dressian::is_in_dressian(point).member;
      Json entry{{"index", c}, {"rays", fan.cones[c]}, {"point", fm::weight_to_json(point)},
                 {"member", member}};
      if (member) {
        entry["signature"] = dressian::cone_signature(point).str();
        const bool has_trees = fan.k >= 2 && fan.n - fan.k >= 1;
        entry["arrangement"] =
            has_trees ? fm::arrangement_to_json(dressian::arrangement_from_weight(point)) : Json();
      } else {
        *all_members = 0;
        entry["signature"] = nullptr;
        entry["arrangement"] = nullptr;
      }
      cones.push_back(std::move(entry));
    }
    return emit(Json{{"n", fan.n}, {"k", fan.k}, {"cones", cones}}, out);
  });
}

dr_status dr_verify_fixtures(unsigned long long seed, char** out, int* all_passed) {
  if (any_null({out, all_passed})) return null_argument();
  return guard([&] {
    dressian::acceptance::Options options;
    options.seed = seed;
    Json criteria = Json::array();
    bool all = true;
    for (const auto& r : dressian::acceptance::run_all(options)) {
      all = all && r.passed;
      criteria.push_back(Json{{"id", r.id},
                              {"title", r.title},
                              {"passed", r.passed},
                              {"summary", dressian::acceptance::summary_line(r, false)},
                              {"seconds", r.seconds},
                              {"limit_seconds", r.limit_seconds},
                              {"details", r.details}});
    }
    *all_passed = all ? 1 : 0;
    return emit(Json{{"criteria", criteria}, {"all_passed", all}}, out);
  });
}

dr_status dr_fixture_names(char** out) {
  if (out == nullptr) return null_argument();
  return guard([&] { return emit(Json(dressian::formats::fixture_names()), out); });
}

dr_status dr_fixture_json(const char* name, char** out) {
  if (any_null({name, out})) return null_argument();
  return guard([&] { return emit(dressian::formats::fixture_document(name), out); });
}

}  // extern "C"
