#include "kcycle/document.hpp"

#include <stdexcept>

namespace kcycle {

Json setup_json(const Setup& setup) {
  Json j;
  j["kind"] = std::string(to_string(setup.kind));
  j["n"] = setup.n;
  j["k"] = setup.k;
  if (setup.kind == Kind::GLpq) {
    j["p"] = setup.p;
    j["q"] = setup.q;
  }
  return j;
}

Json cycle_json(const CharacteristicCycle& cc) {
  Json terms = Json::array();
  for (const auto& [orbit, mult] : cc.terms)
    terms.push_back(Json{{"orbit", orbit.label()}, {"multiplicity", mult}});
  return Json{{"orbit", cc.target.label()}, {"terms", std::move(terms)}};
}

Json verdict_json(const MicrolocalVerdict& verdict) {
  Json j{{"target", verdict.target.label()},
         {"stratum", verdict.stratum.label()},
         {"resolution", std::string(to_string(verdict.resolution))},
         {"trials", verdict.trials},
         {"empty", verdict.empty_in_all_trials},
         {"strict_hypothesis", verdict.within_strict_hypothesis}};
  if (verdict.witness) j["witness_dims"] = {verdict.witness->v.dim(), verdict.witness->w.dim()};
  return j;
}

Json smallness_json(const SmallnessResult& result) {
  Json strata = Json::array();
  for (const auto& row : result.strata)
    strata.push_back(Json{{"stratum", row.stratum.label()},
                          {"fiber_dim", row.fiber_dim},
                          {"codim", row.codim},
                          {"ok", row.ok}});
  return Json{{"target", result.target.label()},
              {"resolution", std::string(to_string(result.kind))},
              {"small", result.small},
              {"strata", std::move(strata)}};
}

Json tally_json(const TransversalityTally& tally) {
  return Json{{"normalized_k", tally.setup.k},
              {"charts", tally.charts},
              {"points", tally.points},
              {"transversal", tally.transversal}};
}

Json make_document(std::string_view command, const Json& setup, Json payload) {
  return Json{{"schema_version", std::string(kSchemaVersion)},
              {"command", std::string(command)},
              {"setup", setup},
              {"payload", std::move(payload)}};
}

Json parse_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("schema_version") ||
      doc["schema_version"] != std::string(kSchemaVersion))
    throw std::invalid_argument("document is not a kcycle/1 document");
  for (const char* key : {"command", "setup", "payload"})
    if (!doc.contains(key)) throw std::invalid_argument(std::string("document lacks ") + key);
  return doc;
}

std::string render(const Json& document) { return document.dump(2) + "\n"; }

}  // namespace kcycle
