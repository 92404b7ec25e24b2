#pragma once

// JSON renderings for reports and certificates. The certificate field names
// are part of the CLI contract; keep them stable.

#include <json.hpp>

#include "trisum/search.hpp"
#include "trisum/sumset.hpp"

namespace trisum {

inline nlohmann::json certificate_to_json(const Certificate& cert) {
  return nlohmann::json{
      {"n", cert.config.n},
      {"bound", cert.bound},
      {"achieved", cert.achieved},
      {"witness", cert.witness.values()},
      {"certified_equality", cert.certified_equality},
      {"pool_exhausted", cert.pool_exhausted},
      {"method", to_string(cert.config.method)},
      {"pool_limit", cert.config.pool_limit},
      {"seed", cert.config.seed},
  };
}

inline Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate cert;
  cert.config.n = j.at("n").get<int>();
  cert.config.method = search_method_from_string(j.at("method").get<std::string>());
  cert.config.pool_limit = j.at("pool_limit").get<Element>();
  cert.config.seed = j.at("seed").get<std::uint64_t>();
  cert.witness = ElementSet::from_values(j.at("witness").get<std::vector<Element>>());
  cert.achieved = j.at("achieved").get<std::uint64_t>();
  cert.bound = j.at("bound").get<std::uint64_t>();
  cert.certified_equality = j.at("certified_equality").get<bool>();
  cert.pool_exhausted = j.at("pool_exhausted").get<bool>();
  return cert;
}

inline nlohmann::json report_to_json(const ElementSet& a, Universe u, const SumReport& rep) {
  return nlohmann::json{
      {"universe", to_string(u)},
      {"elements", a.values()},
      {"triple_count", rep.triple_count},
      {"in_universe_triples", rep.in_universe_triples},
      {"distinct_count", rep.distinct_count},
      {"collisions", rep.collisions},
      {"sums", rep.sums},
  };
}

}  // namespace trisum
