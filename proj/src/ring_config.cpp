#include "chevalley/ring_config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace chev {

namespace {

using nlohmann::json;

Integer to_integer(json const& v, char const* what) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()), 10);
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>(), 10);
    } catch (std::invalid_argument const&) {
    }
  }
  throw InvalidRing(std::string("expected an integer for ") + what);
}

}  // namespace

RingPtr parse_ring_config(std::string const& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (json::parse_error const& e) {
    throw InvalidRing(std::string("ring config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw InvalidRing("ring config needs a string field \"kind\"");
  }
  auto kind = doc["kind"].get<std::string>();
  RingPtr ring;
  if (kind == "integers") {
    ring = RingSpec::integers();
  } else if (kind == "modular") {
    if (!doc.contains("modulus")) throw InvalidRing("modular ring needs \"modulus\"");
    if (doc.contains("localize_at")) throw InvalidRing("cannot localize a modular ring");
    return RingSpec::modular(to_integer(doc["modulus"], "modulus"));
  } else if (kind == "order") {
    if (!doc.contains("rank") || !doc.contains("mul_table") || !doc["mul_table"].is_array()) {
      throw InvalidRing("order needs \"rank\" and an array \"mul_table\"");
    }
    auto rank = to_integer(doc["rank"], "rank");
    if (rank < 1 || rank > 64) throw InvalidRing("order rank out of range");
    std::vector<Integer> table;
    for (auto const& v : doc["mul_table"]) table.push_back(to_integer(v, "mul_table entry"));
    ring = RingSpec::order(rank.get_ui(), std::move(table));
  } else {
    throw InvalidRing("unknown ring kind \"" + kind + "\"");
  }

  if (doc.contains("localize_at")) {
    auto const& at = doc["localize_at"];
    Coords u;
    if (at.is_array()) {
      for (auto const& v : at) u.push_back(to_integer(v, "localize_at"));
    } else {
      u.push_back(to_integer(at, "localize_at"));
      u.resize(ring->basis_size(), Integer(0));
    }
    ring = RingSpec::localized(ring, std::move(u));
  }
  return ring;
}

RingPtr load_ring_config(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw InvalidRing("cannot open ring config " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ring_config(ss.str());
}

}  // namespace chev
