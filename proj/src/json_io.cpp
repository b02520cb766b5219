#include "gli/json_io.hpp"

namespace gli {

Json strategy_to_json(const MixedStrategy& strategy) {
  Json atoms = Json::array();
  for (const auto& a : strategy.atoms) atoms.push_back(Json{{"x", a.location}, {"m", a.mass}});
  Json segments = Json::array();
  for (const auto& s : strategy.segments)
    segments.push_back(Json{{"lo", s.lo}, {"hi", s.hi}, {"m", s.mass}});
  return Json{{"atoms", std::move(atoms)}, {"segments", std::move(segments)}};
}

MixedStrategy strategy_from_json(const Json& json) {
  MixedStrategy out;
  try {
    for (const auto& a : json.at("atoms"))
      out.atoms.push_back(Atom{a.at("x").get<double>(), a.at("m").get<double>()});
    for (const auto& s : json.at("segments"))
      out.segments.push_back(
          Segment{s.at("lo").get<double>(), s.at("hi").get<double>(), s.at("m").get<double>()});
  } catch (const nlohmann::json::exception& e) {
    throw MalformedStrategy(std::string("bad strategy json: ") + e.what());
  }
  return canonicalize(std::move(out));
}

}  // namespace gli
