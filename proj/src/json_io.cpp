#include "msr/json_io.hpp"

#include <json.hpp>

namespace msr {

std::string representation_to_json(const OrthogonalRepresentation& rep) {
  nlohmann::ordered_json j;
  j["graph6"] = graph6_encode(rep.graph);
  j["order"] = rep.order;
  j["dimension"] = rep.dimension;
  nlohmann::ordered_json vecs = nlohmann::ordered_json::array();
  for (const auto& v : rep.vectors) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& z : v) row.push_back(to_string(z));
    vecs.push_back(row);
  }
  j["vectors"] = vecs;
  return j.dump(2) + "\n";
}

OrthogonalRepresentation representation_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw format_error(std::string("representation JSON: ") + e.what());
  }
  OrthogonalRepresentation rep;
  try {
    rep.graph = graph6_decode(j.at("graph6").get<std::string>());
    rep.order = j.at("order").get<std::vector<int>>();
    rep.dimension = j.at("dimension").get<int>();
    for (const auto& row : j.at("vectors")) {
      std::vector<BigInt> v;
      for (const auto& entry : row) {
        if (!entry.is_string()) throw format_error("vector entries must be decimal strings");
        v.emplace_back(entry.get<std::string>(), 10);
      }
      rep.vectors.push_back(std::move(v));
    }
  } catch (const nlohmann::json::exception& e) {
    throw format_error(std::string("representation JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw format_error(std::string("representation JSON: ") + e.what());
  }
  if (static_cast<int>(rep.order.size()) != rep.graph.order() ||
      static_cast<int>(rep.vectors.size()) != rep.graph.order())
    throw format_error("representation JSON: size mismatch");
  for (const auto& v : rep.vectors)
    if (static_cast<int>(v.size()) != rep.dimension)
      throw format_error("representation JSON: vector dimension mismatch");
  return rep;
}

}  // namespace msr
