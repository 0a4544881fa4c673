#include "zigzag/io.hpp"

#include <json.hpp>

namespace zigzag {

namespace {

nlohmann::json parse_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("malformed JSON");
  return doc;
}

}  // namespace

ComplexFile parse_complex_file(const std::string& text) {
  const nlohmann::json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("faces") || !doc["faces"].is_array())
    throw ParseError("expected an object with a \"faces\" array");

  std::vector<Face> faces;
  for (const auto& jface : doc["faces"]) {
    if (!jface.is_array()) throw ParseError("face must be an array of vertex tokens");
    std::vector<VertexId> boundary;
    for (const auto& jv : jface) {
      if (!jv.is_string()) throw ParseError("vertex token must be a string");
      boundary.push_back(jv.get<std::string>());
    }
    faces.emplace_back(std::move(boundary));
  }

  ComplexFile out{SurfaceComplex(std::move(faces)), std::nullopt};
  if (doc.contains("tau")) {
    if (!doc["tau"].is_array()) throw ParseError("\"tau\" must be an array of 0/1");
    ZOrientation tau;
    for (const auto& jb : doc["tau"]) {
      if (!jb.is_number_integer() || (jb.get<int>() != 0 && jb.get<int>() != 1))
        throw ParseError("\"tau\" entries must be 0 or 1");
      tau.bits.push_back(static_cast<std::uint8_t>(jb.get<int>()));
    }
    out.tau = std::move(tau);
  }
  return out;
}

SurfaceComplex parse_complex(const std::string& text) {
  return parse_complex_file(text).complex;
}

std::string serialize_complex(const SurfaceComplex& c, const ZOrientation* tau) {
  nlohmann::json doc;
  auto& jfaces = doc["faces"] = nlohmann::json::array();
  for (const Face& f : c.faces()) jfaces.push_back(f.boundary());
  if (tau) {
    auto& jtau = doc["tau"] = nlohmann::json::array();
    for (auto b : tau->bits) jtau.push_back(static_cast<int>(b));
  }
  return doc.dump(2) + "\n";
}

}  // namespace zigzag
