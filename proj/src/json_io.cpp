#include "pseudovol/json_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace pseudovol {

namespace {

Vector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    fail(ErrorCode::InvalidInput, where + ": expected a non-empty array");
  }
  Vector v(static_cast<int>(j.size()));
  for (int i = 0; i < v.size(); ++i) {
    if (!j[i].is_number()) {
      fail(ErrorCode::InvalidInput, where + ": entries must be numbers");
    }
    v[i] = j[i].get<double>();
  }
  return v;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

}  // namespace

Json body_to_json(const ConvexBody& body) {
  Json out;
  if (body.mode == ConvexBody::Mode::VertexList) {
    out["mode"] = "vertices";
    Json pts = Json::array();
    for (const Vector& v : body.vertices) pts.push_back(vector_to_json(v));
    out["points"] = pts;
  } else {
    out["mode"] = "facets";
    Json fs = Json::array();
    for (const Facet& f : body.facets) {
      Json jf;
      jf["normal"] = vector_to_json(f.normal);
      jf["measure"] = f.measure;
      fs.push_back(jf);
    }
    out["facets"] = fs;
  }
  if (!body.label.empty()) out["label"] = body.label;
  return out;
}

ConvexBody body_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("mode") || !j["mode"].is_string()) {
    fail(ErrorCode::InvalidInput, "body: expected an object with \"mode\"");
  }
  const std::string mode = j["mode"].get<std::string>();
  const std::string label =
      j.contains("label") && j["label"].is_string() ? j["label"] : "";
  if (mode == "vertices") {
    if (!j.contains("points") || !j["points"].is_array() ||
        j["points"].empty()) {
      fail(ErrorCode::InvalidInput, "body: missing \"points\" array");
    }
    std::vector<Vector> pts;
    for (const Json& p : j["points"]) {
      pts.push_back(vector_from_json(p, "body.points"));
    }
    const int n = static_cast<int>(pts.front().size());
    for (const Vector& p : pts) {
      if (p.size() != n) {
        fail(ErrorCode::InvalidInput, "body.points: inconsistent lengths");
      }
    }
    return body_from_vertices(n, std::move(pts), label);
  }
  if (mode == "facets") {
    if (!j.contains("facets") || !j["facets"].is_array() ||
        j["facets"].empty()) {
      fail(ErrorCode::InvalidInput, "body: missing \"facets\" array");
    }
    std::vector<Facet> facets;
    for (const Json& jf : j["facets"]) {
      if (!jf.is_object() || !jf.contains("normal") ||
          !jf.contains("measure") || !jf["measure"].is_number()) {
        fail(ErrorCode::InvalidInput,
             "body.facets: entries need \"normal\" and numeric \"measure\"");
      }
      facets.push_back(Facet{vector_from_json(jf["normal"], "facet.normal"),
                             jf["measure"].get<double>()});
    }
    const int n = static_cast<int>(facets.front().normal.size());
    for (const Facet& f : facets) {
      if (f.normal.size() != n) {
        fail(ErrorCode::InvalidInput, "body.facets: inconsistent lengths");
      }
    }
    return body_from_facets(n, std::move(facets), label);
  }
  fail(ErrorCode::InvalidInput,
       "body.mode: expected \"vertices\" or \"facets\"");
}

Json klain_vector_to_json(const KlainVector& v) {
  Json out;
  out["p"] = v.p;
  out["q"] = v.q;
  out["k"] = v.k;
  Json cs = Json::array();
  for (double c : v.coeffs) cs.push_back(c);
  out["coeffs"] = cs;
  return out;
}

KlainVector klain_vector_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q") ||
      !j.contains("k") || !j.contains("coeffs") ||
      !j["p"].is_number_integer() || !j["q"].is_number_integer() ||
      !j["k"].is_number_integer() || !j["coeffs"].is_array()) {
    fail(ErrorCode::InvalidInput,
         "klain vector: expected {\"p\",\"q\",\"k\",\"coeffs\"}");
  }
  std::vector<double> coeffs;
  for (const Json& c : j["coeffs"]) {
    if (!c.is_number()) {
      fail(ErrorCode::InvalidInput, "klain vector: coeffs must be numbers");
    }
    coeffs.push_back(c.get<double>());
  }
  return make_klain_vector(j["p"].get<int>(), j["q"].get<int>(),
                           j["k"].get<int>(), std::move(coeffs));
}

Matrix plane_from_text(const std::string& text, int n) {
  const Json j = parse_json_text(text);
  if (!j.is_array() || j.empty()) {
    fail(ErrorCode::InvalidInput, "plane: expected an array of vectors");
  }
  Matrix m(n, static_cast<int>(j.size()));
  for (int c = 0; c < m.cols(); ++c) {
    const Vector v = vector_from_json(j[c], "plane row");
    if (v.size() != n) {
      fail(ErrorCode::InvalidInput, "plane: rows must have length " +
                                        std::to_string(n));
    }
    m.col(c) = v;
  }
  return m;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::InvalidInput, std::string("JSON parse error: ") +
                                      e.what());
  }
}

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorCode::InvalidInput, "cannot open file: " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

}  // namespace pseudovol
