#include "isopair/io.hpp"

#include <fstream>
#include <sstream>

namespace isopair {

using nlohmann::json;

json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const json& j, Mode mode) {
  Scalar s;
  if (j.is_string()) {
    s = Scalar::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    s = Scalar(j.get<long>());
  } else if (j.is_number_float()) {
    s = Scalar::float_value(j.get<double>());
  } else {
    throw ParseError("expected a number or a numeric string, got " + j.dump());
  }
  return s.as_mode(mode == Mode::Float ? Mode::Float : s.mode());
}

json matrix_to_json(const ScalarMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

namespace {

json parse_document(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::vector<Scalar> scalar_list(const json& j, const char* key, Mode mode) {
  if (!j.contains(key) || !j[key].is_array()) throw ParseError(std::string("missing array '") + key + "'");
  std::vector<Scalar> out;
  for (const auto& v : j[key]) out.push_back(scalar_from_json(v, mode));
  return out;
}

}  // namespace

EigenData<Scalar> eigendata_from_json(const std::string& text, Mode mode) {
  json j = parse_document(text, "eigen data JSON");
  EigenData<Scalar> e;
  try {
    e.n = j.at("n").get<int>();
  } catch (const json::exception& ex) {
    throw ParseError(std::string("eigen data JSON: ") + ex.what());
  }
  e.alpha = scalar_list(j, "alpha", mode);
  e.beta = scalar_list(j, "beta", mode);
  e.gamma = scalar_list(j, "gamma", mode);
  return e;
}

json eigendata_to_json(const EigenData<Scalar>& e) {
  json j;
  j["n"] = e.n;
  for (auto [key, v] : {std::pair{"alpha", &e.alpha}, std::pair{"beta", &e.beta}, std::pair{"gamma", &e.gamma}}) {
    j[key] = json::array();
    for (const auto& s : *v) j[key].push_back(s.str());
  }
  return j;
}

FreeBlock<Scalar> free_block_from_json(const std::string& text, Mode mode) {
  json j = parse_document(text, "free block JSON");
  FreeBlock<Scalar> y;
  try {
    y.n = j.at("n").get<int>();
    for (const auto& row : j.at("Y")) {
      if (!row.is_array() || row.size() != y.cols()) throw ParseError("free block JSON: each row needs n-1 entries");
      for (const auto& v : row) y.y.push_back(scalar_from_json(v, mode));
    }
  } catch (const json::exception& ex) {
    throw ParseError(std::string("free block JSON: ") + ex.what());
  }
  if (y.y.size() != y.rows() * y.cols()) throw ParseError("free block JSON: expected n-2 rows");
  return y;
}

json free_block_to_json(const FreeBlock<Scalar>& y) {
  json j;
  j["n"] = y.n;
  j["Y"] = json::array();
  for (std::size_t x = 0; x < y.rows(); ++x) {
    json row = json::array();
    for (std::size_t c = 0; c < y.cols(); ++c) row.push_back(y.at(x, c).str());
    j["Y"].push_back(row);
  }
  return j;
}

json face_grid_to_json(const FaceCoordinates<Scalar>& fc) {
  json j;
  j["n"] = fc.n;
  j["X"] = json::array();
  for (int x = 0; x < fc.n; ++x) {
    json row = json::array();
    for (int y = 0; y < fc.n; ++y) row.push_back(fc.at(x, y).str());
    j["X"].push_back(row);
  }
  j["X_x"] = fc.x_x.str();
  j["X_y"] = fc.x_y.str();
  return j;
}

json report_to_json(const Report& r) {
  json j = json::array();
  for (const auto& c : r.claims) {
    json e{{"claim", c.claim}, {"passed", c.passed}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    j.push_back(e);
  }
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace isopair
