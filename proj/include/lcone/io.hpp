#ifndef LCONE_IO_HPP
#define LCONE_IO_HPP

// JSON / CSV serialization. Matrices are row-major arrays of arrays of
// doubles, Cartan vectors plain arrays. Config objects carry "schema": 1 and
// reject unknown keys.

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lcone/common.hpp"
#include "lcone/cone.hpp"
#include "lcone/enumerate.hpp"
#include "lcone/marked_group.hpp"

namespace lcone {

using json = nlohmann::json;

inline json to_json(const Vec& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

inline json to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

inline Vec vec_from_json(const json& a) {
  if (!a.is_array()) throw invalid_input_error("expected a JSON array for a vector");
  Vec v(a.size());
  for (size_t i = 0; i < a.size(); ++i) v[i] = a[i].get<double>();
  return v;
}

inline Mat mat_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty() || !rows[0].is_array())
    throw invalid_input_error("expected a JSON array of arrays for a matrix");
  const size_t r = rows.size(), c = rows[0].size();
  Mat m(r, c);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw invalid_input_error("ragged matrix rows in JSON");
    for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j].get<double>();
  }
  return m;
}

inline void check_keys(const json& obj, const std::set<std::string>& allowed,
                       const std::string& what) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw invalid_input_error(what + ": unknown key '" + it.key() + "'");
}

inline void check_schema(const json& obj, const std::string& what) {
  if (!obj.contains("schema") || obj["schema"].get<int>() != 1)
    throw invalid_input_error(what + ": missing or unsupported schema (expected 1)");
}

// ---- group config ---------------------------------------------------------

inline json group_to_json(const MarkedGroup& g) {
  json j;
  j["schema"] = 1;
  j["n"] = g.n();
  j["assume_free"] = g.assume_free;
  json gens = json::array();
  for (const Mat& m : g.generators) gens.push_back(to_json(m));
  j["generators"] = gens;
  return j;
}

inline MarkedGroup group_from_json(const json& j) {
  check_schema(j, "group config");
  check_keys(j, {"schema", "n", "generators", "assume_free"}, "group config");
  const int n = j.at("n").get<int>();
  std::vector<Mat> gens;
  for (const auto& g : j.at("generators")) gens.push_back(mat_from_json(g));
  const bool free = j.value("assume_free", true);
  return MarkedGroup(n, std::move(gens), free);
}

inline MarkedGroup load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input_error("cannot open group config: " + path);
  json j;
  in >> j;
  return group_from_json(j);
}

// ---- cones ----------------------------------------------------------------

inline json cone_to_json(const SampledCone& c) {
  json j;
  j["schema"] = 1;
  json dirs = json::array();
  for (const Vec& d : c.directions) dirs.push_back(to_json(d));
  j["directions"] = dirs;
  return j;
}

inline json cone_to_json(const HalfSpaceCone& c) {
  json j;
  j["schema"] = 1;
  if (c.pieces.size() == 1) {
    json forms = json::array();
    for (const Vec& f : c.pieces[0]) forms.push_back(to_json(f));
    j["forms"] = forms;
  } else {
    json pieces = json::array();
    for (const auto& piece : c.pieces) {
      json forms = json::array();
      for (const Vec& f : piece) forms.push_back(to_json(f));
      pieces.push_back(forms);
    }
    j["pieces"] = pieces;
  }
  return j;
}

inline SampledCone sampled_cone_from_json(const json& j) {
  check_schema(j, "cone");
  check_keys(j, {"schema", "directions"}, "sampled cone");
  std::vector<Vec> rays;
  for (const auto& d : j.at("directions")) rays.push_back(vec_from_json(d));
  return SampledCone::from_rays(rays);
}

inline HalfSpaceCone halfspace_cone_from_json(const json& j) {
  check_schema(j, "cone");
  check_keys(j, {"schema", "forms", "pieces"}, "half-space cone");
  HalfSpaceCone c;
  if (j.contains("forms")) {
    std::vector<Vec> forms;
    for (const auto& f : j.at("forms")) forms.push_back(vec_from_json(f));
    c.pieces.push_back(std::move(forms));
  } else if (j.contains("pieces")) {
    for (const auto& piece : j.at("pieces")) {
      std::vector<Vec> forms;
      for (const auto& f : piece) forms.push_back(vec_from_json(f));
      c.pieces.push_back(std::move(forms));
    }
  } else {
    throw invalid_input_error("half-space cone: need 'forms' or 'pieces'");
  }
  return c;
}

// ---- CSV ------------------------------------------------------------------

inline void write_ball_csv(std::ostream& out, const std::vector<GroupElementRecord>& records,
                           int n) {
  out << "word,length";
  for (int i = 1; i <= n; ++i) out << ",mu_" << i;
  const bool with_lambda = !records.empty() && records.front().lambda.has_value();
  if (with_lambda)
    for (int i = 1; i <= n; ++i) out << ",lambda_" << i;
  out << "\n";
  char buf[32];
  for (const auto& rec : records) {
    out << rec.word << "," << rec.length;
    for (int i = 0; i < n; ++i) {
      std::snprintf(buf, sizeof buf, "%.12g", rec.mu[i]);
      out << "," << buf;
    }
    if (with_lambda)
      for (int i = 0; i < n; ++i) {
        std::snprintf(buf, sizeof buf, "%.12g", (*rec.lambda)[i]);
        out << "," << buf;
      }
    out << "\n";
  }
}

inline void error_json_to_stderr(const std::string& kind, const std::string& message) {
  json j;
  j["error"] = kind;
  j["message"] = message;
  std::fputs((j.dump() + "\n").c_str(), stderr);
}

}  // namespace lcone

#endif
