#pragma once

#include <klbm/bm.hpp>
#include <klbm/koszul.hpp>
#include <klbm/moment.hpp>
#include <klbm/polymatrix.hpp>

#include <json.hpp>

#include <limits>
#include <string>

namespace klbm::io {

using nlohmann::json;

inline json poly_to_json(const IntLaurentPoly& p) {
  static const Int lo = Int(std::numeric_limits<long long>::min());
  static const Int hi = Int(std::numeric_limits<long long>::max());
  json coeffs = json::object();
  for (const auto& [e, c] : p.coeffs()) {
    if (c >= lo && c <= hi) coeffs[std::to_string(e)] = static_cast<long long>(c);
    else coeffs[std::to_string(e)] = c.str();
  }
  return json{{"coeffs", coeffs}};
}

inline IntLaurentPoly poly_from_json(const json& j) {
  IntLaurentPoly p;
  for (const auto& [k, v] : j.at("coeffs").items()) {
    Int c = v.is_string() ? Int(v.get<std::string>()) : Int(v.get<long long>());
    p.add_term(std::stoi(k), c);
  }
  return p;
}

// canonical words joined with '.' key matrices; the identity is ""
inline std::string word_key(const weyl::WeylElt& x) {
  std::string s;
  for (size_t i = 0; i < x.word().size(); ++i) {
    if (i) s += ".";
    s += std::to_string(static_cast<int>(x.word()[i]));
  }
  return s;
}

inline json matrix_to_json(const poly::PolyMatrix& m) {
  json rows = json::object();
  for (size_t i = 0; i < m.size(); ++i) {
    json row = json::object();
    for (size_t j = 0; j < m.size(); ++j) row[word_key(m.index()[j])] = poly_to_json(m.at(i, j));
    rows[word_key(m.index()[i])] = row;
  }
  return rows;
}

inline std::string matrix_to_csv(const poly::PolyMatrix& m) {
  std::string out = "x";
  for (size_t j = 0; j < m.size(); ++j) out += ";" + word_key(m.index()[j]);
  out += "\n";
  for (size_t i = 0; i < m.size(); ++i) {
    out += word_key(m.index()[i]);
    for (size_t j = 0; j < m.size(); ++j) out += ";" + m.at(i, j).str();
    out += "\n";
  }
  return out;
}

inline std::string matrix_to_latex(const poly::PolyMatrix& m) {
  std::string out = "\\begin{tabular}{r|";
  for (size_t j = 0; j < m.size(); ++j) out += "c";
  out += "}\n";
  for (size_t j = 0; j < m.size(); ++j) out += " & $" + word_key(m.index()[j]) + "$";
  out += " \\\\\\hline\n";
  for (size_t i = 0; i < m.size(); ++i) {
    out += "$" + word_key(m.index()[i]) + "$";
    for (size_t j = 0; j < m.size(); ++j) out += " & $" + m.at(i, j).str() + "$";
    out += " \\\\\n";
  }
  out += "\\end{tabular}\n";
  return out;
}

inline json rat_vec_to_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) {
    if (is_integer(x)) a.push_back(rat_num(x).str());
    else a.push_back(rat_num(x).str() + "/" + rat_den(x).str());
  }
  return a;
}

inline json graph_to_json(const moment::MomentGraph& g) {
  json verts = json::array();
  for (const auto& v : g.verts) verts.push_back(v.word_str());
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back(json{{"a", g.verts[e.a].word_str()},
                         {"b", g.verts[e.b].word_str()},
                         {"label", rat_vec_to_json(e.label.coords)}});
  return json{{"vertices", verts},
              {"edges", edges},
              {"order", g.sign > 0 ? "opposite" : "bruhat"}};
}

inline json graded_rank_to_json(const GradedRank& r) {
  json a = json::array();
  for (const auto& [s, m] : r.shifts())
    for (long k = 0; k < m; ++k) a.push_back(s);
  return a;
}

inline json bm_to_json(const bm::BMSheaf& b) {
  json verts = json::object();
  for (size_t v = 0; v < b.graph().verts.size(); ++v) {
    GradedRank st = b.stalk(static_cast<int>(v));
    if (st.empty()) continue;
    verts[b.graph().verts[v].word_str()] =
        json{{"stalk", graded_rank_to_json(st)},
             {"defect", graded_rank_to_json(b.defect(static_cast<int>(v)))}};
  }
  json flag = json::array();
  for (const auto& [y, shift] : bm::verma_flag(b))
    flag.push_back(json::array({y.word_str(), shift}));
  return json{{"root", b.root_elt().word_str()},
              {"vertices", verts},
              {"flag", flag},
              {"dmax", b.d_hi()}};
}

}  // namespace klbm::io
