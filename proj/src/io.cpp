#include "qtors/io.hpp"

#include <algorithm>

namespace qtors {

using nlohmann::json;

json quiver_to_json(const Quiver& q) {
  std::vector<Arrow> arrows = q.arrows();
  std::sort(arrows.begin(), arrows.end());
  json a = json::array();
  for (const Arrow& ar : arrows) a.push_back({ar.source + 1, ar.target + 1});
  return {{"vertices", q.vertex_count()}, {"arrows", a}};
}

Quiver quiver_from_json(const json& j) {
  const int n = j.at("vertices").get<int>();
  std::vector<Arrow> arrows;
  for (const auto& a : j.at("arrows")) {
    const int s = a.at(0).get<int>(), t = a.at(1).get<int>();
    if (s < 1 || s > n || t < 1 || t > n) throw QuiverError(QuiverError::Kind::VertexRange, "arrow endpoint out of range");
    if (s == t) throw QuiverError(QuiverError::Kind::Loop, "loops are not allowed");
    arrows.push_back({s - 1, t - 1});
  }
  return Quiver(n, std::move(arrows));
}

std::string rational_to_string(const Rational& r) {
  return r.str();
}

Rational rational_from_string(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational number: " + s);
  }
}

json dimvec_to_json(const IntVector& d) {
  json out = json::array();
  for (Index i = 0; i < d.size(); ++i) out.push_back(d(i));
  return out;
}

json rep_to_json(const Rep& x) {
  json arrows = json::array();
  for (const RationalMatrix& m : x.maps()) {
    json rows = json::array();
    for (Index r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (Index c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m(r, c)));
      rows.push_back(row);
    }
    arrows.push_back(rows);
  }
  return {{"dims", dimvec_to_json(x.dims())}, {"arrows", arrows}};
}

Rep rep_from_json(const Quiver& q, const json& j) {
  const auto& d = j.at("dims");
  IntVector dims(static_cast<Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) dims(static_cast<Index>(i)) = d[i].get<std::int64_t>();
  if (dims.size() != q.vertex_count()) throw std::invalid_argument("dims length does not match the quiver");
  const auto& a = j.at("arrows");
  if (a.size() != q.arrow_count()) throw std::invalid_argument("one matrix per arrow required");
  std::vector<RationalMatrix> maps;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Arrow& ar = q.arrows()[k];
    RationalMatrix m(dims(ar.target), dims(ar.source));
    if (a[k].size() != static_cast<std::size_t>(m.rows())) throw std::invalid_argument("matrix has the wrong shape");
    for (Index r = 0; r < m.rows(); ++r) {
      const auto& row = a[k][r];
      if (row.size() != static_cast<std::size_t>(m.cols())) throw std::invalid_argument("matrix has the wrong shape");
      for (Index c = 0; c < m.cols(); ++c)
        m(r, c) = row[c].is_string() ? rational_from_string(row[c].get<std::string>())
                                     : Rational(row[c].get<std::int64_t>());
    }
    maps.push_back(std::move(m));
  }
  return Rep(q, dims, std::move(maps));
}

}  // namespace qtors
