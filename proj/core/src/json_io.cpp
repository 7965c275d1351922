#include "toric/json_io.hpp"

namespace toric {

namespace {
const Int kSafeMax = (Int(1) << 53) - 1;
}

const Json& require_key(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw SchemaError(where, "missing required key '" + std::string(key) + "'");
  return j.at(key);
}

Json int_to_json(const Int& v) {
  if (v <= kSafeMax && v >= -kSafeMax) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Int json_to_int(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw SchemaError(where, "malformed integer string '" + j.get<std::string>() + "'");
    }
  }
  throw SchemaError(where, "expected an integer (number or decimal string)");
}

Json vec_to_json(const IntVec& v) {
  Json a = Json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(int_to_json(v[i]));
  return a;
}

IntVec json_to_vec(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where, "expected an array of integers");
  IntVec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = json_to_int(j.at(i), where);
  return v;
}

Json mat_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
  return rows;
}

IntMat json_to_mat(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where, "expected an array of rows");
  if (j.empty()) return IntMat(0, 0);
  std::vector<IntVec> rows;
  for (const Json& r : j) rows.push_back(json_to_vec(r, where));
  const std::size_t cols = rows.front().dim();
  for (const IntVec& r : rows)
    if (r.dim() != cols) throw SchemaError(where, "ragged matrix rows");
  return IntMat::from_rows(rows, cols);
}

Json cone_to_json(const Cone& c) {
  Json j = Json::object();
  j["rank"] = c.rank();
  Json rays = Json::array();
  for (const IntVec& r : c.rays()) rays.push_back(vec_to_json(r));
  j["rays"] = rays;
  return j;
}

Cone json_to_cone(const Json& j, const std::string& where) {
  const Json& rank_j = require_key(j, "rank", where);
  if (!rank_j.is_number_unsigned() && !rank_j.is_number_integer())
    throw SchemaError(where, "rank must be a nonnegative integer");
  const std::int64_t rank = rank_j.get<std::int64_t>();
  if (rank < 0) throw SchemaError(where, "rank must be nonnegative");
  const Json& rays_j = require_key(j, "rays", where);
  if (!rays_j.is_array()) throw SchemaError(where, "rays must be an array");
  std::vector<IntVec> rays;
  for (const Json& r : rays_j) {
    IntVec v = json_to_vec(r, where);
    if (v.dim() != static_cast<std::size_t>(rank))
      throw SchemaError(where, "ray dimension does not match rank");
    rays.push_back(std::move(v));
  }
  return Cone::from_rays(static_cast<std::size_t>(rank), std::move(rays));
}

Json fan_to_json(const Fan& f) {
  Json j = Json::object();
  j["rank"] = f.rank;
  Json rays = Json::array();
  for (const IntVec& r : f.rays) rays.push_back(vec_to_json(r));
  j["rays"] = rays;
  Json cones = Json::array();
  for (const auto& c : f.max_cones) cones.push_back(c);
  j["cones"] = cones;
  return j;
}

Fan json_to_fan(const Json& j, const std::string& where) {
  const Json& rank_j = require_key(j, "rank", where);
  const std::int64_t rank = rank_j.is_number_integer() ? rank_j.get<std::int64_t>() : -1;
  if (rank < 0) throw SchemaError(where, "rank must be a nonnegative integer");
  const Json& rays_j = require_key(j, "rays", where);
  const Json& cones_j = require_key(j, "cones", where);
  if (!rays_j.is_array() || !cones_j.is_array())
    throw SchemaError(where, "rays and cones must be arrays");
  std::vector<IntVec> rays;
  for (const Json& r : rays_j) {
    IntVec v = json_to_vec(r, where);
    if (v.dim() != static_cast<std::size_t>(rank))
      throw SchemaError(where, "ray dimension does not match rank");
    rays.push_back(std::move(v));
  }
  std::vector<Cone> cones;
  for (const Json& c : cones_j) {
    if (!c.is_array()) throw SchemaError(where, "each cone must be an array of ray indices");
    std::vector<IntVec> gens;
    for (const Json& idx : c) {
      if (!idx.is_number_integer())
        throw SchemaError(where, "ray indices must be integers");
      const std::int64_t i = idx.get<std::int64_t>();
      if (i < 0 || static_cast<std::size_t>(i) >= rays.size())
        throw SchemaError(where, "ray index out of range");
      gens.push_back(rays[static_cast<std::size_t>(i)]);
    }
    cones.push_back(Cone::from_rays(static_cast<std::size_t>(rank), gens));
  }
  return make_fan(static_cast<std::size_t>(rank), cones);
}

Json wall_to_json(const WallRelation& w) {
  Json j = Json::object();
  j["rank"] = w.n;
  Json rays = Json::array();
  for (const IntVec& r : w.rays) rays.push_back(vec_to_json(r));
  j["rays"] = rays;
  j["b"] = vec_to_json(w.b);
  j["j_minus"] = w.j_minus;
  j["j_zero"] = w.j_zero;
  j["j_plus"] = w.j_plus;
  return j;
}

WallRelation json_to_wall(const Json& j, const std::string& where) {
  const Json& rank_j = require_key(j, "rank", where);
  const std::int64_t rank = rank_j.is_number_integer() ? rank_j.get<std::int64_t>() : -1;
  if (rank <= 0) throw SchemaError(where, "rank must be a positive integer");
  const Json& rays_j = require_key(j, "rays", where);
  if (!rays_j.is_array() || rays_j.size() != static_cast<std::size_t>(rank) + 1)
    throw SchemaError(where, "expected rank+1 rays");
  std::vector<IntVec> rays;
  for (const Json& r : rays_j) {
    IntVec v = json_to_vec(r, where);
    if (v.dim() != static_cast<std::size_t>(rank))
      throw SchemaError(where, "ray dimension does not match rank");
    rays.push_back(std::move(v));
  }
  WallRelation w = WallRelation::from_rays(static_cast<std::size_t>(rank), std::move(rays));
  if (j.contains("b")) {
    IntVec claimed = json_to_vec(j.at("b"), where);
    if (!(claimed == w.b))
      throw SchemaError(where, "provided relation coefficients disagree with the computed ones");
  }
  return w;
}

Json diagnosis_to_json(const DiagnosisReport& r) {
  Json j = Json::object();
  j["wall"] = wall_to_json(r.wall);
  j["irreducible"] = verdict_str(r.irreducible);
  Json normal = Json::object();
  normal["verdict"] = verdict_str(r.graph_closure_normal.verdict);
  normal["witness"] = r.graph_closure_normal.witness
                          ? vec_to_json(*r.graph_closure_normal.witness)
                          : Json(nullptr);
  normal["pairs_checked"] = r.graph_closure_normal.pairs_checked;
  j["graph_closure_normal"] = normal;
  Json reduced = Json::object();
  reduced["verdict"] = verdict_str(r.fiber_product_reduced.verdict);
  reduced["failing_lambda"] = r.fiber_product_reduced.failing_lambda
                                  ? int_to_json(*r.fiber_product_reduced.failing_lambda)
                                  : Json(nullptr);
  reduced["note"] = r.fiber_product_reduced.note;
  j["fiber_product_reduced"] = reduced;
  j["x_equals_x_tilde"] = verdict_str(r.x_equals_x_tilde);
  j["notes"] = r.notes;
  return j;
}

}  // namespace toric
