#include "toric/jobs.hpp"

#include <algorithm>

namespace toric {

const char* kSchemaTag = "toric-fliplab/1";

namespace {

Json cmd_dual_cone(const JobSpec& job) {
  Cone c = json_to_cone(require_key(job.payload, "cone", "dual-cone"), "dual-cone");
  Json out = Json::object();
  out["cone"] = cone_to_json(dual_cone(c));
  return out;
}

Json cmd_hilbert_basis(const JobSpec& job) {
  Cone c = json_to_cone(require_key(job.payload, "cone", "hilbert-basis"), "hilbert-basis");
  AffineSemigroup s = hilbert_basis(c);
  Json gens = Json::array();
  for (const IntVec& g : s.generators) gens.push_back(vec_to_json(g));
  Json out = Json::object();
  out["rank"] = s.rank;
  out["generators"] = gens;
  return out;
}

Json cmd_intersect(const JobSpec& job) {
  Cone a = json_to_cone(require_key(job.payload, "a", "intersect"), "intersect");
  Cone b = json_to_cone(require_key(job.payload, "b", "intersect"), "intersect");
  Json out = Json::object();
  out["cone"] = cone_to_json(intersect(a, b));
  return out;
}

Json cmd_ccr(const JobSpec& job) {
  Fan f = json_to_fan(require_key(job.payload, "fan", "ccr"), "ccr");
  Fan fp = json_to_fan(require_key(job.payload, "fan_p", "ccr"), "ccr");
  Fan base = json_to_fan(require_key(job.payload, "base", "ccr"), "ccr");
  Json out = Json::object();
  out["fan"] = fan_to_json(coarsest_common_refinement(f, fp, base));
  return out;
}

Json cmd_validate_fan(const JobSpec& job) {
  Fan f = json_to_fan(require_key(job.payload, "fan", "validate-fan"), "validate-fan");
  FanValidation v = validate_fan(f);
  Json out = Json::object();
  out["valid"] = v.ok;
  if (v.violation) {
    Json viol = Json::object();
    viol["kind"] = v.violation->kind;
    viol["cones"] = {v.violation->a, v.violation->b};
    out["violation"] = viol;
  } else {
    out["violation"] = nullptr;
  }
  return out;
}

Json cmd_wall_relation(const JobSpec& job) {
  Cone a = json_to_cone(require_key(job.payload, "sigma_a", "wall-relation"), "wall-relation");
  Cone b = json_to_cone(require_key(job.payload, "sigma_b", "wall-relation"), "wall-relation");
  return wall_to_json(wall_relation(a, b));
}

Json cmd_flip_fans(const JobSpec& job) {
  WallRelation w = json_to_wall(job.payload, "flip-fans");
  FlipFans fans = flip_fans(w);
  Json out = Json::object();
  out["sigma_fan"] = fan_to_json(fans.sigma_fan);
  out["sigma_prime_fan"] = fan_to_json(fans.sigma_prime_fan);
  out["sigma0"] = cone_to_json(fans.sigma0);
  out["exchanged_ray"] = vec_to_json(w.exchanged_ray());
  return out;
}

Json cmd_classify(const JobSpec& job) {
  WallRelation w = json_to_wall(job.payload, "classify");
  Json out = Json::object();
  out["is_flop"] = is_flop(w);

  SmoothFlopClass sf = classify_smooth_flop(w);
  Json smooth = Json::object();
  smooth["ordinary"] = sf.ordinary;
  if (sf.ordinary) smooth["rank"] = sf.rank;
  out["smooth_flop"] = smooth;

  if (w.n == 3 && w.b[3] == 1) {
    Cone first_three = Cone::from_rays(3, {w.rays[0], w.rays[1], w.rays[2]});
    if (is_smooth(first_three) && first_three.ray_count() == 3) {
      TerminalClassification tc = classify_terminal_3d(w);
      Json t = Json::object();
      switch (tc.kind) {
        case TerminalKind::Flop:
          t["kind"] = "flop";
          break;
        case TerminalKind::TypeA:
          t["kind"] = "type_a";
          break;
        case TerminalKind::TypeB:
          t["kind"] = "type_b";
          break;
        default:
          t["kind"] = "unclassified";
      }
      if (tc.kind == TerminalKind::TypeA || tc.kind == TerminalKind::TypeB) {
        t["a"] = int_to_json(tc.a);
        t["r"] = int_to_json(tc.r);
      }
      out["terminal_3d"] = t;
    }
  }

  Json plus_side = Json::array();
  for (std::size_t j : w.j_plus) {
    Cone c = w.sigma_without(j);
    Json entry = Json::object();
    entry["excluded_index"] = j;
    entry["smooth"] = is_smooth(c);
    bool simplicial_full = is_simplicial(c) && c.ray_count() == w.n;
    entry["terminal"] = simplicial_full ? Json(is_terminal_cone(c)) : Json(nullptr);
    entry["canonical"] = simplicial_full ? Json(is_canonical_cone(c)) : Json(nullptr);
    plus_side.push_back(entry);
  }
  out["plus_side"] = plus_side;
  return out;
}

Json cmd_check_normal(const JobSpec& job) {
  WallRelation w = json_to_wall(job.payload, "check-normal");
  NormalityResult r = check_graph_closure_normal(w, job.all_pairs);
  Json out = Json::object();
  out["normal"] = r.verdict == Verdict::Yes;
  out["witness"] = r.witness ? vec_to_json(*r.witness) : Json(nullptr);
  out["pairs_checked"] = r.pairs_checked;
  out["note"] = r.note;
  return out;
}

Json reduced_result_json(const ReducedResult& r) {
  Json out = Json::object();
  if (r.verdict == Verdict::Undetermined)
    out["reduced"] = "undetermined";
  else
    out["reduced"] = r.verdict == Verdict::Yes;
  out["failing_lambda"] = r.failing_lambda ? int_to_json(*r.failing_lambda) : Json(nullptr);
  out["note"] = r.note;
  return out;
}

Json cmd_check_reduced(const JobSpec& job) {
  if (job.payload.contains("b")) {
    IntVec b = json_to_vec(job.payload.at("b"), "check-reduced");
    if (b.dim() != 4) throw SchemaError("check-reduced", "b must have four entries");
    if (b[3] != 1) throw SchemaError("check-reduced", "b4 must equal 1");
    ReducedResult r = reduced_criterion_3d(b[0], b[1], b[2]);
    Json out = reduced_result_json(r);
    if (job.bound) {
      Verdict o = reduced_oracle_3d(b[0], b[1], b[2], *job.bound);
      out["oracle"] = o == Verdict::Yes;
      out["oracle_bound"] = *job.bound;
    }
    return out;
  }
  WallRelation w = json_to_wall(job.payload, "check-reduced");
  Json out = reduced_result_json(wall_reduced_criterion(w));
  if (job.bound) {
    bool plus_smooth = true;
    for (std::size_t j : w.j_plus)
      if (!is_smooth(w.sigma_without(j))) plus_smooth = false;
    if (plus_smooth) {
      out["oracle"] = spade_oracle(w, *job.bound) == Verdict::Yes;
      out["oracle_bound"] = *job.bound;
    }
  }
  return out;
}

Json cmd_diagnose(const JobSpec& job) {
  WallRelation w = json_to_wall(job.payload, "diagnose");
  return diagnosis_to_json(diagnose(w, job.all_pairs));
}

Json cmd_torus_fp(const JobSpec& job) {
  IntMat phi1 = json_to_mat(require_key(job.payload, "phi1", "torus-fp"), "torus-fp");
  IntMat phi2 = json_to_mat(require_key(job.payload, "phi2", "torus-fp"), "torus-fp");
  TorusFpDecomposition d = torus_fp_decomposition(phi1, phi2);
  Json out = Json::object();
  out["torus_dim"] = d.torus_dim;
  Json fin = Json::array();
  for (const Int& f : d.finite_part) fin.push_back(int_to_json(f));
  out["finite_part"] = fin;
  out["rank"] = d.rank_r;
  Json kb = Json::array();
  for (const IntVec& v : lattice_fiber_product(phi1, phi2)) kb.push_back(vec_to_json(v));
  out["kernel_basis"] = kb;
  return out;
}

Json cmd_fan_fp(const JobSpec& job) {
  Fan f1 = json_to_fan(require_key(job.payload, "fan1", "fan-fp"), "fan-fp");
  Fan f2 = json_to_fan(require_key(job.payload, "fan2", "fan-fp"), "fan-fp");
  Fan base = json_to_fan(require_key(job.payload, "base", "fan-fp"), "fan-fp");
  IntMat phi1 = json_to_mat(require_key(job.payload, "phi1", "fan-fp"), "fan-fp");
  IntMat phi2 = json_to_mat(require_key(job.payload, "phi2", "fan-fp"), "fan-fp");
  FanFiberProduct fp = fan_fiber_product(f1, f2, base, phi1, phi2);
  Json out = Json::object();
  out["fan"] = fan_to_json(fp.fan);
  Json kb = Json::array();
  for (const IntVec& v : fp.kernel_basis) kb.push_back(vec_to_json(v));
  out["kernel_basis"] = kb;
  return out;
}

Json cmd_emit_fixture(const JobSpec& job) { return fixture_payload(job.fixture); }

}  // namespace

RunResult run(const JobSpec& job) {
  Json doc = Json::object();
  doc["schema"] = kSchemaTag;
  doc["command"] = job.command;
  try {
    Json result;
    if (job.command == "dual-cone")
      result = cmd_dual_cone(job);
    else if (job.command == "hilbert-basis")
      result = cmd_hilbert_basis(job);
    else if (job.command == "intersect")
      result = cmd_intersect(job);
    else if (job.command == "ccr")
      result = cmd_ccr(job);
    else if (job.command == "validate-fan")
      result = cmd_validate_fan(job);
    else if (job.command == "wall-relation")
      result = cmd_wall_relation(job);
    else if (job.command == "flip-fans")
      result = cmd_flip_fans(job);
    else if (job.command == "classify")
      result = cmd_classify(job);
    else if (job.command == "check-normal")
      result = cmd_check_normal(job);
    else if (job.command == "check-reduced")
      result = cmd_check_reduced(job);
    else if (job.command == "diagnose")
      result = cmd_diagnose(job);
    else if (job.command == "torus-fp")
      result = cmd_torus_fp(job);
    else if (job.command == "fan-fp")
      result = cmd_fan_fp(job);
    else if (job.command == "emit-fixture")
      result = cmd_emit_fixture(job);
    else
      throw SchemaError("run", "unknown command '" + job.command + "'");
    doc["result"] = result;
    return {0, doc};
  } catch (const SchemaError& e) {
    Json err = Json::object();
    err["code"] = "SchemaError";
    err["message"] = e.what();
    err["location"] = e.location();
    doc["error"] = err;
    return {3, doc};
  } catch (const DomainError& e) {
    Json err = Json::object();
    err["code"] = e.code();
    err["message"] = e.what();
    err["location"] = e.location();
    doc["error"] = err;
    const bool internal = e.code() == "InternalInvariantViolation";
    return {internal ? 4 : 2, doc};
  } catch (const std::exception& e) {
    Json err = Json::object();
    err["code"] = "InternalInvariantViolation";
    err["message"] = e.what();
    err["location"] = job.command;
    doc["error"] = err;
    return {4, doc};
  }
}

}  // namespace toric
