#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "toric/criteria.hpp"
#include "toric/fan.hpp"
#include "toric/flip.hpp"
#include "toric/torus_fp.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

// Payload failed structural validation (missing keys, wrong types).
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string location, const std::string& message)
      : std::runtime_error(message), location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

// Integers are JSON numbers within the 53-bit safe range and decimal strings
// beyond it; both forms are accepted on input.
Json int_to_json(const Int& v);
Int json_to_int(const Json& j, const std::string& where);

Json vec_to_json(const IntVec& v);
IntVec json_to_vec(const Json& j, const std::string& where);

Json mat_to_json(const IntMat& m);
IntMat json_to_mat(const Json& j, const std::string& where);

Json cone_to_json(const Cone& c);
Cone json_to_cone(const Json& j, const std::string& where);

Json fan_to_json(const Fan& f);
Fan json_to_fan(const Json& j, const std::string& where);

Json wall_to_json(const WallRelation& w);
// Accepts {"rank": n, "rays": [n+1 vectors]}; an optional "b" is verified
// against the computed relation.
WallRelation json_to_wall(const Json& j, const std::string& where);

Json diagnosis_to_json(const DiagnosisReport& r);

const Json& require_key(const Json& j, const char* key, const std::string& where);

}  // namespace toric
