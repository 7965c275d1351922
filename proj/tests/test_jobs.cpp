#include <doctest.h>

#include "toric/jobs.hpp"

using namespace toric;

namespace {

Json run_ok(const std::string& command, const Json& payload) {
  JobSpec job;
  job.command = command;
  job.payload = payload;
  RunResult r = run(job);
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.document.at("schema") == kSchemaTag);
  return r.document.at("result");
}

}  // namespace

TEST_SUITE("jobs") {
  TEST_CASE("integer wire format") {
    CHECK(int_to_json(Int(7)) == Json(7));
    CHECK(int_to_json(Int(-7)) == Json(-7));
    Int big = (Int(1) << 60) + 1;
    Json j = int_to_json(big);
    REQUIRE(j.is_string());
    CHECK(json_to_int(j, "t") == big);
    CHECK(json_to_int(Json(12), "t") == 12);
    CHECK_THROWS_AS(json_to_int(Json("xyz"), "t"), SchemaError);
  }

  TEST_CASE("dual-cone command") {
    Json payload = {{"cone", {{"rank", 2}, {"rays", {{1, 0}, {1, 2}}}}}};
    Json result = run_ok("dual-cone", payload);
    CHECK(result.at("cone").at("rays") == Json({{0, 1}, {2, -1}}));
  }

  TEST_CASE("hilbert-basis command") {
    Json payload = {{"cone", {{"rank", 2}, {"rays", {{1, 0}, {1, 2}}}}}};
    Json result = run_ok("hilbert-basis", payload);
    CHECK(result.at("generators") == Json({{0, 1}, {1, 0}, {2, -1}}));
  }

  TEST_CASE("check-reduced with explicit coefficients") {
    Json payload = {{"b", {-3, -5, 7, 1}}};
    Json result = run_ok("check-reduced", payload);
    CHECK(result.at("reduced") == Json(false));
    CHECK(result.at("failing_lambda") == Json(7));
  }

  TEST_CASE("check-reduced cross-checks the oracle when bounded") {
    JobSpec job;
    job.command = "check-reduced";
    job.payload = {{"b", {-3, -5, 7, 1}}};
    job.bound = 20;
    RunResult r = run(job);
    REQUIRE(r.exit_code == 0);
    CHECK(r.document.at("result").at("oracle") == Json(false));
  }

  TEST_CASE("torus-fp command") {
    Json payload = {{"phi1", {{2}}}, {"phi2", {{3}}}};
    Json result = run_ok("torus-fp", payload);
    CHECK(result.at("torus_dim") == Json(1));
    CHECK(result.at("finite_part") == Json::array());
  }

  TEST_CASE("fan-fp command") {
    Json ray_fan = {{"rank", 1}, {"rays", {{1}}}, {"cones", {{0}}}};
    Json payload = {{"fan1", ray_fan}, {"fan2", ray_fan}, {"base", ray_fan},
                    {"phi1", {{2}}},   {"phi2", {{2}}}};
    Json result = run_ok("fan-fp", payload);
    CHECK(result.at("kernel_basis") == Json({{1, 1}}));
    CHECK(result.at("fan").at("cones") == Json({{0}}));
  }

  TEST_CASE("remaining commands round-trip on the elementary flop") {
    Json orthant = {{"rank", 2}, {"rays", {{1, 0}, {0, 1}}}};
    Json wedge = {{"rank", 2}, {"rays", {{1, 0}, {1, 1}}}};
    Json meet = run_ok("intersect", {{"a", orthant}, {"b", wedge}});
    CHECK(meet.at("cone").at("rays") == Json({{1, 0}, {1, 1}}));

    Json rays = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}};
    Json sigma = {{"rank", 3}, {"rays", rays}, {"cones", {{0, 1, 2}, {0, 1, 3}}}};
    Json sigma_p = {{"rank", 3}, {"rays", rays}, {"cones", {{0, 2, 3}, {1, 2, 3}}}};
    Json base = {{"rank", 3}, {"rays", rays}, {"cones", {{0, 1, 2, 3}}}};

    Json valid = run_ok("validate-fan", {{"fan", sigma}});
    CHECK(valid.at("valid") == Json(true));

    Json ccr = run_ok("ccr", {{"fan", sigma}, {"fan_p", sigma_p}, {"base", base}});
    CHECK(ccr.at("fan").at("cones").size() == 4);

    Json wall = run_ok("wall-relation",
                       {{"sigma_a", {{"rank", 3}, {"rays", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}},
                        {"sigma_b", {{"rank", 3}, {"rays", {{1, 0, 0}, {0, 1, 0}, {1, 1, -1}}}}}});
    CHECK(wall.at("b") == Json({-1, -1, 1, 1}));

    Json cls = run_ok("classify", fixture_payload("danilov_flop"));
    CHECK(cls.at("is_flop") == Json(true));
    CHECK(cls.at("terminal_3d").at("kind") == Json("flop"));
    CHECK(cls.at("smooth_flop").at("ordinary") == Json(true));
    CHECK(cls.at("smooth_flop").at("rank") == Json(1));

    Json normal = run_ok("check-normal", fixture_payload("danilov_flop"));
    CHECK(normal.at("normal") == Json(true));
    CHECK(normal.at("pairs_checked") == Json(4));
  }

  TEST_CASE("diagnose on the elementary flop fixture") {
    Json payload = fixture_payload("danilov_flop");
    Json result = run_ok("diagnose", payload);
    CHECK(result.at("x_equals_x_tilde") == Json("yes"));
  }

  TEST_CASE("every fixture diagnoses without internal errors") {
    for (const std::string& name : fixture_names()) {
      JobSpec job;
      job.command = "diagnose";
      job.payload = fixture_payload(name);
      RunResult r = run(job);
      CHECK(r.exit_code == 0);
    }
  }

  TEST_CASE("determinism: identical runs give identical documents") {
    JobSpec job;
    job.command = "diagnose";
    job.payload = fixture_payload("flop_3_5");
    RunResult a = run(job);
    RunResult b = run(job);
    CHECK(a.document.dump() == b.document.dump());
  }

  TEST_CASE("emit-fixture") {
    JobSpec job;
    job.command = "emit-fixture";
    job.fixture = "danilov_flop";
    RunResult r = run(job);
    REQUIRE(r.exit_code == 0);
    CHECK(r.document.at("result").at("rays").size() == 4);

    job.fixture = "no_such_fixture";
    RunResult bad = run(job);
    CHECK(bad.exit_code == 2);
    CHECK(bad.document.at("error").at("code") == Json("UnknownFixture"));
  }

  TEST_CASE("schema errors exit with code 3") {
    JobSpec job;
    job.command = "dual-cone";
    job.payload = {{"cone", {{"rank", 2}}}};  // missing rays
    RunResult r = run(job);
    CHECK(r.exit_code == 3);
    CHECK(r.document.at("error").at("code") == Json("SchemaError"));
  }

  TEST_CASE("domain errors exit with code 2") {
    JobSpec job;
    job.command = "intersect";
    job.payload = {{"a", {{"rank", 2}, {"rays", {{1, 0}}}}},
                   {"b", {{"rank", 3}, {"rays", {{1, 0, 0}}}}}};
    RunResult r = run(job);
    CHECK(r.exit_code == 2);
    CHECK(r.document.at("error").at("code") == Json("RankMismatch"));
  }

  TEST_CASE("wall payload with wrong claimed relation is rejected") {
    Json payload = fixture_payload("danilov_flop");
    payload["b"] = {-1, -1, 2, 1};
    JobSpec job;
    job.command = "diagnose";
    job.payload = payload;
    RunResult r = run(job);
    CHECK(r.exit_code == 3);
  }

  TEST_CASE("result documents re-parse under the wire format") {
    JobSpec job;
    job.command = "flip-fans";
    job.payload = fixture_payload("danilov_flop");
    RunResult r = run(job);
    REQUIRE(r.exit_code == 0);
    const Json& result = r.document.at("result");
    Fan f = json_to_fan(result.at("sigma_fan"), "roundtrip");
    CHECK(f.size() == 2);
    Cone s0 = json_to_cone(result.at("sigma0"), "roundtrip");
    CHECK(s0.rays().size() == 4);
  }
}
