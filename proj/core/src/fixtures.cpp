#include "toric/fixtures.hpp"

namespace toric {

namespace {

Json wall_payload(std::size_t rank, const std::vector<std::vector<std::int64_t>>& rays,
                  const std::vector<std::int64_t>& b) {
  Json j = Json::object();
  j["rank"] = rank;
  Json r = Json::array();
  for (const auto& u : rays) r.push_back(u);
  j["rays"] = r;
  j["b"] = b;
  return j;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"danilov_flop", "example_3_4_5d", "terminal_a_r", "flop_3_5", "smooth_5d_ordinary"};
}

Json fixture_payload(const std::string& name) {
  if (name == "danilov_flop") {
    // the elementary 3-fold flop: u1 + u2 = u3 + u4
    return wall_payload(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}}, {-1, -1, 1, 1});
  }
  if (name == "example_3_4_5d") {
    // five-dimensional wall with a non-normal graph closure
    return wall_payload(5,
                        {{1, 0, 0, 0, 0},
                         {0, 1, 0, 0, 0},
                         {0, 0, 1, 0, 0},
                         {0, 0, 0, 1, 0},
                         {0, 0, 0, 0, 1},
                         {3, 2, 1, -3, -2}},
                        {-3, -2, -1, 3, 2, 1});
  }
  if (name == "terminal_a_r") {
    // terminal flip of type (-a, -(r-a), r, 1) with a = 2, r = 5
    return wall_payload(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 3, -5}}, {-2, -3, 5, 1});
  }
  if (name == "flop_3_5") {
    // canonical flop with non-reduced fiber product: b = (-3, -5, 7, 1)
    return wall_payload(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {3, 5, -7}}, {-3, -5, 7, 1});
  }
  if (name == "smooth_5d_ordinary") {
    // smooth 5-dimensional flop of ordinary rank 2
    return wall_payload(5,
                        {{1, 0, 0, 0, 0},
                         {0, 1, 0, 0, 0},
                         {0, 0, 1, 0, 0},
                         {0, 0, 0, 1, 0},
                         {0, 0, 0, 0, 1},
                         {1, 1, 1, -1, -1}},
                        {-1, -1, -1, 1, 1, 1});
  }
  domain_error("UnknownFixture", "emit_fixture", "no fixture named '" + name + "'");
}

}  // namespace toric
