#include <catch2/catch_amalgamated.hpp>

#include "hgc/corpus.hpp"
#include "hgc/diagram.hpp"
#include "hgc/parse.hpp"

using namespace hgc;

TEST_CASE("minimal torus diagram") {
  Diagram d = corpus::minimal_torus();
  CHECK(d.vertex_count == 1);
  CHECK(d.edge_count() == 2);
  CHECK(d.walks().size() == 1);
  CHECK(d.region_count() == 1);
  CHECK(d.region_corners(0) == 4);
  CHECK(d.euler_characteristic() == 0);
  CHECK(d.genus() == 1);
  CHECK(d.region_marked(0));
  CHECK(attaching_check(d, Color::Alpha));
  CHECK(attaching_check(d, Color::Beta));
}

TEST_CASE("lens space L(3,1)") {
  Diagram d = corpus::lens_space(3);
  CHECK(d.vertex_count == 3);
  CHECK(d.edge_count() == 6);
  auto fs = faces(d);
  REQUIRE(fs.size() == 3);
  for (const auto& f : fs) CHECK(f.corner_count == 4);
  CHECK(d.euler_characteristic() == 0);
  int marked = 0;
  for (const auto& f : fs) marked += f.mark.has_value();
  CHECK(marked == 1);
  CHECK(attaching_check(d, Color::Alpha));
  CHECK(attaching_check(d, Color::Beta));
}

TEST_CASE("corner sum equals four times vertex count") {
  for (const Diagram& d : {corpus::minimal_torus(), corpus::lens_space(5), corpus::s1s2_ori(),
                           corpus::s1s2_bp_swap(), corpus::twist_diagram()}) {
    int corners = 0;
    for (const auto& f : faces(d)) corners += f.corner_count;
    CHECK(corners == 4 * d.vertex_count);
  }
}

TEST_CASE("s1s2 translate diagram") {
  Diagram d = corpus::s1s2_ori();
  CHECK(d.vertex_count == 2);
  CHECK(d.edge_count() == 4);
  CHECK(d.walks().size() == 4);
  REQUIRE(d.region_count() == 3);
  CHECK(d.euler_characteristic() == 0);
  CHECK(d.genus() == 1);
  int bigons = 0, annuli = 0;
  for (int r = 0; r < d.region_count(); ++r) {
    if (d.region_is_disk(r) && d.region_corners(r) == 2) ++bigons;
    if (d.region_boundary_count(r) == 2 && d.regions[r].genus == 0) {
      ++annuli;
      CHECK(d.region_marked(r));
    }
  }
  CHECK(bigons == 2);
  CHECK(annuli == 1);
}

TEST_CASE("doubly pointed s1s2") {
  Diagram d = corpus::s1s2_bp_swap();
  CHECK(d.vertex_count == 4);
  CHECK(d.euler_characteristic() == 0);
  REQUIRE(d.region_count() == 6);
  int marked = 0;
  for (int r = 0; r < d.region_count(); ++r) marked += d.region_marked(r);
  CHECK(marked == 2);
  CHECK(attaching_check(d, Color::Alpha));
  CHECK(attaching_check(d, Color::Beta));
}

TEST_CASE("twist diagram regions") {
  Diagram d = corpus::twist_diagram();
  CHECK(d.vertex_count == 4);
  CHECK(d.euler_characteristic() == 0);
  REQUIRE(d.region_count() == 5);
  int bigons = 0;
  for (int r = 0; r < d.region_count(); ++r)
    if (d.region_is_disk(r) && d.region_corners(r) == 2) ++bigons;
  CHECK(bigons == 4);
}

TEST_CASE("render and reparse round-trips structurally") {
  for (const Diagram& d : {corpus::minimal_torus(), corpus::lens_space(3), corpus::s1s2_ori(),
                           corpus::s1s2_bp_swap(), corpus::twist_diagram()}) {
    std::string text = render_diagram(d);
    Diagram back = parse_diagram(text);
    INFO(text);
    CHECK(back == d);
  }
}

TEST_CASE("parse rejects malformed input") {
  SECTION("vertex valence") {
    std::string bad =
        "diagram bad\n"
        "vertex 0 0 1 2\n";
    CHECK_THROWS_WITH(parse_diagram(bad), Catch::Matchers::ContainsSubstring("vertex valence"));
  }
  SECTION("unknown directive") {
    CHECK_THROWS_AS(parse_diagram("diagram x\nfrobnicate 1\n"), ParseError);
  }
  SECTION("missing header") {
    CHECK_THROWS_AS(parse_diagram("vertex 0 0 1 2 3\n"), ParseError);
  }
  SECTION("anchor used twice") {
    std::string bad =
        "diagram bad\n"
        "vertex 0 0 1 2 3\n"
        "edge 0 alpha A1 0.0 0.0\n";
    CHECK_THROWS_AS(parse_diagram(bad), ParseError);
  }
}

TEST_CASE("vertexless diagram: empty attaching sets on a marked sphere") {
  std::string text =
      "diagram empty\n"
      "mark 0 suture\n"
      "mark 0 suture\n";
  Diagram d = parse_diagram(text);
  CHECK(d.vertex_count == 0);
  CHECK(d.region_count() == 1);
  CHECK(d.euler_characteristic() == 2);
  CHECK(attaching_check(d, Color::Alpha));
}

TEST_CASE("vertexless torus with one free circle fails attaching without marks") {
  // A single essential alpha circle on the torus: one annular region seen
  // from both sides.
  std::string text =
      "diagram circle-only\n"
      "circle A1 alpha left=0 right=0\n";
  Diagram d = parse_diagram(text, Diagram::Check::Structural);
  CHECK(d.vertex_count == 0);
  CHECK(d.euler_characteristic() == 0);
  CHECK(d.genus() == 1);
  CHECK_FALSE(attaching_check(d, Color::Alpha));
  CHECK_FALSE(attaching_check(d, Color::Beta));
}
