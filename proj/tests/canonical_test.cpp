#include <catch2/catch_amalgamated.hpp>

#include "hgc/canonical.hpp"
#include "hgc/corpus.hpp"

using namespace hgc;

TEST_CASE("canonical form is idempotent") {
  for (const Diagram& d : {corpus::minimal_torus(), corpus::lens_space(3), corpus::s1s2_ori(),
                           corpus::s1s2_bp_swap(), corpus::twist_diagram()}) {
    Diagram c1 = canonical_form(d);
    Diagram c2 = canonical_form(c1);
    CHECK(c1 == c2);
  }
}

TEST_CASE("canonical form is constant under random relabelings") {
  std::mt19937_64 rng(default_seed());
  for (const Diagram& d : {corpus::lens_space(3), corpus::s1s2_bp_swap(), corpus::twist_diagram()}) {
    Diagram c = canonical_form(d);
    for (int i = 0; i < 10; ++i) {
      Diagram shuffled = random_relabel(d, rng);
      CHECK(canonical_form(shuffled) == c);
    }
  }
}

TEST_CASE("non-isomorphic diagrams have distinct canonical forms") {
  CHECK(canonical_form(corpus::lens_space(3)) != canonical_form(corpus::lens_space(4)));
  CHECK(canonical_form(corpus::s1s2_ori()) != canonical_form(corpus::lens_space(2)));
  CHECK_FALSE(isomorphic(corpus::twist_diagram(), corpus::s1s2_bp_swap()));
}

TEST_CASE("isomorphisms of a diagram with itself contain the identity") {
  Diagram d = corpus::minimal_torus();
  auto isos = isomorphisms(d, d);
  REQUIRE(!isos.empty());
  bool has_identity = false;
  for (const auto& m : isos) {
    bool id = true;
    for (int x = 0; x < d.dart_count(); ++x)
      if (m.dart_map[x] != x) id = false;
    if (id) has_identity = true;
    CHECK(apply_isomorphism(d, m) == d);
  }
  CHECK(has_identity);
}

TEST_CASE("genus mismatch yields no isomorphisms") {
  CHECK(isomorphisms(corpus::lens_space(2), corpus::s1s2_ori()).empty());
}

TEST_CASE("lens space has cyclic symmetry") {
  Diagram d = corpus::lens_space(3);
  // marks pin the symmetry down: only rotations fixing the marked face
  auto isos = isomorphisms(d, d);
  CHECK(isos.size() >= 1);
  for (const auto& m : isos) CHECK(apply_isomorphism(d, m) == d);
}

TEST_CASE("apply_isomorphism round-trips through random relabel") {
  std::mt19937_64 rng(default_seed() + 7);
  Diagram d = corpus::twist_diagram();
  Diagram shuffled = random_relabel(d, rng);
  auto isos = isomorphisms(d, shuffled);
  REQUIRE(!isos.empty());
  for (const auto& m : isos) CHECK(apply_isomorphism(d, m) == shuffled);
}

TEST_CASE("bp-swap has the half-rotation symmetry") {
  Diagram d = corpus::s1s2_bp_swap();
  auto isos = isomorphisms(d, d);
  // identity and the half-rotation (swapping the two pairs) at least
  CHECK(isos.size() >= 2);
  bool found_swap = false;
  for (const auto& m : isos) {
    if (m.curve_map[d.curve_by_name("A1")] == d.curve_by_name("A2")) found_swap = true;
    CHECK(apply_isomorphism(d, m) == d);
  }
  CHECK(found_swap);
}
