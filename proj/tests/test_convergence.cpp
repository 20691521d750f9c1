#include "pptower/convergence.hpp"

#include "doctest.h"
#include "support/oracles.hpp"

using namespace pptower;
using namespace pptower::convergence;

namespace {

SimplicialComplex two_points() { return SimplicialComplex::from_facets(2, {}); }

SimplicialComplex boundary_triangle() {
  return SimplicialComplex::from_facets(3, {Simplex{1, 2}, Simplex{1, 3}, Simplex{2, 3}});
}

SimplicialComplex four_cycle() {
  return SimplicialComplex::from_facets(
      4, {Simplex{1, 2}, Simplex{2, 3}, Simplex{3, 4}, Simplex{1, 4}});
}

tower::SpaceSpec spheres(std::vector<int> dims) { return tower::SpaceSpec{std::move(dims), false}; }

}  // namespace

TEST_CASE("classification") {
  ConvergenceReport full = classify(full_simplex(3));
  CHECK(full.classification == Classification::ConvergesEverywhere);
  CHECK_FALSE(full.witness_face.has_value());

  ConvergenceReport tri = classify(boundary_triangle());
  CHECK(tri.classification == Classification::IntegralConvergesVhDiverges);
  CHECK(tri.certificate == FwfCertificate::Shifted);
  REQUIRE(tri.witness_face.has_value());
  CHECK(*tri.witness_face == Simplex{1, 2, 3});

  CHECK(classify(four_cycle()).classification == Classification::OutsideHypotheses);
  CHECK(classify(four_cycle(), true).classification ==
        Classification::IntegralConvergesVhDiverges);
}

TEST_CASE("classification agrees with is_full_simplex over all small complexes") {
  for (int m = 1; m <= 4; ++m) {
    for (const SimplicialComplex& k : oracles::all_complexes(m)) {
      ConvergenceReport r = classify(k, true);
      CHECK((r.classification == Classification::ConvergesEverywhere) == k.is_full_simplex());
      if (r.witness_face) {
        CHECK(*r.witness_face == k.minimal_missing_faces().front());
      }
    }
  }
}

TEST_CASE("witnesses for two points") {
  std::vector<DivergenceWitness> ws = divergence_witnesses(two_points(), spheres({1, 1}), 3);
  REQUIRE(ws.size() == 3);
  CHECK(ws[0].sphere_dim == 3);  // k = (1,1)
  CHECK(ws[1].sphere_dim == 4);  // k = (1,2)
  CHECK(ws[2].sphere_dim == 4);  // k = (2,1)
  CHECK(ws[0].letters[0].powers == std::vector<int>{1, 1});
  CHECK(ws[1].letters[0].powers == std::vector<int>{1, 2});
  CHECK(ws[2].letters[0].powers == std::vector<int>{2, 1});
  CHECK(ws[0].word_label == "a_{12}(1,1)");
}

TEST_CASE("witnesses for the boundary triangle") {
  std::vector<DivergenceWitness> ws = divergence_witnesses(boundary_triangle(), spheres({1, 1, 1}), 1);
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].sphere_dim == 5);
  CHECK(ws[0].letters[0].subset == Simplex{1, 2, 3});
  CHECK(ws[0].letters[0].powers == std::vector<int>{1, 1, 1});
}

TEST_CASE("the full simplex has no witnesses") {
  CHECK_THROWS_AS(divergence_witnesses(full_simplex(2), spheres({1, 1}), 1),
                  std::invalid_argument);
}

TEST_CASE("witness lists are prefixes of longer lists") {
  for (int count = 1; count <= 12; ++count) {
    std::vector<DivergenceWitness> shorter =
        divergence_witnesses(two_points(), spheres({1, 2}), count);
    std::vector<DivergenceWitness> longer =
        divergence_witnesses(two_points(), spheres({1, 2}), count + 1);
    REQUIRE(shorter.size() == static_cast<std::size_t>(count));
    REQUIRE(longer.size() == static_cast<std::size_t>(count + 1));
    for (int i = 0; i < count; ++i) {
      CHECK(shorter[static_cast<std::size_t>(i)].word_label ==
            longer[static_cast<std::size_t>(i)].word_label);
      CHECK(shorter[static_cast<std::size_t>(i)].sphere_dim ==
            longer[static_cast<std::size_t>(i)].sphere_dim);
    }
  }
}

TEST_CASE("witness dimensions match the tower smash computation and stay >= 2") {
  for (const SimplicialComplex& k :
       {two_points(), boundary_triangle(), four_cycle(),
        SimplicialComplex::from_facets(3, {Simplex{1, 3}, Simplex{2, 3}})}) {
    tower::SpaceSpec spec = spheres(std::vector<int>(static_cast<std::size_t>(k.vertex_count()), 1));
    std::vector<DivergenceWitness> ws = divergence_witnesses(k, spec, 20);
    REQUIRE(ws.size() == 20);
    Simplex face = k.minimal_missing_faces().front();
    GradedAbelianGroup face_homology = simplicial_homology(k.full_subcomplex(face));
    for (const DivergenceWitness& w : ws) {
      CHECK(w.sphere_dim >= 2);
      // independent route: smash the letters' homologies and suspend once
      GradedAbelianGroup g = sphere_homology(0);
      long sphere_part = 0;
      for (const tower::GeneratorIndex& gidx : w.letters) {
        g = smash_homology(g, face_homology);
        std::size_t j = 0;
        for (int v : gidx.subset.vertices()) {
          sphere_part += static_cast<long>(gidx.powers[j++]) * spec.unsuspended_dim(v);
        }
      }
      g = suspend(g, 1 + static_cast<int>(sphere_part));
      CHECK(g == sphere_homology(static_cast<int>(w.sphere_dim)));
    }
  }
}

TEST_CASE("witness json carries classification, certificate and the witness list") {
  std::vector<DivergenceWitness> ws = divergence_witnesses(two_points(), spheres({1, 1}), 2);
  nlohmann::json j = witnesses_to_json(two_points(), spheres({1, 1}), ws);
  CHECK(j["classification"] == "IntegralConvergesVhDiverges");
  CHECK(j["certificate"] == "Shifted");
  CHECK(j["witness_face"] == nlohmann::json::array({1, 2}));
  REQUIRE(j["witnesses"].size() == 2);
  CHECK(j["witnesses"][0]["sphere_dim"] == 3);
}
