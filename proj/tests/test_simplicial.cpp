#include "pptower/simplicial.hpp"

#include <random>
#include <sstream>

#include "doctest.h"
#include "support/oracles.hpp"

using namespace pptower;

namespace {

SimplicialComplex boundary_triangle() {
  return SimplicialComplex::from_facets(3, {Simplex{1, 2}, Simplex{1, 3}, Simplex{2, 3}});
}

SimplicialComplex four_cycle() {
  return SimplicialComplex::from_facets(
      4, {Simplex{1, 2}, Simplex{2, 3}, Simplex{3, 4}, Simplex{1, 4}});
}

SimplicialComplex two_points() { return SimplicialComplex::from_facets(2, {}); }

}  // namespace

TEST_CASE("simplex basics") {
  Simplex s{1, 3, 4};
  CHECK(s.cardinality() == 3);
  CHECK(s.dimension() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.vertices() == std::vector<int>{1, 3, 4});
  CHECK(s.to_string() == "{1,3,4}");
  CHECK(Simplex{}.is_empty());
  CHECK_THROWS_AS((Simplex{2, 2}), std::invalid_argument);
  CHECK_THROWS_AS((Simplex{0}), std::out_of_range);
}

TEST_CASE("card-lex face order") {
  CHECK(Simplex::card_lex_less(Simplex{3}, Simplex{1, 2}));
  CHECK(Simplex::card_lex_less(Simplex{1, 2}, Simplex{1, 3}));
  CHECK(Simplex::card_lex_less(Simplex{1, 4}, Simplex{2, 3}));
  CHECK_FALSE(Simplex::card_lex_less(Simplex{2, 3}, Simplex{1, 4}));
  CHECK_FALSE(Simplex::card_lex_less(Simplex{1, 2}, Simplex{1, 2}));
}

TEST_CASE("from_facets closes downward and forces singletons") {
  SimplicialComplex k = boundary_triangle();
  CHECK(k.face_count() == 7);  // {}, three vertices, three edges
  CHECK(k.contains(Simplex{}));
  CHECK(k.contains(Simplex{2}));
  CHECK(k.contains(Simplex{1, 3}));
  CHECK_FALSE(k.contains(Simplex{1, 2, 3}));

  SimplicialComplex points = two_points();
  CHECK(points.face_count() == 3);
  CHECK(points.contains_all_vertices());

  CHECK(four_cycle().face_count() == 9);

  CHECK_THROWS_AS(SimplicialComplex::from_facets(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {Simplex{3}}), std::out_of_range);
}

TEST_CASE("downward closure is idempotent") {
  for (const SimplicialComplex& k : {boundary_triangle(), four_cycle(), two_points()}) {
    std::vector<Simplex> facets = k.facets();
    CHECK(SimplicialComplex::from_facets(k.vertex_count(), facets) == k);
  }
}

TEST_CASE("skeleta of the full simplex") {
  CHECK(skeleton(3, 2) == full_simplex(3));
  CHECK(skeleton(3, 0).face_count() == 4);  // {} and three vertices
  CHECK(skeleton(4, 1).face_count() == 11);  // 1 + 4 + 6
  CHECK(skeleton(2, -1).face_count() == 1);  // just {}
  CHECK_THROWS_AS(skeleton(3, 3), std::out_of_range);
  CHECK_THROWS_AS(skeleton(3, -2), std::out_of_range);
}

TEST_CASE("full subcomplex") {
  SimplicialComplex k = boundary_triangle();
  CHECK(k.full_subcomplex(Simplex{1, 2}) == full_simplex(2));
  CHECK(k.full_subcomplex(Simplex{1, 2, 3}).face_count() == 7);

  SimplicialComplex cycle = four_cycle();
  SimplicialComplex diag = cycle.full_subcomplex(Simplex{1, 3});
  CHECK(diag.vertex_count() == 2);
  CHECK(diag.face_count() == 3);  // two discrete points

  CHECK_THROWS_AS(k.full_subcomplex(Simplex{}), std::invalid_argument);

  // re-indexing: K_{[m]} = K
  CHECK(cycle.full_subcomplex(Simplex{1, 2, 3, 4}) == cycle);
}

TEST_CASE("full subcomplex is monotone") {
  SimplicialComplex cycle = four_cycle();
  for (std::uint32_t i = 1; i < 16; ++i) {
    for (std::uint32_t j = 1; j < 16; ++j) {
      if ((i & ~j) != 0) continue;  // need I subset of J
      Simplex si = Simplex::from_mask(i), sj = Simplex::from_mask(j);
      // every face of K_I, pushed back to original labels, is a face of K_J
      for (const Simplex& f : cycle.faces()) {
        if (f.subset_of(si)) CHECK(f.subset_of(sj));
      }
    }
  }
}

TEST_CASE("minimal missing faces") {
  CHECK(boundary_triangle().minimal_missing_faces() == std::vector<Simplex>{Simplex{1, 2, 3}});
  CHECK(full_simplex(4).minimal_missing_faces().empty());
  CHECK(four_cycle().minimal_missing_faces() == std::vector<Simplex>{Simplex{1, 3}, Simplex{2, 4}});
}

TEST_CASE("minimal missing faces cut out simplex boundaries") {
  for (int m = 2; m <= 4; ++m) {
    for (const SimplicialComplex& k : oracles::all_complexes(m)) {
      std::vector<Simplex> missing = k.minimal_missing_faces();
      CHECK(missing.empty() == k.is_full_simplex());
      for (const Simplex& f : missing) {
        SimplicialComplex sub = k.full_subcomplex(f);
        CHECK(sub.face_count() == (1u << f.cardinality()) - 1);
      }
    }
  }
}

TEST_CASE("shiftedness") {
  CHECK(full_simplex(4).is_shifted());
  CHECK(boundary_triangle().is_shifted());
  CHECK_FALSE(four_cycle().is_shifted());
  CHECK(skeleton(5, 2).is_shifted());
}

TEST_CASE("shiftedness matches exhaustive triple checking") {
  auto by_triples = [](const SimplicialComplex& k) {
    bool expected = true;
    for (const Simplex& f : k.faces()) {
      for (int i : f.vertices()) {
        for (int j = i + 1; j <= k.vertex_count(); ++j) {
          Simplex moved = f.without(i).with(j);
          if (!k.contains(moved)) expected = false;
        }
      }
    }
    return expected;
  };
  for (int m = 2; m <= 4; ++m) {
    for (const SimplicialComplex& k : oracles::all_complexes(m)) {
      CHECK(k.is_shifted() == by_triples(k));
    }
  }
  std::mt19937 rng(5150);
  for (int m = 5; m <= 6; ++m) {
    for (int trial = 0; trial < 400; ++trial) {
      SimplicialComplex k = oracles::random_complex(m, rng);
      CHECK(k.is_shifted() == by_triples(k));
    }
    for (int d = 0; d < m; ++d) CHECK(skeleton(m, d).is_shifted());
  }
}

TEST_CASE("fat wedge filtration certificates") {
  CHECK(fwf_trivial_certificate(boundary_triangle()) == FwfCertificate::Shifted);
  CHECK(fwf_trivial_certificate(four_cycle()) == FwfCertificate::Unknown);
  CHECK(fwf_trivial_certificate(four_cycle(), true) == FwfCertificate::UserAsserted);
  CHECK(fwf_trivial_certificate(skeleton(5, 2)) == FwfCertificate::SkeletonOfSimplex);
  CHECK(fwf_trivial_certificate(full_simplex(3)) == FwfCertificate::SkeletonOfSimplex);
}

TEST_CASE("is_full_simplex") {
  CHECK(is_full_simplex(full_simplex(3)));
  CHECK_FALSE(is_full_simplex(boundary_triangle()));
  CHECK_FALSE(is_full_simplex(four_cycle()));
}

TEST_CASE("complex file parsing") {
  std::istringstream in("m=3\n# boundary of the triangle\n1 2\n1 3\n\n2 3\n");
  SimplicialComplex k = read_complex(in);
  CHECK(k == boundary_triangle());

  std::istringstream missing_header("1 2\n");
  CHECK_THROWS_AS(read_complex(missing_header), std::invalid_argument);
  std::istringstream bad_field("m=2\n1 x\n");
  CHECK_THROWS_AS(read_complex(bad_field), std::invalid_argument);
  std::istringstream out_of_range("m=2\n1 3\n");
  CHECK_THROWS_AS(read_complex(out_of_range), std::out_of_range);
}

TEST_CASE("canonical json emission") {
  nlohmann::json j = complex_to_json(boundary_triangle());
  CHECK(j.dump() == R"({"facets":[[1,2],[1,3],[2,3]],"m":3})");
}

TEST_CASE("exhaustive complex counts") {
  CHECK(oracles::all_complexes(1).size() == 1);
  CHECK(oracles::all_complexes(2).size() == 2);
  CHECK(oracles::all_complexes(3).size() == 9);
  CHECK(oracles::all_complexes(4).size() == 114);
}
