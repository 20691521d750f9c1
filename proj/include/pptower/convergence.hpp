#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pptower/simplicial.hpp"
#include "pptower/tower.hpp"

namespace pptower::convergence {

// Where a complex sits relative to the convergence results: the full simplex
// converges everywhere; any other certified complex converges integrally but
// diverges in v_h-periodic homotopy on spheres of dimension at least two;
// without a certificate nothing is claimed.
enum class Classification { ConvergesEverywhere, IntegralConvergesVhDiverges, OutsideHypotheses };
std::string to_string(Classification c);

struct ConvergenceReport {
  Classification classification = Classification::OutsideHypotheses;
  FwfCertificate certificate = FwfCertificate::Unknown;
  std::optional<Simplex> witness_face;  // present exactly in the divergent case

  nlohmann::json to_json() const;
};

ConvergenceReport classify(const SimplicialComplex& k, bool assume_trivial_fwf = false);

// One member of the divergence witness family: a Hall word on the generators
// attached to the least minimal missing face, whose suspended smash space is
// a sphere of dimension >= 2.
struct DivergenceWitness {
  explicit DivergenceWitness(lie::HallWord w) : word(std::move(w)) {}

  lie::HallWord word;
  std::vector<tower::GeneratorIndex> letters;  // leaves, in word order
  std::string word_label;
  long sphere_dim = 0;
};

// The first `count` witnesses in (sphere dimension, word length, lex) order;
// the list for count N is a prefix of the list for N+1.
std::vector<DivergenceWitness> divergence_witnesses(const SimplicialComplex& k,
                                                    const tower::SpaceSpec& spec, int count);

nlohmann::json witnesses_to_json(const SimplicialComplex& k, const tower::SpaceSpec& spec,
                                 const std::vector<DivergenceWitness>& witnesses);

}  // namespace pptower::convergence
