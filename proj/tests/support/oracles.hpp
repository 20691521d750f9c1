#pragma once

// Test-only oracles, kept deliberately independent of the library's
// enumeration and reduction paths: brute force over all words with a
// rotation-based Lyndon test, Smith invariants through determinantal
// divisors, and exhaustive complex generation.

#include <cstdint>
#include <random>
#include <vector>

#include "pptower/homology.hpp"
#include "pptower/simplicial.hpp"
#include "pptower/snf.hpp"
#include "pptower/tower.hpp"

namespace oracles {

// Number of Lyndon words of length exactly n over q letters, by enumerating
// all q^n words and comparing each against its rotations.
long lyndon_count_bruteforce(int q, int n);

// Same, restricted to words with the exact letter-multiplicity vector.
long lyndon_count_bruteforce(std::span<const int> multiplicity);

// All Lyndon words of length <= max_len over q letters, (length, lex) order.
std::vector<std::vector<int>> lyndon_words_bruteforce(int q, int max_len);

// Invariant factors via determinantal divisors: d_k = gcd of all k x k
// minors, t_k = d_k / d_{k-1}. Exponential in the matrix size; use on small
// matrices only.
pptower::SmithForm smith_form_by_minors(const pptower::IntMatrix& a);

// One Lie factor as the brute-force pipeline sees it.
struct OracleFactor {
  std::vector<pptower::tower::GeneratorIndex> letters;  // word, left to right
  std::vector<long> a;
  long kappa = 0;

  friend bool operator==(const OracleFactor&, const OracleFactor&) = default;
};

// Exhaustive enumeration of the kappa >= 1 factors: walks every sequence of
// potentially nonzero generators within the weight budget, keeps the Lyndon
// ones (rotation test), computes smash powers by direct counting. Null
// generators (faces of K) never contribute.
std::vector<OracleFactor> factors_multi_bruteforce(const pptower::SimplicialComplex& k,
                                                   const std::vector<int>& n,
                                                   const pptower::tower::SpaceSpec& spec);
std::vector<OracleFactor> factors_single_bruteforce(const pptower::SimplicialComplex& k, int n,
                                                    const pptower::tower::SpaceSpec& spec);
std::vector<OracleFactor> cone_factors_bruteforce(const pptower::SimplicialComplex& k,
                                                  const std::vector<int>& n,
                                                  const pptower::tower::SpaceSpec& spec);
std::vector<OracleFactor> bh_factors_bruteforce(const pptower::SimplicialComplex& k, int n,
                                                const pptower::tower::SpaceSpec& spec);

// Every simplicial complex on exactly m labeled vertices that contains all
// singletons, by filtering the subsets of the size >= 2 faces for downward
// closure. 1, 2, 9, 114 complexes for m = 1..4.
std::vector<pptower::SimplicialComplex> all_complexes(int m);

// Seeded random complex containing every vertex.
pptower::SimplicialComplex random_complex(int m, std::mt19937& rng);

// Convert library factors to the oracle shape for comparisons.
std::vector<OracleFactor> project(const pptower::tower::FactorList& factors);

}  // namespace oracles
