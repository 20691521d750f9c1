#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pptower/homology.hpp"
#include "pptower/lie.hpp"
#include "pptower/simplicial.hpp"

namespace pptower::tower {

// Per-variable excisive degrees n_i >= 0.
using MultiIndex = std::vector<int>;

// The input spaces: X_i = S^{dims[i]}. The multivariable and single-variable
// decompositions consume the once-suspended spaces, so with pre_suspended
// false (the default) the pipeline works with Sigma X_i = S^{dims[i]+1}
// internally. With pre_suspended true the given dims are read as the
// dimensions of Sigma X_i, i.e. the unsuspended inputs are S^{dims[i]-1}.
struct SpaceSpec {
  std::vector<int> dims;
  bool pre_suspended = false;

  int variables() const { return static_cast<int>(dims.size()); }
  int unsuspended_dim(int variable) const;  // 1-based variable index
  void validate(int m) const;
};

// A formal generator: alpha_{I,k} with I a nonempty subset of [m] and every
// k_i >= 1 (beta generators are the special case k = (1,...,1)). Member of
// the restricted index set exactly when I is not a face of K.
struct GeneratorIndex {
  Simplex subset;
  std::vector<int> powers;  // over the ascending vertices of subset

  std::vector<int> multidegree(int m) const;  // b(I,k)_i
  int weight() const;                         // sum of powers
  std::string label(bool beta = false) const;

  friend bool operator==(const GeneratorIndex& a, const GeneratorIndex& b) {
    return a.subset == b.subset && a.powers == b.powers;
  }
  // (|I|, I lex, sum k, k lex): the generator order behind every Lyndon
  // comparison in this module.
  static bool canonical_less(const GeneratorIndex& a, const GeneratorIndex& b);
};

enum class IndexingMode { MissingFacesOnly, AllSubsets };
enum class Variant { Multi, Single, Cone, BhIdentity };
std::string to_string(Variant v);

// The truncated generator alphabet: all (I,k) with k_i <= caps_i, restricted
// to missing faces or not, in canonical order. The mirrored lie::Alphabet
// carries labels and multidegrees for the word machinery.
struct GeneratorAlphabet {
  std::vector<GeneratorIndex> generators;
  lie::Alphabet alphabet;
  bool beta = false;
};

GeneratorAlphabet generator_alphabet(const SimplicialComplex& k, std::span<const int> degree_caps,
                                     IndexingMode mode = IndexingMode::MissingFacesOnly);

// The smash shape of a word evaluated on the generators: which subcomplex
// realizations appear (with multiplicity), the per-variable smash powers a_i,
// and the accumulated explicit suspension.
struct SmashWord {
  std::vector<std::pair<Simplex, int>> subcomplexes;  // (I, multiplicity), (card, lex) order
  std::vector<long> smash_powers;                     // a_i, one per variable
  int suspension = 0;

  long total_weight() const;
};

SmashWord alpha_space(const GeneratorIndex& g, const SimplicialComplex& k, const SpaceSpec& spec);

// min over the variables actually present in the word (a_i >= 1) of
// floor(n_i / a_i); a functor constant in variable i is n_i-excisive for
// every n_i, so absent variables impose no constraint.
long kappa_multi(std::span<const int> n, std::span<const long> a);
// floor(n / sum_i a_i)
long kappa_single(int n, std::span<const long> a);

struct Factor {
  explicit Factor(lie::HallWord w) : word(std::move(w)) {}

  lie::HallWord word;
  std::vector<GeneratorIndex> letters;  // leaves, in word order
  std::string word_label;
  SmashWord smash;
  long kappa = 0;
  std::string space;
  GradedAbelianGroup homology;
  std::optional<long> sphere_dim;  // set when every K_I in the word is a simplex boundary

  nlohmann::json to_json() const;
};

struct EnumerationOptions {
  bool assume_trivial_fwf = false;
  IndexingMode indexing = IndexingMode::MissingFacesOnly;
  std::uint64_t safety_cap = 1'000'000;  // visited words before erroring out
  int bound_multiplier = 1;              // scales the certified truncation; test hook
};

struct FactorList {
  std::vector<Factor> factors;
  FwfCertificate certificate = FwfCertificate::Unknown;
  std::uint64_t words_visited = 0;
  std::uint64_t dropped_kappa_zero = 0;
  std::uint64_t dropped_null = 0;
};

// The Lie-factor half of the decompositions. Output is exactly the factors
// with kappa >= 1, complete by the truncation argument, ordered by
// (total smash weight, word length, lex on letters).
FactorList enumerate_factors_multi(const SimplicialComplex& k, const MultiIndex& n,
                                   const SpaceSpec& spec, const EnumerationOptions& opts = {});
FactorList enumerate_factors_single(const SimplicialComplex& k, int n, const SpaceSpec& spec,
                                    const EnumerationOptions& opts = {});
FactorList cone_factors(const SimplicialComplex& k, const MultiIndex& n, const SpaceSpec& spec,
                        const EnumerationOptions& opts = {});
FactorList bh_identity_factors(const SimplicialComplex& k, int n, const SpaceSpec& spec,
                               const EnumerationOptions& opts = {});

// The split-off product half: one entry per variable.
struct ProductFactor {
  int variable = 0;
  int degree = 0;
  int sphere_dim = 0;  // dimension of Sigma X_i
  std::string space;
};
std::vector<ProductFactor> product_factors(const MultiIndex& n, const SpaceSpec& spec);

struct DegreeComparisonRow {
  std::string word_label;
  std::vector<GeneratorIndex> letters;
  long kappa_cone = 0;
  long kappa_bh = 0;
};

// Side-by-side single-variable degrees for every word of the cone and
// identity-on-wedge decompositions; kappa_cone <= kappa_bh throughout.
std::vector<DegreeComparisonRow> degree_comparison(const SimplicialComplex& k, int n,
                                                   const SpaceSpec& spec,
                                                   const EnumerationOptions& opts = {});

struct Decomposition {
  Variant variant = Variant::Multi;
  MultiIndex n;
  SpaceSpec spec;
  FactorList lie_factors;
  std::vector<ProductFactor> product;  // empty for the cone and bh variants

  nlohmann::json to_json() const;
};

// Assembled report. For Variant::Single and Variant::BhIdentity, n must hold
// a single entry.
Decomposition full_decomposition(const SimplicialComplex& k, const MultiIndex& n,
                                 const SpaceSpec& spec, Variant variant,
                                 const EnumerationOptions& opts = {});

// Sphere census of the decomposition pipeline with no excisive cutoff,
// truncated at max_dim: how many sphere wedge summands of each dimension the
// lie factors and product factors contribute. Each generator is refined into
// one sphere per free homology unit of its subcomplex before counting basis
// words, which is the integral refinement the identity-on-wedge pipeline
// sees; torsion carries no sphere and is not counted.
std::map<long, long> factor_dimension_census(const SimplicialComplex& k, const SpaceSpec& spec,
                                             long max_dim, const EnumerationOptions& opts = {});

// The same census for the Hilton-Milnor style identity-on-wedge pipeline on
// m letters: one sphere Sigma omega(X) of dimension 1 + sum of letter dims
// per basis word.
std::map<long, long> wedge_identity_dimension_census(const SpaceSpec& spec, long max_dim);

}  // namespace pptower::tower
