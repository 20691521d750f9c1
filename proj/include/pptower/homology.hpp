#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "pptower/simplicial.hpp"
#include "pptower/snf.hpp"

namespace pptower {

// Finitely generated graded abelian group, each degree in invariant-factor
// form: Z^rank + Z/t_1 + ... + Z/t_s with t_1 | t_2 | ... and every t_j >= 2.
// Degrees may be negative: the empty complex has reduced homology Z in
// degree -1, and the wedge bookkeeping leans on that convention.
class GradedAbelianGroup {
 public:
  struct Summand {
    long rank = 0;
    std::vector<Int> torsion;
  };

  GradedAbelianGroup() = default;

  void add_free(int degree, long rank);
  void add_torsion(int degree, const Int& order);          // folds into canonical form
  void add_summand(int degree, const Summand& s);
  void add(const GradedAbelianGroup& other);               // direct sum in place

  bool is_zero() const { return degrees_.empty(); }
  long rank(int degree) const;
  std::vector<Int> torsion(int degree) const;
  const std::map<int, Summand>& degrees() const { return degrees_; }
  int min_degree() const;  // throws if zero
  int max_degree() const;

  friend bool operator==(const GradedAbelianGroup& a, const GradedAbelianGroup& b);

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  void canonicalize(int degree);
  std::map<int, Summand> degrees_;
};

GradedAbelianGroup direct_sum(const GradedAbelianGroup& a, const GradedAbelianGroup& b);

// Degree shift by t >= 0 (suspension).
GradedAbelianGroup suspend(const GradedAbelianGroup& g, int t);

// Reduced homology of a smash product via the Kunneth formula over Z:
// degree d = sum over p+q=d of A_p (x) B_q, plus Tor(A_p, B_q) in p+q+1.
GradedAbelianGroup smash_homology(const GradedAbelianGroup& a, const GradedAbelianGroup& b);

// Reduced homology of a sphere: Z in the given degree (degree >= -1;
// S^{-1} is the empty space).
GradedAbelianGroup sphere_homology(int dim);

// Integer chain complex: boundary(d) maps degree-d chains to degree-(d-1)
// chains. The constructor checks shapes and boundary(d-1) * boundary(d) = 0.
class ChainComplex {
 public:
  ChainComplex(std::map<int, std::vector<std::string>> labels,
               std::map<int, IntMatrix> boundaries);

  long dimension(int degree) const;
  const std::map<int, std::vector<std::string>>& labels() const { return labels_; }
  const std::map<int, IntMatrix>& boundaries() const { return boundaries_; }

  GradedAbelianGroup homology() const;
  long euler_characteristic() const;  // alternating sum of basis sizes

 private:
  std::map<int, std::vector<std::string>> labels_;
  std::map<int, IntMatrix> boundaries_;
};

// Subcomplex of the cube [0,1]^m: cells are words over {0,1,*}, one letter
// per coordinate, dimension = number of '*'. Closed under replacing any '*'
// with 0 or 1.
class CubicalComplex {
 public:
  // Encodes one cell as a word; the string form is e.g. "0*1".
  CubicalComplex(int ambient_dimension, std::vector<std::string> cells);

  int ambient_dimension() const { return m_; }
  std::size_t cell_count() const { return cells_.size(); }
  const std::vector<std::string>& cells() const { return cells_; }

  ChainComplex chain_complex() const;  // augmented: includes degree -1
  GradedAbelianGroup homology() const;

 private:
  int m_ = 0;
  std::vector<std::string> cells_;  // sorted by (dimension, lex)
};

// The polyhedral product (D^1, S^0)^K as a cubical complex: cells are the
// words whose '*' positions form a face of K.
CubicalComplex real_moment_angle_complex(const SimplicialComplex& k);

// Reduced integral simplicial homology (augmented chain complex, SNF).
GradedAbelianGroup simplicial_homology(const SimplicialComplex& k);

GradedAbelianGroup cubical_homology(const CubicalComplex& c);

// Direct sum over all nonempty index sets I of the reduced homology of the
// full subcomplex K_I, shifted up by one degree. Always isomorphic to the
// homology of the real moment-angle complex; the equality of the two routes
// is the wedge-splitting verification.
GradedAbelianGroup wedge_splitting_homology(const SimplicialComplex& k);

}  // namespace pptower
