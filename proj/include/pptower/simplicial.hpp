#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace pptower {

// A face on the vertex set [m]: strictly increasing vertex ids, possibly
// empty. Stored as a bitmask, vertex i <-> bit i-1.
class Simplex {
 public:
  static constexpr int kMaxVertices = 30;

  Simplex() = default;
  Simplex(std::initializer_list<int> vertices);
  static Simplex from_vertices(std::span<const int> vertices);
  static Simplex from_mask(std::uint32_t mask) {
    Simplex s;
    s.mask_ = mask;
    return s;
  }

  std::uint32_t mask() const { return mask_; }
  int cardinality() const;
  int dimension() const { return cardinality() - 1; }
  bool is_empty() const { return mask_ == 0; }
  bool contains(int v) const { return v >= 1 && (mask_ >> (v - 1)) & 1u; }
  bool subset_of(Simplex other) const { return (mask_ & ~other.mask_) == 0; }
  int max_vertex() const;
  std::vector<int> vertices() const;

  Simplex with(int v) const;
  Simplex without(int v) const;

  friend bool operator==(Simplex a, Simplex b) { return a.mask_ == b.mask_; }

  // (cardinality, lex on the ascending vertex sequence): the face order used
  // for every canonical listing in this project.
  static bool card_lex_less(Simplex a, Simplex b);

  std::string to_string() const;

 private:
  std::uint32_t mask_ = 0;
};

enum class FwfCertificate { Shifted, SkeletonOfSimplex, UserAsserted, Unknown };
std::string to_string(FwfCertificate c);

// Finite simplicial complex on the vertex set [m]. Always downward closed
// and always contains the empty face. Every complex built through the public
// constructors contains all singletons {i}; the lone exception is the (-1)-
// skeleton, which consists of the empty face alone.
class SimplicialComplex {
 public:
  static SimplicialComplex from_facets(int m, std::span<const Simplex> facets);
  static SimplicialComplex from_facets(int m, std::initializer_list<Simplex> facets);
  static SimplicialComplex full_simplex(int m);
  static SimplicialComplex skeleton(int m, int k);

  int vertex_count() const { return m_; }
  std::size_t face_count() const { return faces_.size(); }
  const std::vector<Simplex>& faces() const { return faces_; }
  std::vector<Simplex> facets() const;
  std::vector<long> f_vector() const;  // f[d] = number of d-dimensional faces
  bool contains(Simplex s) const;
  bool contains_all_vertices() const;

  SimplicialComplex full_subcomplex(Simplex index_set) const;
  std::vector<Simplex> minimal_missing_faces() const;
  bool is_shifted() const;
  bool is_full_simplex() const;

  // Recorded at construction; drives the SkeletonOfSimplex certificate.
  bool built_as_skeleton() const { return skeleton_provenance_; }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.m_ == b.m_ && a.faces_ == b.faces_;
  }

 private:
  SimplicialComplex() = default;
  static SimplicialComplex from_face_masks(int m, std::vector<std::uint32_t> masks);

  int m_ = 0;
  bool skeleton_provenance_ = false;
  std::vector<Simplex> faces_;           // (card, lex) sorted, includes {}
  std::vector<std::uint32_t> mask_index_;  // value-sorted, for membership tests
};

SimplicialComplex from_facets(int m, std::span<const Simplex> facets);
SimplicialComplex full_simplex(int m);
SimplicialComplex skeleton(int m, int k);
SimplicialComplex full_subcomplex(const SimplicialComplex& k, Simplex index_set);
std::vector<Simplex> minimal_missing_faces(const SimplicialComplex& k);
bool is_shifted(const SimplicialComplex& k);
bool is_full_simplex(const SimplicialComplex& k);
FwfCertificate fwf_trivial_certificate(const SimplicialComplex& k, bool assume_flag = false);

// Raised when an operation requires a trivial fat wedge filtration and the
// complex carries no certificate.
class hypothesis_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Complex file format: first line "m=<int>", then one facet per line as
// space-separated vertex ids; blank lines and lines starting with '#' are
// ignored.
SimplicialComplex read_complex(std::istream& in);
SimplicialComplex read_complex_file(const std::string& path);
nlohmann::json complex_to_json(const SimplicialComplex& k);

}  // namespace pptower
