#include "pptower/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pptower {

Simplex::Simplex(std::initializer_list<int> vertices) {
  std::vector<int> vs(vertices);
  *this = from_vertices(vs);
}

Simplex Simplex::from_vertices(std::span<const int> vertices) {
  Simplex s;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices) throw std::out_of_range("vertex id out of range");
    std::uint32_t bit = 1u << (v - 1);
    if (s.mask_ & bit) throw std::invalid_argument("repeated vertex in simplex");
    s.mask_ |= bit;
  }
  return s;
}

int Simplex::cardinality() const { return std::popcount(mask_); }

int Simplex::max_vertex() const { return mask_ == 0 ? 0 : std::bit_width(mask_); }

std::vector<int> Simplex::vertices() const {
  std::vector<int> out;
  out.reserve(cardinality());
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

Simplex Simplex::with(int v) const {
  Simplex s = *this;
  s.mask_ |= 1u << (v - 1);
  return s;
}

Simplex Simplex::without(int v) const {
  Simplex s = *this;
  s.mask_ &= ~(1u << (v - 1));
  return s;
}

bool Simplex::card_lex_less(Simplex a, Simplex b) {
  int ca = a.cardinality(), cb = b.cardinality();
  if (ca != cb) return ca < cb;
  std::uint32_t diff = a.mask_ ^ b.mask_;
  if (diff == 0) return false;
  // Equal cardinality: the face owning the lowest differing vertex has the
  // lexicographically smaller ascending vertex sequence.
  std::uint32_t low = diff & (~diff + 1);
  return (a.mask_ & low) != 0;
}

std::string Simplex::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : vertices()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  out += "}";
  return out;
}

std::string to_string(FwfCertificate c) {
  switch (c) {
    case FwfCertificate::Shifted: return "Shifted";
    case FwfCertificate::SkeletonOfSimplex: return "SkeletonOfSimplex";
    case FwfCertificate::UserAsserted: return "UserAsserted";
    case FwfCertificate::Unknown: return "Unknown";
  }
  return "Unknown";
}

SimplicialComplex SimplicialComplex::from_face_masks(int m, std::vector<std::uint32_t> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

  SimplicialComplex k;
  k.m_ = m;
  k.mask_index_ = masks;
  k.faces_.reserve(masks.size());
  for (std::uint32_t f : masks) k.faces_.push_back(Simplex::from_mask(f));
  std::sort(k.faces_.begin(), k.faces_.end(), Simplex::card_lex_less);
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(int m, std::span<const Simplex> facets) {
  if (m < 1) throw std::invalid_argument("vertex count must be at least 1");
  if (m > Simplex::kMaxVertices) throw std::invalid_argument("vertex count too large");

  std::vector<std::uint32_t> masks;
  masks.push_back(0);
  for (int v = 1; v <= m; ++v) masks.push_back(1u << (v - 1));
  for (const Simplex& f : facets) {
    if (f.max_vertex() > m) throw std::out_of_range("facet vertex exceeds vertex count");
    // All submasks of the facet.
    std::uint32_t fm = f.mask();
    std::uint32_t sub = fm;
    for (;;) {
      masks.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & fm;
    }
  }
  return from_face_masks(m, std::move(masks));
}

SimplicialComplex SimplicialComplex::from_facets(int m, std::initializer_list<Simplex> facets) {
  std::vector<Simplex> fs(facets);
  return from_facets(m, std::span<const Simplex>(fs));
}

SimplicialComplex SimplicialComplex::full_simplex(int m) { return skeleton(m, m - 1); }

SimplicialComplex SimplicialComplex::skeleton(int m, int k) {
  if (m < 1) throw std::invalid_argument("vertex count must be at least 1");
  if (m > Simplex::kMaxVertices) throw std::invalid_argument("vertex count too large");
  if (k < -1 || k > m - 1) throw std::out_of_range("skeleton dimension out of range");

  std::vector<std::uint32_t> masks;
  const std::uint32_t all = (1u << m) - 1;
  for (std::uint32_t f = 0; f <= all; ++f) {
    if (std::popcount(f) <= k + 1) masks.push_back(f);
  }
  SimplicialComplex out = from_face_masks(m, std::move(masks));
  out.skeleton_provenance_ = true;
  return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (const Simplex& f : faces_) {
    bool maximal = true;
    for (int v = 1; v <= m_ && maximal; ++v) {
      if (!f.contains(v) && contains(f.with(v))) maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  return out;  // inherits (card, lex) order
}

std::vector<long> SimplicialComplex::f_vector() const {
  std::vector<long> f;
  for (const Simplex& s : faces_) {
    int d = s.dimension();
    if (d < 0) continue;
    if (static_cast<int>(f.size()) <= d) f.resize(d + 1, 0);
    ++f[d];
  }
  return f;
}

bool SimplicialComplex::contains(Simplex s) const {
  return std::binary_search(mask_index_.begin(), mask_index_.end(), s.mask());
}

bool SimplicialComplex::contains_all_vertices() const {
  for (int v = 1; v <= m_; ++v) {
    if (!contains(Simplex{v})) return false;
  }
  return true;
}

SimplicialComplex SimplicialComplex::full_subcomplex(Simplex index_set) const {
  if (index_set.is_empty()) throw std::invalid_argument("full subcomplex needs a nonempty index set");
  if (index_set.max_vertex() > m_) throw std::out_of_range("index set exceeds vertex count");

  // Re-index the vertices of I by the order-preserving bijection I -> [|I|].
  std::vector<int> position(m_ + 1, 0);
  int next = 1;
  for (int v : index_set.vertices()) position[v] = next++;

  std::vector<std::uint32_t> masks;
  for (const Simplex& f : faces_) {
    if (!f.subset_of(index_set)) continue;
    std::uint32_t packed = 0;
    for (int v : f.vertices()) packed |= 1u << (position[v] - 1);
    masks.push_back(packed);
  }
  return from_face_masks(index_set.cardinality(), std::move(masks));
}

std::vector<Simplex> SimplicialComplex::minimal_missing_faces() const {
  std::vector<Simplex> out;
  const std::uint32_t all = (1u << m_) - 1;
  for (std::uint32_t f = 1; f <= all; ++f) {
    Simplex s = Simplex::from_mask(f);
    if (contains(s)) continue;
    bool minimal = true;
    for (int v : s.vertices()) {
      if (!contains(s.without(v))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), Simplex::card_lex_less);
  return out;
}

bool SimplicialComplex::is_shifted() const {
  for (const Simplex& f : faces_) {
    for (int i : f.vertices()) {
      for (int j = i + 1; j <= m_; ++j) {
        if (f.contains(j)) continue;
        if (!contains(f.without(i).with(j))) return false;
      }
    }
  }
  return true;
}

bool SimplicialComplex::is_full_simplex() const {
  return contains(Simplex::from_mask((1u << m_) - 1));
}

SimplicialComplex from_facets(int m, std::span<const Simplex> facets) {
  return SimplicialComplex::from_facets(m, facets);
}
SimplicialComplex full_simplex(int m) { return SimplicialComplex::full_simplex(m); }
SimplicialComplex skeleton(int m, int k) { return SimplicialComplex::skeleton(m, k); }
SimplicialComplex full_subcomplex(const SimplicialComplex& k, Simplex index_set) {
  return k.full_subcomplex(index_set);
}
std::vector<Simplex> minimal_missing_faces(const SimplicialComplex& k) {
  return k.minimal_missing_faces();
}
bool is_shifted(const SimplicialComplex& k) { return k.is_shifted(); }
bool is_full_simplex(const SimplicialComplex& k) { return k.is_full_simplex(); }

FwfCertificate fwf_trivial_certificate(const SimplicialComplex& k, bool assume_flag) {
  if (k.built_as_skeleton()) return FwfCertificate::SkeletonOfSimplex;
  if (k.is_shifted()) return FwfCertificate::Shifted;
  if (assume_flag) return FwfCertificate::UserAsserted;
  return FwfCertificate::Unknown;
}

SimplicialComplex read_complex(std::istream& in) {
  std::string line;
  int m = -1;
  std::vector<Simplex> facets;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::string body = line.substr(start);
    if (body[0] == '#') continue;
    if (m < 0) {
      if (body.rfind("m=", 0) != 0) throw std::invalid_argument("first line must be m=<int>");
      try {
        m = std::stoi(body.substr(2));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad vertex count on line " + std::to_string(lineno));
      }
      continue;
    }
    std::istringstream fields(body);
    std::vector<int> vs;
    int v;
    while (fields >> v) vs.push_back(v);
    if (!fields.eof()) throw std::invalid_argument("bad facet on line " + std::to_string(lineno));
    facets.push_back(Simplex::from_vertices(vs));
  }
  if (m < 0) throw std::invalid_argument("missing m=<int> header");
  return SimplicialComplex::from_facets(m, facets);
}

SimplicialComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open complex file: " + path);
  return read_complex(in);
}

nlohmann::json complex_to_json(const SimplicialComplex& k) {
  nlohmann::json facets = nlohmann::json::array();
  for (const Simplex& f : k.facets()) {
    if (f.is_empty() && k.face_count() > 1) continue;
    facets.push_back(f.vertices());
  }
  return nlohmann::json{{"m", k.vertex_count()}, {"facets", facets}};
}

}  // namespace pptower
