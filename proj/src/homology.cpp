#include "pptower/homology.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "pptower/parallel.hpp"

namespace pptower {

namespace {

// Trial-division factorization; torsion coefficients at this project's scale
// are tiny, so nothing cleverer is warranted.
std::map<Int, int> factorize(Int n) {
  std::map<Int, int> out;
  if (n < 0) n = -n;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

// Rebuild the canonical divisibility chain t_1 | ... | t_s from an arbitrary
// multiset of cyclic orders.
std::vector<Int> canonical_invariant_factors(const std::vector<Int>& pieces) {
  std::map<Int, std::vector<int>> exponents;  // prime -> exponents, descending
  for (const Int& t : pieces) {
    for (const auto& [p, e] : factorize(t)) exponents[p].push_back(e);
  }
  std::size_t chain = 0;
  for (auto& [p, es] : exponents) {
    std::sort(es.begin(), es.end(), std::greater<int>());
    chain = std::max(chain, es.size());
  }
  std::vector<Int> out(chain, 1);
  for (const auto& [p, es] : exponents) {
    for (std::size_t i = 0; i < es.size(); ++i) {
      Int q;
      mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), es[i]);
      // largest exponents go to the last invariant factor
      out[chain - 1 - i] *= q;
    }
  }
  return out;
}

}  // namespace

void GradedAbelianGroup::add_free(int degree, long rank) {
  if (rank == 0) return;
  if (rank < 0) throw std::invalid_argument("negative rank");
  degrees_[degree].rank += rank;
}

void GradedAbelianGroup::add_torsion(int degree, const Int& order) {
  if (order == 1) return;
  if (order < 2) throw std::invalid_argument("torsion order must be >= 2");
  degrees_[degree].torsion.push_back(order);
  canonicalize(degree);
}

void GradedAbelianGroup::add_summand(int degree, const Summand& s) {
  if (s.rank == 0 && s.torsion.empty()) return;
  Summand& dst = degrees_[degree];
  dst.rank += s.rank;
  dst.torsion.insert(dst.torsion.end(), s.torsion.begin(), s.torsion.end());
  canonicalize(degree);
}

void GradedAbelianGroup::add(const GradedAbelianGroup& other) {
  for (const auto& [d, s] : other.degrees_) add_summand(d, s);
}

void GradedAbelianGroup::canonicalize(int degree) {
  auto it = degrees_.find(degree);
  if (it == degrees_.end()) return;
  it->second.torsion = canonical_invariant_factors(it->second.torsion);
  if (it->second.rank == 0 && it->second.torsion.empty()) degrees_.erase(it);
}

long GradedAbelianGroup::rank(int degree) const {
  auto it = degrees_.find(degree);
  return it == degrees_.end() ? 0 : it->second.rank;
}

std::vector<Int> GradedAbelianGroup::torsion(int degree) const {
  auto it = degrees_.find(degree);
  return it == degrees_.end() ? std::vector<Int>{} : it->second.torsion;
}

int GradedAbelianGroup::min_degree() const {
  if (degrees_.empty()) throw std::logic_error("zero group has no degrees");
  return degrees_.begin()->first;
}

int GradedAbelianGroup::max_degree() const {
  if (degrees_.empty()) throw std::logic_error("zero group has no degrees");
  return degrees_.rbegin()->first;
}

bool operator==(const GradedAbelianGroup& a, const GradedAbelianGroup& b) {
  if (a.degrees_.size() != b.degrees_.size()) return false;
  for (auto ia = a.degrees_.begin(), ib = b.degrees_.begin(); ia != a.degrees_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    if (ia->second.rank != ib->second.rank) return false;
    if (ia->second.torsion != ib->second.torsion) return false;
  }
  return true;
}

std::string GradedAbelianGroup::to_string() const {
  if (degrees_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, s] : degrees_) {
    if (!first) out << ", ";
    first = false;
    out << "H_" << d << " = ";
    bool piece = false;
    if (s.rank == 1) {
      out << "Z";
      piece = true;
    } else if (s.rank > 1) {
      out << "Z^" << s.rank;
      piece = true;
    }
    for (const Int& t : s.torsion) {
      if (piece) out << " + ";
      out << "Z/" << t.get_str();
      piece = true;
    }
  }
  return out.str();
}

nlohmann::json GradedAbelianGroup::to_json() const {
  nlohmann::json degrees = nlohmann::json::object();
  for (const auto& [d, s] : degrees_) {
    nlohmann::json torsion = nlohmann::json::array();
    for (const Int& t : s.torsion) {
      if (t.fits_slong_p()) {
        torsion.push_back(t.get_si());
      } else {
        torsion.push_back(t.get_str());
      }
    }
    degrees[std::to_string(d)] = nlohmann::json{{"rank", s.rank}, {"torsion", torsion}};
  }
  return nlohmann::json{{"degrees", degrees}};
}

GradedAbelianGroup direct_sum(const GradedAbelianGroup& a, const GradedAbelianGroup& b) {
  GradedAbelianGroup out = a;
  out.add(b);
  return out;
}

GradedAbelianGroup suspend(const GradedAbelianGroup& g, int t) {
  if (t < 0) throw std::invalid_argument("suspension shift must be nonnegative");
  GradedAbelianGroup out;
  for (const auto& [d, s] : g.degrees()) out.add_summand(d + t, s);
  return out;
}

GradedAbelianGroup smash_homology(const GradedAbelianGroup& a, const GradedAbelianGroup& b) {
  GradedAbelianGroup out;
  for (const auto& [p, sa] : a.degrees()) {
    for (const auto& [q, sb] : b.degrees()) {
      // tensor part in degree p+q
      out.add_free(p + q, sa.rank * sb.rank);
      for (const Int& t : sb.torsion) {
        for (long i = 0; i < sa.rank; ++i) out.add_torsion(p + q, t);
      }
      for (const Int& t : sa.torsion) {
        for (long i = 0; i < sb.rank; ++i) out.add_torsion(p + q, t);
      }
      for (const Int& ta : sa.torsion) {
        for (const Int& tb : sb.torsion) {
          Int g = gcd(ta, tb);
          if (g > 1) out.add_torsion(p + q, g);
        }
      }
      // Tor part in degree p+q+1: Tor(Z/a, Z/b) = Z/gcd(a,b)
      for (const Int& ta : sa.torsion) {
        for (const Int& tb : sb.torsion) {
          Int g = gcd(ta, tb);
          if (g > 1) out.add_torsion(p + q + 1, g);
        }
      }
    }
  }
  return out;
}

GradedAbelianGroup sphere_homology(int dim) {
  if (dim < -1) throw std::invalid_argument("sphere dimension must be >= -1");
  GradedAbelianGroup g;
  g.add_free(dim, 1);
  return g;
}

ChainComplex::ChainComplex(std::map<int, std::vector<std::string>> labels,
                           std::map<int, IntMatrix> boundaries)
    : labels_(std::move(labels)), boundaries_(std::move(boundaries)) {
  for (const auto& [d, b] : boundaries_) {
    if (b.cols() != dimension(d) || b.rows() != dimension(d - 1)) {
      throw std::invalid_argument("boundary matrix shape mismatch in degree " + std::to_string(d));
    }
    auto above = boundaries_.find(d + 1);
    if (above != boundaries_.end() && b.cols() > 0 && above->second.cols() > 0) {
      IntMatrix prod = b * above->second;
      if (!prod.isZero(0)) {
        throw std::invalid_argument("boundary of boundary is nonzero in degree " +
                                    std::to_string(d + 1));
      }
    }
  }
}

long ChainComplex::dimension(int degree) const {
  auto it = labels_.find(degree);
  return it == labels_.end() ? 0 : static_cast<long>(it->second.size());
}

GradedAbelianGroup ChainComplex::homology() const {
  // SNF of the independent boundary matrices; safe to run concurrently.
  std::vector<int> degrees;
  for (const auto& [d, b] : boundaries_) degrees.push_back(d);
  std::vector<SmithForm> forms = parallel_map<SmithForm>(degrees.size(), [&](std::size_t i) {
    return smith_normal_form(boundaries_.at(degrees[i]));
  });
  std::map<int, SmithForm> smith;
  for (std::size_t i = 0; i < degrees.size(); ++i) smith[degrees[i]] = std::move(forms[i]);

  auto rank_of = [&](int d) -> long {
    auto it = smith.find(d);
    return it == smith.end() ? 0 : it->second.rank;
  };

  GradedAbelianGroup out;
  for (const auto& [d, ls] : labels_) {
    long free_rank = static_cast<long>(ls.size()) - rank_of(d) - rank_of(d + 1);
    out.add_free(d, free_rank);
    auto above = smith.find(d + 1);
    if (above != smith.end()) {
      for (const Int& t : above->second.invariants) {
        if (t > 1) out.add_torsion(d, t);
      }
    }
  }
  return out;
}

long ChainComplex::euler_characteristic() const {
  long chi = 0;
  for (const auto& [d, ls] : labels_) {
    long sign = (d % 2 == 0) ? 1 : -1;
    chi += sign * static_cast<long>(ls.size());
  }
  return chi;
}

GradedAbelianGroup simplicial_homology(const SimplicialComplex& k) {
  std::map<int, std::vector<std::string>> labels;
  std::map<int, std::map<std::uint32_t, long>> index;  // degree -> mask -> column
  for (const Simplex& f : k.faces()) {
    int d = f.dimension();
    index[d][f.mask()] = static_cast<long>(labels[d].size());
    labels[d].push_back(f.to_string());
  }

  std::map<int, IntMatrix> boundaries;
  for (const auto& [d, cols] : index) {
    auto below = index.find(d - 1);
    if (below == index.end()) continue;
    IntMatrix b = IntMatrix::Zero(static_cast<long>(below->second.size()),
                                  static_cast<long>(cols.size()));
    for (const auto& [mask, col] : cols) {
      Simplex f = Simplex::from_mask(mask);
      int sign = 1;
      for (int v : f.vertices()) {
        b(below->second.at(f.without(v).mask()), col) += sign;
        sign = -sign;
      }
    }
    boundaries[d] = std::move(b);
  }
  return ChainComplex(std::move(labels), std::move(boundaries)).homology();
}

CubicalComplex::CubicalComplex(int ambient_dimension, std::vector<std::string> cells)
    : m_(ambient_dimension), cells_(std::move(cells)) {
  auto dim_of = [](const std::string& w) {
    return std::count(w.begin(), w.end(), '*');
  };
  for (const std::string& w : cells_) {
    if (static_cast<int>(w.size()) != m_) throw std::invalid_argument("cell word length mismatch");
    for (char c : w) {
      if (c != '0' && c != '1' && c != '*') throw std::invalid_argument("bad cell letter");
    }
  }
  std::sort(cells_.begin(), cells_.end(), [&](const std::string& a, const std::string& b) {
    auto da = dim_of(a), db = dim_of(b);
    return da != db ? da < db : a < b;
  });
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());

  // face closure
  std::vector<std::string> all(cells_.begin(), cells_.end());
  std::sort(all.begin(), all.end());
  for (const std::string& w : cells_) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != '*') continue;
      for (char c : {'0', '1'}) {
        std::string face = w;
        face[i] = c;
        if (!std::binary_search(all.begin(), all.end(), face)) {
          throw std::invalid_argument("cell set is not closed under faces");
        }
      }
    }
  }
}

ChainComplex CubicalComplex::chain_complex() const {
  std::map<int, std::vector<std::string>> labels;
  std::map<int, std::map<std::string, long>> index;
  labels[-1] = {"()"};  // augmentation
  index[-1]["()"] = 0;
  for (const std::string& w : cells_) {
    int d = static_cast<int>(std::count(w.begin(), w.end(), '*'));
    index[d][w] = static_cast<long>(labels[d].size());
    labels[d].push_back(w);
  }

  std::map<int, IntMatrix> boundaries;
  for (const auto& [d, cols] : index) {
    if (d < 0) continue;
    auto below = index.find(d - 1);
    if (below == index.end()) continue;
    IntMatrix b = IntMatrix::Zero(static_cast<long>(below->second.size()),
                                  static_cast<long>(cols.size()));
    for (const auto& [w, col] : cols) {
      if (d == 0) {
        b(0, col) = 1;  // augmentation sends each vertex to the generator
        continue;
      }
      int j = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != '*') continue;
        ++j;
        int sign = (j % 2 == 1) ? 1 : -1;
        std::string upper = w, lower = w;
        upper[i] = '1';
        lower[i] = '0';
        b(below->second.at(upper), col) += sign;
        b(below->second.at(lower), col) -= sign;
      }
    }
    boundaries[d] = std::move(b);
  }
  return ChainComplex(std::move(labels), std::move(boundaries));
}

GradedAbelianGroup CubicalComplex::homology() const { return chain_complex().homology(); }

CubicalComplex real_moment_angle_complex(const SimplicialComplex& k) {
  const int m = k.vertex_count();
  std::vector<std::string> cells;
  for (const Simplex& f : k.faces()) {
    // '*' on the face, every 0/1 assignment elsewhere
    std::vector<int> rest;
    for (int v = 1; v <= m; ++v) {
      if (!f.contains(v)) rest.push_back(v);
    }
    const std::size_t n = rest.size();
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      std::string w(m, '*');
      for (std::size_t i = 0; i < n; ++i) w[rest[i] - 1] = ((bits >> i) & 1u) ? '1' : '0';
      cells.push_back(std::move(w));
    }
  }
  return CubicalComplex(m, std::move(cells));
}

GradedAbelianGroup cubical_homology(const CubicalComplex& c) { return c.homology(); }

GradedAbelianGroup wedge_splitting_homology(const SimplicialComplex& k) {
  const int m = k.vertex_count();
  const std::uint32_t all = (1u << m) - 1;
  std::vector<GradedAbelianGroup> parts = parallel_map<GradedAbelianGroup>(all, [&](std::size_t i) {
    Simplex index_set = Simplex::from_mask(static_cast<std::uint32_t>(i + 1));
    return suspend(simplicial_homology(k.full_subcomplex(index_set)), 1);
  });
  GradedAbelianGroup out;
  for (const GradedAbelianGroup& g : parts) out.add(g);
  return out;
}

}  // namespace pptower
