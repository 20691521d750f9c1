#include "pptower/tower.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "pptower/parallel.hpp"

namespace pptower::tower {

namespace {

std::string subset_token(Simplex s, int m) {
  std::string out;
  bool first = true;
  for (int v : s.vertices()) {
    if (!first && m > 9) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace

int SpaceSpec::unsuspended_dim(int variable) const {
  int d = dims.at(static_cast<std::size_t>(variable - 1));
  return pre_suspended ? d - 1 : d;
}

void SpaceSpec::validate(int m) const {
  if (variables() != m) throw std::invalid_argument("one sphere dimension per vertex required");
  for (int i = 1; i <= m; ++i) {
    if (unsuspended_dim(i) < 1) {
      throw std::invalid_argument("input spaces must be connected: sphere dimension >= 1" +
                                  std::string(pre_suspended ? " after undoing the suspension" : ""));
    }
  }
}

std::vector<int> GeneratorIndex::multidegree(int m) const {
  std::vector<int> b(static_cast<std::size_t>(m), 0);
  std::size_t j = 0;
  for (int v : subset.vertices()) b[static_cast<std::size_t>(v - 1)] = powers[j++];
  return b;
}

int GeneratorIndex::weight() const {
  int w = 0;
  for (int k : powers) w += k;
  return w;
}

std::string GeneratorIndex::label(bool beta) const {
  std::string out = beta ? "b_{" : "a_{";
  out += subset_token(subset, subset.max_vertex() > 9 ? 10 : 1);
  out += "}";
  if (!beta) {
    out += "(";
    for (std::size_t i = 0; i < powers.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(powers[i]);
    }
    out += ")";
  }
  return out;
}

bool GeneratorIndex::canonical_less(const GeneratorIndex& a, const GeneratorIndex& b) {
  if (!(a.subset == b.subset)) return Simplex::card_lex_less(a.subset, b.subset);
  int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  return a.powers < b.powers;
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Multi: return "multi";
    case Variant::Single: return "single";
    case Variant::Cone: return "cone";
    case Variant::BhIdentity: return "bh";
  }
  return "multi";
}

namespace {

GeneratorAlphabet finish_alphabet(std::vector<GeneratorIndex> generators, int m, bool beta) {
  std::sort(generators.begin(), generators.end(), GeneratorIndex::canonical_less);
  GeneratorAlphabet out;
  out.beta = beta;
  out.generators = std::move(generators);
  out.alphabet.letters.reserve(out.generators.size());
  for (const GeneratorIndex& g : out.generators) {
    lie::Generator letter;
    letter.label = g.label(beta);
    letter.multidegree = g.multidegree(m);
    letter.connectivity = g.weight() - 1;  // lower bound: smashing k spheres is (k-1)-connected
    out.alphabet.letters.push_back(std::move(letter));
  }
  return out;
}

}  // namespace

GeneratorAlphabet generator_alphabet(const SimplicialComplex& k, std::span<const int> degree_caps,
                                     IndexingMode mode) {
  const int m = k.vertex_count();
  if (static_cast<int>(degree_caps.size()) != m) {
    throw std::invalid_argument("one degree cap per vertex required");
  }
  std::vector<GeneratorIndex> generators;
  const std::uint32_t all = (1u << m) - 1;
  for (std::uint32_t mask = 1; mask <= all; ++mask) {
    Simplex subset = Simplex::from_mask(mask);
    if (mode == IndexingMode::MissingFacesOnly && k.contains(subset)) continue;
    std::vector<int> verts = subset.vertices();
    bool possible = true;
    for (int v : verts) {
      if (degree_caps[static_cast<std::size_t>(v - 1)] < 1) possible = false;
    }
    if (!possible) continue;
    std::vector<int> powers(verts.size(), 1);
    for (;;) {
      generators.push_back(GeneratorIndex{subset, powers});
      // odometer over the per-vertex caps
      std::size_t pos = 0;
      while (pos < powers.size()) {
        if (powers[pos] < degree_caps[static_cast<std::size_t>(verts[pos] - 1)]) {
          ++powers[pos];
          break;
        }
        powers[pos] = 1;
        ++pos;
      }
      if (pos == powers.size()) break;
    }
  }
  return finish_alphabet(std::move(generators), m, false);
}

namespace {

GeneratorAlphabet beta_alphabet(const SimplicialComplex& k, IndexingMode mode,
                                const std::function<bool(Simplex)>& keep) {
  const int m = k.vertex_count();
  std::vector<GeneratorIndex> generators;
  const std::uint32_t all = (1u << m) - 1;
  for (std::uint32_t mask = 1; mask <= all; ++mask) {
    Simplex subset = Simplex::from_mask(mask);
    if (mode == IndexingMode::MissingFacesOnly && k.contains(subset)) continue;
    if (!keep(subset)) continue;
    generators.push_back(GeneratorIndex{subset, std::vector<int>(subset.vertices().size(), 1)});
  }
  return finish_alphabet(std::move(generators), m, true);
}

}  // namespace

SmashWord alpha_space(const GeneratorIndex& g, const SimplicialComplex& k, const SpaceSpec& spec) {
  const int m = k.vertex_count();
  spec.validate(m);
  if (g.subset.max_vertex() > m) throw std::out_of_range("generator subset exceeds vertex count");
  SmashWord out;
  out.subcomplexes = {{g.subset, 1}};
  out.smash_powers.assign(static_cast<std::size_t>(m), 0);
  std::size_t j = 0;
  for (int v : g.subset.vertices()) {
    out.smash_powers[static_cast<std::size_t>(v - 1)] = g.powers[j++];
  }
  out.suspension = 0;
  return out;
}

long SmashWord::total_weight() const {
  long w = 0;
  for (long a : smash_powers) w += a;
  return w;
}

long kappa_multi(std::span<const int> n, std::span<const long> a) {
  if (n.size() != a.size()) throw std::invalid_argument("multi-index and smash vector length mismatch");
  bool any = false;
  long best = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1) continue;
    long q = n[i] / a[i];
    if (!any || q < best) best = q;
    any = true;
  }
  if (!any) throw std::invalid_argument("smash vector is zero");
  return best;
}

long kappa_single(int n, std::span<const long> a) {
  long w = 0;
  for (long ai : a) w += ai;
  if (w == 0) throw std::invalid_argument("smash vector is zero");
  return n / w;
}

namespace {

struct LetterData {
  std::vector<long> multidegree;
  long weight = 0;
  bool null_letter = false;
  long cap = 0;
};

struct RawWord {
  lie::LyndonWord word;
  std::vector<long> a;
  long kappa = 0;
};

// Collects Lyndon words over the truncated alphabet, maintaining the running
// smash multidegree so infeasible prefixes are cut as early as possible. The
// feasibility predicate must be monotone: once violated it stays violated
// under appending letters, which holds because multidegrees only grow.
class WordCollector final : public lie::PrefixVisitor {
 public:
  const std::vector<LetterData>* letters = nullptr;
  std::vector<int> counts;
  std::vector<int> stack;
  std::vector<long> a;
  std::function<bool(std::span<const long>)> feasible;
  std::function<long(std::span<const long>, int)> kappa_of;
  std::uint64_t cap = 0;
  std::uint64_t visited = 0;
  std::uint64_t dropped_zero = 0;
  std::uint64_t dropped_null = 0;
  std::vector<RawWord> out;

  bool push(int letter) override {
    stack.push_back(letter);
    const LetterData& ld = (*letters)[static_cast<std::size_t>(letter)];
    ++counts[static_cast<std::size_t>(letter)];
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += ld.multidegree[i];
    if (counts[static_cast<std::size_t>(letter)] > ld.cap) return false;
    return feasible(a);
  }

  void pop() override {
    int letter = stack.back();
    stack.pop_back();
    const LetterData& ld = (*letters)[static_cast<std::size_t>(letter)];
    --counts[static_cast<std::size_t>(letter)];
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= ld.multidegree[i];
  }

  void lyndon(std::span<const int> word) override {
    if (++visited > cap) throw lie::enumeration_cap_exceeded(cap);
    long kappa = kappa_of(a, static_cast<int>(word.size()));
    if (kappa < 1) {
      ++dropped_zero;
      return;
    }
    for (int l : word) {
      if ((*letters)[static_cast<std::size_t>(l)].null_letter) {
        ++dropped_null;
        return;
      }
    }
    out.push_back(RawWord{lie::LyndonWord(word.begin(), word.end()), a, kappa});
  }
};

FwfCertificate require_certificate(const SimplicialComplex& k, const EnumerationOptions& opts) {
  FwfCertificate c = fwf_trivial_certificate(k, opts.assume_trivial_fwf);
  if (c == FwfCertificate::Unknown) {
    throw hypothesis_error(
        "no certificate that the fat wedge filtration on this complex is trivial; "
        "use the assume flag to proceed anyway");
  }
  return c;
}

std::vector<LetterData> make_letter_data(const GeneratorAlphabet& ga, const SimplicialComplex& k,
                                         const std::function<long(const GeneratorIndex&)>& cap_of) {
  std::vector<LetterData> out;
  out.reserve(ga.generators.size());
  const int m = k.vertex_count();
  for (const GeneratorIndex& g : ga.generators) {
    LetterData ld;
    std::vector<int> b = g.multidegree(m);
    ld.multidegree.assign(b.begin(), b.end());
    ld.weight = g.weight();
    ld.null_letter = k.contains(g.subset);
    ld.cap = cap_of(g);
    out.push_back(std::move(ld));
  }
  return out;
}

std::string render_space(const SmashWord& s, const SpaceSpec& spec, int m) {
  long sphere = 0;
  for (int i = 1; i <= m; ++i) {
    sphere += s.smash_powers[static_cast<std::size_t>(i - 1)] * spec.unsuspended_dim(i);
  }
  std::string out;
  if (s.suspension > 0) out += "Σ^" + std::to_string(s.suspension) + " ";
  for (const auto& [subset, mult] : s.subcomplexes) {
    for (int c = 0; c < mult; ++c) {
      if (!out.empty() && out.back() != ' ') out += "∧";
      out += "|K_{" + subset_token(subset, m) + "}|";
    }
  }
  if (!out.empty() && out.back() != ' ') out += "∧";
  out += "S^" + std::to_string(sphere);
  return out;
}

std::vector<Factor> build_factors(const SimplicialComplex& k, const GeneratorAlphabet& ga,
                                  std::vector<RawWord> raw, int suspension, const SpaceSpec& spec) {
  const int m = k.vertex_count();
  std::sort(raw.begin(), raw.end(), [](const RawWord& x, const RawWord& y) {
    long wx = 0, wy = 0;
    for (long v : x.a) wx += v;
    for (long v : y.a) wy += v;
    if (wx != wy) return wx < wy;
    if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
    return x.word < y.word;
  });

  // Homology of each distinct full subcomplex appearing in any word.
  std::vector<std::uint32_t> masks;
  for (const RawWord& w : raw) {
    for (int l : w.word) masks.push_back(ga.generators[static_cast<std::size_t>(l)].subset.mask());
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<GradedAbelianGroup> hom =
      parallel_map<GradedAbelianGroup>(masks.size(), [&](std::size_t i) {
        return simplicial_homology(k.full_subcomplex(Simplex::from_mask(masks[i])));
      });
  std::map<std::uint32_t, const GradedAbelianGroup*> subcomplex_homology;
  std::map<std::uint32_t, bool> boundary_of_simplex;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    subcomplex_homology[masks[i]] = &hom[i];
    Simplex s = Simplex::from_mask(masks[i]);
    boundary_of_simplex[masks[i]] =
        k.full_subcomplex(s).face_count() == (1u << s.cardinality()) - 1;
  }

  return parallel_map<Factor>(raw.size(), [&](std::size_t i) {
    const RawWord& rw = raw[i];
    Factor f(lie::HallWord(rw.word));
    f.kappa = rw.kappa;
    std::map<std::uint32_t, int> ref_counts;
    for (int l : rw.word) {
      f.letters.push_back(ga.generators[static_cast<std::size_t>(l)]);
      ++ref_counts[f.letters.back().subset.mask()];
    }
    f.word_label = f.word.render(
        [&](int l) { return ga.generators[static_cast<std::size_t>(l)].label(ga.beta); });
    f.smash.suspension = suspension;
    f.smash.smash_powers = rw.a;
    for (const auto& [mask, mult] : ref_counts) {
      f.smash.subcomplexes.emplace_back(Simplex::from_mask(mask), mult);
    }
    std::sort(f.smash.subcomplexes.begin(), f.smash.subcomplexes.end(),
              [](const auto& x, const auto& y) { return Simplex::card_lex_less(x.first, y.first); });
    f.space = render_space(f.smash, spec, m);

    long sphere = 0;
    for (int v = 1; v <= m; ++v) {
      sphere += rw.a[static_cast<std::size_t>(v - 1)] * spec.unsuspended_dim(v);
    }
    GradedAbelianGroup g = sphere_homology(0);  // unit of the smash product
    bool all_boundaries = true;
    long boundary_dims = 0;
    for (const auto& [subset, mult] : f.smash.subcomplexes) {
      for (int c = 0; c < mult; ++c) g = smash_homology(g, *subcomplex_homology.at(subset.mask()));
      if (boundary_of_simplex.at(subset.mask())) {
        boundary_dims += static_cast<long>(mult) * (subset.cardinality() - 2);
      } else {
        all_boundaries = false;
      }
    }
    f.homology = suspend(g, suspension + static_cast<int>(sphere));
    if (all_boundaries) f.sphere_dim = suspension + boundary_dims + sphere;
    return f;
  });
}

struct EnumerationOutcome {
  std::vector<RawWord> raw;
  std::uint64_t visited = 0;
  std::uint64_t dropped_zero = 0;
  std::uint64_t dropped_null = 0;
};

EnumerationOutcome collect_words(const std::vector<LetterData>& letters, int m, int max_len,
                                 const std::function<bool(std::span<const long>)>& feasible,
                                 const std::function<long(std::span<const long>, int)>& kappa_of,
                                 std::uint64_t safety_cap) {
  WordCollector wc;
  wc.letters = &letters;
  wc.counts.assign(letters.size(), 0);
  wc.a.assign(static_cast<std::size_t>(m), 0);
  wc.feasible = feasible;
  wc.kappa_of = kappa_of;
  wc.cap = safety_cap;
  if (max_len > 0 && !letters.empty()) {
    lie::enumerate_lyndon(static_cast<int>(letters.size()), max_len, wc);
  }
  EnumerationOutcome out;
  out.raw = std::move(wc.out);
  out.visited = wc.visited;
  out.dropped_zero = wc.dropped_zero;
  out.dropped_null = wc.dropped_null;
  return out;
}

void validate_multi_index(const MultiIndex& n, int m) {
  if (static_cast<int>(n.size()) != m) {
    throw std::invalid_argument("multi-index length must equal the vertex count");
  }
  for (int ni : n) {
    if (ni < 0) throw std::invalid_argument("multi-index entries must be nonnegative");
  }
}

}  // namespace

FactorList enumerate_factors_multi(const SimplicialComplex& k, const MultiIndex& n,
                                   const SpaceSpec& spec, const EnumerationOptions& opts) {
  const int m = k.vertex_count();
  spec.validate(m);
  validate_multi_index(n, m);
  FactorList out;
  out.certificate = require_certificate(k, opts);

  const long mult = std::max(1, opts.bound_multiplier);
  std::vector<int> kcaps(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) kcaps[static_cast<std::size_t>(i)] = static_cast<int>(mult) * n[static_cast<std::size_t>(i)];
  GeneratorAlphabet ga = generator_alphabet(k, kcaps, opts.indexing);

  std::vector<LetterData> letters = make_letter_data(ga, k, [&](const GeneratorIndex& g) {
    long best = 0;
    std::size_t j = 0;
    for (int v : g.subset.vertices()) {
      best = std::max(best, static_cast<long>(n[static_cast<std::size_t>(v - 1)] / g.powers[j]));
      ++j;
    }
    return mult * best;
  });

  long total = 0;
  for (int ni : n) total += ni;
  auto feasible = [&](std::span<const long> a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > n[i]) return false;
    }
    return true;
  };
  auto kappa_of = [&](std::span<const long> a, int) { return kappa_multi(n, a); };

  EnumerationOutcome res =
      collect_words(letters, m, static_cast<int>(total), feasible, kappa_of, opts.safety_cap);
  out.words_visited = res.visited;
  out.dropped_kappa_zero = res.dropped_zero;
  out.dropped_null = res.dropped_null;
  out.factors = build_factors(k, ga, std::move(res.raw), 1, spec);
  return out;
}

FactorList enumerate_factors_single(const SimplicialComplex& k, int n, const SpaceSpec& spec,
                                    const EnumerationOptions& opts) {
  const int m = k.vertex_count();
  spec.validate(m);
  if (n < 0) throw std::invalid_argument("excisive degree must be nonnegative");
  for (int i = 2; i <= m; ++i) {
    if (spec.unsuspended_dim(i) != spec.unsuspended_dim(1)) {
      throw std::invalid_argument("single-variable decomposition needs all input spheres equal");
    }
  }
  FactorList out;
  out.certificate = require_certificate(k, opts);

  const long mult = std::max(1, opts.bound_multiplier);
  std::vector<int> kcaps(static_cast<std::size_t>(m), static_cast<int>(mult) * n);
  GeneratorAlphabet ga = generator_alphabet(k, kcaps, opts.indexing);
  // Single-variable truncation is by total weight.
  {
    std::vector<GeneratorIndex> kept;
    for (GeneratorIndex& g : ga.generators) {
      if (g.weight() <= mult * n) kept.push_back(std::move(g));
    }
    ga = finish_alphabet(std::move(kept), m, false);
  }

  std::vector<LetterData> letters = make_letter_data(ga, k, [&](const GeneratorIndex& g) {
    return mult * static_cast<long>(n / g.weight());
  });

  auto feasible = [&](std::span<const long> a) {
    long w = 0;
    for (long ai : a) w += ai;
    return w <= n;
  };
  auto kappa_of = [&](std::span<const long> a, int) { return kappa_single(n, a); };

  EnumerationOutcome res = collect_words(letters, m, n, feasible, kappa_of, opts.safety_cap);
  out.words_visited = res.visited;
  out.dropped_kappa_zero = res.dropped_zero;
  out.dropped_null = res.dropped_null;
  out.factors = build_factors(k, ga, std::move(res.raw), 1, spec);
  return out;
}

FactorList cone_factors(const SimplicialComplex& k, const MultiIndex& n, const SpaceSpec& spec,
                        const EnumerationOptions& opts) {
  const int m = k.vertex_count();
  spec.validate(m);
  validate_multi_index(n, m);
  FactorList out;
  out.certificate = require_certificate(k, opts);

  const long mult = std::max(1, opts.bound_multiplier);
  GeneratorAlphabet ga = beta_alphabet(k, opts.indexing, [&](Simplex subset) {
    for (int v : subset.vertices()) {
      if (n[static_cast<std::size_t>(v - 1)] < 1) return false;
    }
    return true;
  });

  std::vector<LetterData> letters = make_letter_data(ga, k, [&](const GeneratorIndex& g) {
    long best = 0;
    for (int v : g.subset.vertices()) {
      best = std::max(best, static_cast<long>(n[static_cast<std::size_t>(v - 1)]));
    }
    return mult * best;
  });

  long total = 0;
  for (int ni : n) total += ni;
  auto feasible = [&](std::span<const long> a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > n[i]) return false;
    }
    return true;
  };
  auto kappa_of = [&](std::span<const long> a, int) { return kappa_multi(n, a); };

  EnumerationOutcome res =
      collect_words(letters, m, static_cast<int>(total), feasible, kappa_of, opts.safety_cap);
  out.words_visited = res.visited;
  out.dropped_kappa_zero = res.dropped_zero;
  out.dropped_null = res.dropped_null;
  out.factors = build_factors(k, ga, std::move(res.raw), 1, spec);
  return out;
}

FactorList bh_identity_factors(const SimplicialComplex& k, int n, const SpaceSpec& spec,
                               const EnumerationOptions& opts) {
  const int m = k.vertex_count();
  spec.validate(m);
  if (n < 0) throw std::invalid_argument("excisive degree must be nonnegative");
  FactorList out;
  out.certificate = require_certificate(k, opts);

  const long mult = std::max(1, opts.bound_multiplier);
  GeneratorAlphabet ga = beta_alphabet(k, opts.indexing, [](Simplex) { return true; });

  std::vector<LetterData> letters =
      make_letter_data(ga, k, [&](const GeneratorIndex&) { return mult * static_cast<long>(n); });

  auto feasible = [](std::span<const long>) { return true; };
  // Degree is length-based here, not smash-based.
  auto kappa_of = [&](std::span<const long>, int len) {
    return len == 0 ? 0L : static_cast<long>(n / len);
  };

  EnumerationOutcome res = collect_words(letters, m, static_cast<int>(mult) * n, feasible,
                                         kappa_of, opts.safety_cap);
  out.words_visited = res.visited;
  out.dropped_kappa_zero = res.dropped_zero;
  out.dropped_null = res.dropped_null;
  out.factors = build_factors(k, ga, std::move(res.raw), 1, spec);
  return out;
}

std::vector<ProductFactor> product_factors(const MultiIndex& n, const SpaceSpec& spec) {
  const int m = spec.variables();
  validate_multi_index(n, m);
  spec.validate(m);
  std::vector<ProductFactor> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    ProductFactor f;
    f.variable = i;
    f.degree = n[static_cast<std::size_t>(i - 1)];
    f.sphere_dim = spec.unsuspended_dim(i) + 1;
    f.space = "S^" + std::to_string(f.sphere_dim);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<DegreeComparisonRow> degree_comparison(const SimplicialComplex& k, int n,
                                                   const SpaceSpec& spec,
                                                   const EnumerationOptions& opts) {
  FactorList bh = bh_identity_factors(k, n, spec, opts);
  std::vector<DegreeComparisonRow> out;
  out.reserve(bh.factors.size());
  for (const Factor& f : bh.factors) {
    DegreeComparisonRow row;
    row.word_label = f.word_label;
    row.letters = f.letters;
    long w = f.smash.total_weight();
    row.kappa_cone = w == 0 ? 0 : n / w;
    row.kappa_bh = f.kappa;
    if (row.kappa_cone > row.kappa_bh) {
      throw std::logic_error("cone degree exceeded identity degree; enumeration is inconsistent");
    }
    out.push_back(std::move(row));
  }
  return out;
}

Decomposition full_decomposition(const SimplicialComplex& k, const MultiIndex& n,
                                 const SpaceSpec& spec, Variant variant,
                                 const EnumerationOptions& opts) {
  const int m = k.vertex_count();
  Decomposition out;
  out.variant = variant;
  out.n = n;
  out.spec = spec;
  switch (variant) {
    case Variant::Multi:
      out.lie_factors = enumerate_factors_multi(k, n, spec, opts);
      out.product = product_factors(n, spec);
      break;
    case Variant::Single: {
      if (n.size() != 1) throw std::invalid_argument("single-variable decomposition takes one degree");
      out.lie_factors = enumerate_factors_single(k, n.front(), spec, opts);
      out.product = product_factors(MultiIndex(static_cast<std::size_t>(m), n.front()), spec);
      break;
    }
    case Variant::Cone:
      out.lie_factors = cone_factors(k, n, spec, opts);
      break;
    case Variant::BhIdentity:
      if (n.size() != 1) throw std::invalid_argument("identity-on-wedge decomposition takes one degree");
      out.lie_factors = bh_identity_factors(k, n.front(), spec, opts);
      break;
  }
  return out;
}

std::map<long, long> factor_dimension_census(const SimplicialComplex& k, const SpaceSpec& spec,
                                             long max_dim, const EnumerationOptions& opts) {
  const int m = k.vertex_count();
  spec.validate(m);
  require_certificate(k, opts);
  if (!k.contains_all_vertices()) {
    throw std::invalid_argument("dimension census needs a complex containing every vertex");
  }
  std::map<long, long> census;
  if (max_dim < 1) return census;

  // Sphere census of the integral refinement. A generator whose subcomplex
  // has homology of rank r in degree d stands for r sphere wedge summands of
  // dimension d + sum k_i dim(X_i); words over the coarse generators would
  // undercount (the square of a rank-2 generator is no Lyndon word, but its
  // two sphere copies do span one). So enumerate over the refined alphabet,
  // one letter per free homology unit of K_I. Torsion carries no sphere and
  // is not counted.
  std::vector<int> kcaps(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    kcaps[static_cast<std::size_t>(i - 1)] =
        static_cast<int>((max_dim - 1) / spec.unsuspended_dim(i));
  }
  GeneratorAlphabet ga = generator_alphabet(k, kcaps, opts.indexing);

  std::map<std::uint32_t, GradedAbelianGroup> subcomplex_homology;
  for (const GeneratorIndex& g : ga.generators) {
    std::uint32_t mask = g.subset.mask();
    if (!subcomplex_homology.count(mask)) {
      subcomplex_homology[mask] = simplicial_homology(k.full_subcomplex(g.subset));
    }
  }

  std::vector<long> weights;  // one expanded letter per free homology unit
  for (const GeneratorIndex& g : ga.generators) {
    long smash = 0;
    std::size_t j = 0;
    for (int v : g.subset.vertices()) {
      smash += static_cast<long>(g.powers[j++]) * spec.unsuspended_dim(v);
    }
    for (const auto& [d, s] : subcomplex_homology.at(g.subset.mask()).degrees()) {
      long w = d + smash;
      if (w < 1) throw std::logic_error("census letter of nonpositive weight");
      if (w > max_dim - 1) continue;
      for (long copy = 0; copy < s.rank; ++copy) weights.push_back(w);
    }
  }

  struct RefinedVisitor final : lie::PrefixVisitor {
    const std::vector<long>* weights = nullptr;
    std::vector<int> stack;
    long weight = 0;
    long bound = 0;
    std::uint64_t visited = 0;
    std::uint64_t cap = 0;
    std::map<long, long>* census = nullptr;
    bool push(int letter) override {
      stack.push_back(letter);
      weight += (*weights)[static_cast<std::size_t>(letter)];
      return weight <= bound;
    }
    void pop() override {
      weight -= (*weights)[static_cast<std::size_t>(stack.back())];
      stack.pop_back();
    }
    void lyndon(std::span<const int>) override {
      if (++visited > cap) throw lie::enumeration_cap_exceeded(cap);
      ++(*census)[1 + weight];
    }
  };

  RefinedVisitor v;
  v.weights = &weights;
  v.bound = max_dim - 1;
  v.cap = opts.safety_cap;
  v.census = &census;
  if (!weights.empty()) {
    lie::enumerate_lyndon(static_cast<int>(weights.size()), static_cast<int>(max_dim - 1), v);
  }

  for (int i = 1; i <= m; ++i) {
    long dim = spec.unsuspended_dim(i) + 1;
    if (dim <= max_dim) ++census[dim];
  }
  return census;
}

std::map<long, long> wedge_identity_dimension_census(const SpaceSpec& spec, long max_dim) {
  const int m = spec.variables();
  spec.validate(m);
  std::map<long, long> census;
  if (max_dim < 2) return census;

  struct CensusVisitor final : lie::PrefixVisitor {
    std::vector<long> dims;
    std::vector<int> stack;
    long weight = 0;
    long bound = 0;
    std::map<long, long>* census = nullptr;
    bool push(int letter) override {
      stack.push_back(letter);
      weight += dims[static_cast<std::size_t>(letter)];
      return weight <= bound;
    }
    void pop() override {
      weight -= dims[static_cast<std::size_t>(stack.back())];
      stack.pop_back();
    }
    void lyndon(std::span<const int>) override { ++(*census)[1 + weight]; }
  };

  CensusVisitor v;
  for (int i = 1; i <= m; ++i) v.dims.push_back(spec.unsuspended_dim(i));
  v.bound = max_dim - 1;
  v.census = &census;
  lie::enumerate_lyndon(m, static_cast<int>(max_dim - 1), v);
  return census;
}

nlohmann::json Factor::to_json() const {
  nlohmann::json generators = nlohmann::json::array();
  for (const GeneratorIndex& g : letters) {
    generators.push_back(nlohmann::json{{"I", g.subset.vertices()}, {"k", g.powers}});
  }
  nlohmann::json out{{"word", word_label},
                     {"generators", generators},
                     {"a", smash.smash_powers},
                     {"kappa", kappa},
                     {"space", space},
                     {"homology", homology.to_json()}};
  if (sphere_dim) out["sphere_dim"] = *sphere_dim;
  return out;
}

nlohmann::json Decomposition::to_json() const {
  nlohmann::json factor_array = nlohmann::json::array();
  for (const Factor& f : lie_factors.factors) factor_array.push_back(f.to_json());
  nlohmann::json product_list = nlohmann::json::array();
  for (const ProductFactor& f : product) {
    product_list.push_back(nlohmann::json{{"variable", f.variable},
                                          {"degree", f.degree},
                                          {"space", f.space},
                                          {"sphere_dim", f.sphere_dim}});
  }
  nlohmann::json n_json;
  if (variant == Variant::Single || variant == Variant::BhIdentity) {
    n_json = n.front();
  } else {
    n_json = n;
  }
  return nlohmann::json{
      {"variant", to_string(variant)},
      {"n", n_json},
      {"dims", spec.dims},
      {"pre_suspended", spec.pre_suspended},
      {"certificate", pptower::to_string(lie_factors.certificate)},
      {"lie_factors", factor_array},
      {"product_factors", product_list},
      {"metadata",
       nlohmann::json{{"words_visited", lie_factors.words_visited},
                      {"dropped_kappa_zero", lie_factors.dropped_kappa_zero},
                      {"dropped_null", lie_factors.dropped_null},
                      {"lie_factor_count", lie_factors.factors.size()}}}};
}

}  // namespace pptower::tower
