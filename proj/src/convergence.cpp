#include "pptower/convergence.hpp"

#include <algorithm>
#include <stdexcept>

namespace pptower::convergence {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::ConvergesEverywhere: return "ConvergesEverywhere";
    case Classification::IntegralConvergesVhDiverges: return "IntegralConvergesVhDiverges";
    case Classification::OutsideHypotheses: return "OutsideHypotheses";
  }
  return "OutsideHypotheses";
}

ConvergenceReport classify(const SimplicialComplex& k, bool assume_trivial_fwf) {
  ConvergenceReport out;
  out.certificate = fwf_trivial_certificate(k, assume_trivial_fwf);
  if (k.is_full_simplex()) {
    out.classification = Classification::ConvergesEverywhere;
    return out;
  }
  if (out.certificate == FwfCertificate::Unknown) {
    out.classification = Classification::OutsideHypotheses;
    return out;
  }
  out.classification = Classification::IntegralConvergesVhDiverges;
  out.witness_face = k.minimal_missing_faces().front();
  return out;
}

nlohmann::json ConvergenceReport::to_json() const {
  nlohmann::json out{{"classification", to_string(classification)},
                     {"certificate", pptower::to_string(certificate)}};
  if (witness_face) out["witness_face"] = witness_face->vertices();
  return out;
}

namespace {

// Dimension of Sigma omega alpha(X) for a word on generators over the fixed
// minimal missing face: each letter contributes dim|K_{I0}| = |I0|-2 plus its
// smash powers; the leading 1 is the explicit suspension.
long letter_dim(const Simplex& face, std::span<const int> powers, const tower::SpaceSpec& spec) {
  long d = face.cardinality() - 2;
  std::size_t j = 0;
  for (int v : face.vertices()) d += static_cast<long>(powers[j++]) * spec.unsuspended_dim(v);
  return d;
}

}  // namespace

std::vector<DivergenceWitness> divergence_witnesses(const SimplicialComplex& k,
                                                    const tower::SpaceSpec& spec, int count) {
  const int m = k.vertex_count();
  spec.validate(m);
  if (count < 0) throw std::invalid_argument("witness count must be nonnegative");
  if (k.is_full_simplex()) {
    throw std::invalid_argument("the full simplex has no missing face and no divergence witnesses");
  }
  if (count == 0) return {};

  const Simplex face = k.minimal_missing_faces().front();
  const std::vector<int> verts = face.vertices();

  // Enumerate complete slices of bounded sphere dimension until enough words
  // exist; raising the bound only appends, so prefixes are stable.
  struct Entry {
    lie::LyndonWord word;
    long dim = 0;
  };

  for (long bound = 3;; ++bound) {
    // Letters with contribution <= bound-1, ordered by (sum k, k lex); this
    // is the canonical generator order restricted to the fixed face.
    std::vector<std::vector<int>> letter_powers;
    std::vector<int> powers(verts.size(), 1);
    // odometer over all k with letter_dim <= bound-1; the feasible set is
    // coordinatewise downward closed, so the dynamic-limit counter is exact
    for (;;) {
      if (letter_dim(face, powers, spec) <= bound - 1) letter_powers.push_back(powers);
      std::size_t pos = 0;
      while (pos < powers.size()) {
        ++powers[pos];
        if (letter_dim(face, powers, spec) <= bound - 1) break;
        // the k are monotone in each coordinate, so reset and carry
        powers[pos] = 1;
        ++pos;
      }
      if (pos == powers.size()) break;
    }
    std::sort(letter_powers.begin(), letter_powers.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                int wa = 0, wb = 0;
                for (int x : a) wa += x;
                for (int x : b) wb += x;
                if (wa != wb) return wa < wb;
                return a < b;
              });
    if (letter_powers.empty()) continue;

    std::vector<long> dims;
    dims.reserve(letter_powers.size());
    for (const auto& p : letter_powers) dims.push_back(letter_dim(face, p, spec));

    struct Visitor final : lie::PrefixVisitor {
      const std::vector<long>* dims = nullptr;
      std::vector<int> stack;
      long weight = 0;
      long bound = 0;
      std::vector<Entry>* out = nullptr;
      bool push(int letter) override {
        stack.push_back(letter);
        weight += (*dims)[static_cast<std::size_t>(letter)];
        return weight <= bound;
      }
      void pop() override {
        weight -= (*dims)[static_cast<std::size_t>(stack.back())];
        stack.pop_back();
      }
      void lyndon(std::span<const int> word) override {
        Entry e;
        e.word.assign(word.begin(), word.end());
        e.dim = 1 + weight;
        out->push_back(std::move(e));
      }
    };

    std::vector<Entry> entries;
    Visitor v;
    v.dims = &dims;
    v.bound = bound - 1;
    v.out = &entries;
    lie::enumerate_lyndon(static_cast<int>(letter_powers.size()), static_cast<int>(bound - 1), v);

    if (static_cast<int>(entries.size()) < count) continue;

    std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
      if (a.dim != b.dim) return a.dim < b.dim;
      if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
      return a.word < b.word;
    });
    entries.resize(static_cast<std::size_t>(count));

    std::vector<DivergenceWitness> out;
    out.reserve(entries.size());
    for (Entry& e : entries) {
      DivergenceWitness w(lie::HallWord(e.word));
      for (int l : e.word) {
        w.letters.push_back(tower::GeneratorIndex{face, letter_powers[static_cast<std::size_t>(l)]});
      }
      w.word_label = w.word.render([&](int l) {
        return tower::GeneratorIndex{face, letter_powers[static_cast<std::size_t>(l)]}.label();
      });
      w.sphere_dim = e.dim;
      out.push_back(std::move(w));
    }
    return out;
  }
}

nlohmann::json witnesses_to_json(const SimplicialComplex& k, const tower::SpaceSpec& spec,
                                 const std::vector<DivergenceWitness>& witnesses) {
  ConvergenceReport report = classify(k);
  nlohmann::json list = nlohmann::json::array();
  for (const DivergenceWitness& w : witnesses) {
    nlohmann::json letters = nlohmann::json::array();
    for (const tower::GeneratorIndex& g : w.letters) {
      letters.push_back(nlohmann::json{{"I", g.subset.vertices()}, {"k", g.powers}});
    }
    list.push_back(nlohmann::json{
        {"word", w.word_label}, {"generators", letters}, {"sphere_dim", w.sphere_dim}});
  }
  nlohmann::json out = report.to_json();
  out["dims"] = spec.dims;
  out["witnesses"] = list;
  out["note"] =
      "combinatorial witness family: sphere factors whose v_h-periodic homotopy is nontrivial";
  return out;
}

}  // namespace pptower::convergence
