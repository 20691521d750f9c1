// pptower: batch calculator for the excisive-degree decompositions of
// polyhedral products on sphere inputs.
//
// Subcommands: check, homology, factors, hall, witness. Exit codes: 0 OK,
// 1 parse or input error, 2 hypothesis violation (no triviality certificate
// for the fat wedge filtration), 3 verification failure.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pptower/convergence.hpp"
#include "pptower/homology.hpp"
#include "pptower/lie.hpp"
#include "pptower/simplicial.hpp"
#include "pptower/tower.hpp"

namespace {

using namespace pptower;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitVerification = 3;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    std::size_t used = 0;
    int value = std::stoi(field, &used);
    if (used != field.size()) throw std::invalid_argument("bad integer list: " + text);
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::string face_list(const std::vector<Simplex>& faces) {
  if (faces.empty()) return "(none)";
  std::string out;
  for (const Simplex& f : faces) {
    if (!out.empty()) out += " ";
    out += f.to_string();
  }
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

tower::SpaceSpec make_spec(const std::string& dims_text, int m, bool pre_suspended) {
  std::vector<int> dims = parse_int_list(dims_text);
  if (dims.size() == 1 && m > 1) dims.assign(static_cast<std::size_t>(m), dims.front());
  tower::SpaceSpec spec{std::move(dims), pre_suspended};
  spec.validate(m);
  return spec;
}

int run_check(const std::string& path, bool assume, const std::string& format) {
  SimplicialComplex k = read_complex_file(path);
  convergence::ConvergenceReport report = convergence::classify(k, assume);
  std::vector<Simplex> missing = k.minimal_missing_faces();

  if (format == "json") {
    json j = report.to_json();
    j["complex"] = complex_to_json(k);
    j["face_count"] = k.face_count();
    j["f_vector"] = k.f_vector();
    j["is_full_simplex"] = k.is_full_simplex();
    j["shifted"] = k.is_shifted();
    json mm = json::array();
    for (const Simplex& f : missing) mm.push_back(f.vertices());
    j["minimal_missing_faces"] = mm;
    emit(j);
    return kExitOk;
  }

  std::cout << "complex: m=" << k.vertex_count() << ", " << k.face_count()
            << " faces (including the empty face)\n";
  std::cout << "facets: " << face_list(k.facets()) << "\n";
  std::cout << "full simplex: " << (k.is_full_simplex() ? "yes" : "no") << "\n";
  std::cout << "shifted: " << (k.is_shifted() ? "yes" : "no") << "\n";
  std::cout << "fwf certificate: " << to_string(report.certificate) << "\n";
  std::cout << "minimal missing faces: " << face_list(missing) << "\n";
  std::cout << "classification: " << convergence::to_string(report.classification) << "\n";
  if (report.witness_face) {
    std::cout << "witness face: " << report.witness_face->to_string() << "\n";
  }
  return kExitOk;
}

int run_homology(const std::string& path, bool verify, const std::string& format) {
  SimplicialComplex k = read_complex_file(path);
  GradedAbelianGroup complex_homology = simplicial_homology(k);
  CubicalComplex rzk = real_moment_angle_complex(k);
  GradedAbelianGroup cubical = cubical_homology(rzk);

  bool pass = true;
  GradedAbelianGroup wedge;
  if (verify) {
    wedge = wedge_splitting_homology(k);
    pass = (wedge == cubical);
  }

  if (format == "json") {
    json j{{"complex", complex_to_json(k)},
           {"simplicial_homology", complex_homology.to_json()},
           {"moment_angle_cells", rzk.cell_count()},
           {"moment_angle_homology", cubical.to_json()}};
    if (verify) {
      j["wedge_splitting_homology"] = wedge.to_json();
      j["splitting_verified"] = pass;
    }
    emit(j);
  } else {
    std::cout << "reduced homology of K:      " << complex_homology.to_string() << "\n";
    std::cout << "real moment-angle complex:  " << rzk.cell_count() << " cells\n";
    std::cout << "reduced homology of RZ_K:   " << cubical.to_string() << "\n";
    if (verify) {
      std::cout << "wedge splitting (+1 shift): " << wedge.to_string() << "\n";
      std::cout << "splitting check: " << (pass ? "PASS" : "FAIL") << "\n";
    }
  }
  return pass ? kExitOk : kExitVerification;
}

int run_factors(const std::string& path, const std::string& n_text, const std::string& dims_text,
                const std::string& variant_name, bool assume, bool pre_suspended,
                const std::string& indexing, std::uint64_t cap, const std::string& format) {
  SimplicialComplex k = read_complex_file(path);
  const int m = k.vertex_count();

  tower::Variant variant;
  if (variant_name == "multi") {
    variant = tower::Variant::Multi;
  } else if (variant_name == "single") {
    variant = tower::Variant::Single;
  } else if (variant_name == "cone") {
    variant = tower::Variant::Cone;
  } else if (variant_name == "bh") {
    variant = tower::Variant::BhIdentity;
  } else {
    throw std::invalid_argument("unknown variant: " + variant_name);
  }

  std::vector<int> n = parse_int_list(n_text);
  bool single_degree = variant == tower::Variant::Single || variant == tower::Variant::BhIdentity;
  if (single_degree && n.size() != 1) {
    throw std::invalid_argument("variant " + variant_name + " takes a single degree");
  }
  if (!single_degree && static_cast<int>(n.size()) != m) {
    throw std::invalid_argument("multi-index length must equal the vertex count");
  }

  tower::SpaceSpec spec = make_spec(dims_text, m, pre_suspended);
  tower::EnumerationOptions opts;
  opts.assume_trivial_fwf = assume;
  opts.safety_cap = cap;
  if (indexing == "all") {
    opts.indexing = tower::IndexingMode::AllSubsets;
  } else if (indexing != "missing") {
    throw std::invalid_argument("indexing must be 'missing' or 'all'");
  }

  tower::Decomposition d = tower::full_decomposition(k, n, spec, variant, opts);

  if (format == "json") {
    json j = d.to_json();
    j["complex"] = complex_to_json(k);
    emit(j);
    return kExitOk;
  }

  std::cout << "variant: " << tower::to_string(d.variant)
            << "   certificate: " << to_string(d.lie_factors.certificate) << "\n";
  std::cout << "lie factors with excisive degree >= 1: " << d.lie_factors.factors.size() << "\n";
  for (const tower::Factor& f : d.lie_factors.factors) {
    std::cout << "  kappa=" << f.kappa << "  " << f.word_label << "\n";
    std::cout << "      space " << f.space;
    if (f.sphere_dim) std::cout << "  (sphere S^" << *f.sphere_dim << ")";
    std::cout << "\n      homology " << f.homology.to_string() << "\n";
  }
  if (!d.product.empty()) {
    std::cout << "product factors:\n";
    for (const tower::ProductFactor& f : d.product) {
      std::cout << "  variable " << f.variable << ": degree " << f.degree << " on " << f.space
                << "\n";
    }
  }
  std::cout << "words visited " << d.lie_factors.words_visited << ", dropped "
            << d.lie_factors.dropped_kappa_zero << " with kappa=0, " << d.lie_factors.dropped_null
            << " null\n";
  return kExitOk;
}

int run_hall(int letters, int max_len, const std::string& format) {
  if (letters < 1 || letters > 26) throw std::invalid_argument("letters must be in 1..26");
  if (max_len < 1) throw std::invalid_argument("max length must be >= 1");
  Int predicted = 0;
  for (int len = 1; len <= max_len; ++len) predicted += lie::witt_count(letters, len);
  if (predicted > 1'000'000) {
    throw std::invalid_argument("listing would contain " + predicted.get_str() +
                                " words; lower --letters or --max-len");
  }
  std::vector<lie::LyndonWord> words = lie::lyndon_words(letters, max_len);
  auto name = [](int l) { return std::string(1, static_cast<char>('a' + l)); };

  std::map<int, long> by_length;
  for (const lie::LyndonWord& w : words) ++by_length[static_cast<int>(w.size())];
  bool pass = true;
  for (int len = 1; len <= max_len; ++len) {
    Int expected = lie::witt_count(letters, len);
    long got = by_length.count(len) ? by_length[len] : 0;
    if (expected != got) pass = false;
  }

  if (format == "json") {
    json list = json::array();
    for (const lie::LyndonWord& w : words) {
      lie::HallWord h(w);
      std::string flat;
      for (int l : w) flat += static_cast<char>('a' + l);
      list.push_back(json{{"word", flat}, {"bracketing", h.render(name)}, {"length", w.size()}});
    }
    json counts = json::object();
    for (const auto& [len, c] : by_length) {
      counts[std::to_string(len)] =
          json{{"count", c}, {"witt", lie::witt_count(letters, len).get_si()}};
    }
    emit(json{{"letters", letters},
              {"max_len", max_len},
              {"words", list},
              {"counts_by_length", counts},
              {"witt_verified", pass}});
  } else {
    for (const lie::LyndonWord& w : words) {
      lie::HallWord h(w);
      std::string flat;
      for (int l : w) flat += static_cast<char>('a' + l);
      std::cout << flat << "  " << h.render(name) << "\n";
    }
    std::cout << "counts by length:";
    for (const auto& [len, c] : by_length) {
      std::cout << " " << len << ":" << c << "(witt " << lie::witt_count(letters, len).get_str()
                << ")";
    }
    std::cout << "\nwitt cross-check: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitOk : kExitVerification;
}

int run_witness(const std::string& path, const std::string& dims_text, int count,
                const std::string& format) {
  SimplicialComplex k = read_complex_file(path);
  tower::SpaceSpec spec = make_spec(dims_text, k.vertex_count(), false);
  std::vector<convergence::DivergenceWitness> ws =
      convergence::divergence_witnesses(k, spec, count);

  if (format == "json") {
    emit(convergence::witnesses_to_json(k, spec, ws));
  } else {
    convergence::ConvergenceReport report = convergence::classify(k);
    std::cout << "classification: " << convergence::to_string(report.classification) << "\n";
    if (report.witness_face) {
      std::cout << "witness face: " << report.witness_face->to_string() << "\n";
    }
    std::cout << "divergence witnesses (suspended smash spheres):\n";
    for (const convergence::DivergenceWitness& w : ws) {
      std::cout << "  S^" << w.sphere_dim << "  " << w.word_label << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goodwillie-tower factor calculator for polyhedral products"};
  app.require_subcommand(1);

  std::string path, n_text, dims_text = "1", variant = "multi", indexing = "missing";
  std::string format = "table";
  bool assume = false, verify = false, pre_suspended = false;
  int letters = 2, max_len = 5, count = 10;
  std::uint64_t cap = 1'000'000;

  CLI::App* check = app.add_subcommand("check", "complex summary, certificate, classification");
  check->add_option("complex", path, "complex file")->required();
  check->add_flag("--assume-trivial-fwf", assume, "treat the fat wedge filtration as trivial");
  check->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  CLI::App* hom =
      app.add_subcommand("homology", "homology of K and of its real moment-angle complex");
  hom->add_option("complex", path, "complex file")->required();
  hom->add_flag("--verify-splitting", verify, "compare against the wedge-splitting formula");
  hom->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  CLI::App* fac = app.add_subcommand("factors", "decomposition factor lists");
  fac->add_option("complex", path, "complex file")->required();
  fac->add_option("--n", n_text, "excisive multi-index (multi/cone) or degree (single/bh)")
      ->required();
  fac->add_option("--dims", dims_text, "sphere dimension per variable, e.g. 1,1");
  fac->add_option("--variant", variant)->check(CLI::IsMember({"multi", "single", "cone", "bh"}));
  fac->add_flag("--assume-trivial-fwf", assume);
  fac->add_flag("--pre-suspended", pre_suspended, "dims describe the suspended inputs");
  fac->add_option("--indexing", indexing)->check(CLI::IsMember({"missing", "all"}));
  fac->add_option("--cap", cap, "safety cap on enumerated words");
  fac->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  CLI::App* hall = app.add_subcommand("hall", "Lyndon/Hall basis listing with Witt cross-check");
  hall->add_option("--letters", letters, "alphabet size")->required();
  hall->add_option("--max-len", max_len, "maximum word length")->required();
  hall->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  CLI::App* wit = app.add_subcommand("witness", "divergence witness family");
  wit->add_option("complex", path, "complex file")->required();
  wit->add_option("--dims", dims_text, "sphere dimension per variable");
  wit->add_option("--count", count, "number of witnesses");
  wit->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
    if (check->parsed()) return run_check(path, assume, format);
    if (hom->parsed()) return run_homology(path, verify, format);
    if (fac->parsed()) {
      return run_factors(path, n_text, dims_text, variant, assume, pre_suspended, indexing, cap,
                         format);
    }
    if (hall->parsed()) return run_hall(letters, max_len, format);
    if (wit->parsed()) return run_witness(path, dims_text, count, format);
    return kExitParse;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  } catch (const hypothesis_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}
