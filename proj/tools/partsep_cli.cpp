// partsep: command-line front end for the library.
//
// Exit status: 0 ok, 1 internal/consistency failure, 2 bad input,
// 3 classification ambiguous or impossible, 4 optimizer did not converge.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "partsep/classifier.hpp"
#include "partsep/corpus.hpp"
#include "partsep/errors.hpp"

using namespace partsep;

namespace {

constexpr int kOk = 0, kFailure = 1, kInput = 2, kAmbiguous = 3, kNotConverged = 4;

json load(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return parse_json(ss.str());
  }
  return read_json_file(path);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

CanonicalParams parse_canonical(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ArgumentError("--canonical: cannot read \"" + item + "\"");
    }
  }
  if (v.size() != 6) throw ArgumentError("--canonical takes alpha,eta0,eta1,eta2,eta3,eta4");
  CanonicalParams p;
  p.alpha = v[0];
  for (std::size_t k = 0; k < 5; ++k) p.eta[k] = v[k + 1];
  p.validate();
  return p;
}

json invariants_json(const StateVector& psi) {
  json j;
  const auto v = indicator_vector(psi);
  const auto vals = v.values();
  json iv;
  for (std::size_t k = 0; k < vals.size(); ++k) iv[InvariantVector::names[k]] = vals[k];
  j["invariants"] = std::move(iv);
  const auto s = sudbery_invariants(psi);
  j["sudbery"] = {{"I0", s.I0}, {"I1", s.I1}, {"I2", s.I2}, {"I3", s.I3}, {"I4", s.I4}, {"I5", s.I5}};
  j["three_tangle"] = three_tangle(psi);
  return j;
}

PureFunction roof_function(const std::string& spec, const Dims& dims, const std::string& entropy) {
  if (spec.rfind("label:", 0) == 0) {
    const auto label = Label::parse(spec.substr(6));
    if (label.n() != static_cast<int>(dims.size())) throw ArgumentError("label has " + std::to_string(label.n()) + " parties, state has " + std::to_string(dims.size()));
    const auto e = EntropySpec::parse(entropy).normalize();
    if (!e.concave()) throw ArgumentError("entropy " + e.str() + " is not concave");
    const IndicatorSpec is{label, e, IndicatorSpec::Combiner::Product, IndicatorSpec::BlockCombiner::ArithmeticMean};
    return [is](const StateVector& psi) { return is(psi); };
  }
  if (spec == "c" || spec == "concurrence") {
    if (dims != Dims{2, 2}) throw DimensionError("concurrence needs two qubits");
    return [](const StateVector& psi) { return pure_concurrence(psi.amp); };
  }
  return column_function(column_index(spec), FunctionSet::Fts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial separability classification toolkit"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  int jobs = 1;
  app.add_option("--seed", seed, "seed for randomized searches")->capture_default_str();
  app.add_option("--jobs", jobs, "parallel restarts")->capture_default_str()->check(CLI::PositiveNumber);

  std::string path;
  std::string canonical;
  auto* inv = app.add_subcommand("invariants", "LU invariants of a three-qubit state");
  inv->add_option("state", path, "state JSON file, or - for stdin");
  inv->add_option("--canonical", canonical, "alpha,eta0,...,eta4 of the canonical form (replaces the file)");

  double threshold = 1e-7;
  std::string entropy = "tsallis:2";
  bool general = false;
  auto* cp = app.add_subcommand("classify-pure", "class of a pure state");
  cp->add_option("state", path, "state JSON file, or - for stdin")->required();
  cp->add_option("--threshold", threshold, "vanishing threshold")->capture_default_str();
  cp->add_flag("--general", general, "finest split via entropies (any n <= 6)");
  cp->add_option("--entropy", entropy, "entropy for --general: vn, tsallis:q, renyi:q, c2")->capture_default_str();

  RoofOptions ro;
  std::string functions = "fts";
  bool no_npt = false;
  auto* cm = app.add_subcommand("classify-mixed", "partial separability class of a tripartite density matrix");
  cm->add_option("state", path, "density matrix or state JSON, or - for stdin")->required();
  cm->add_option("--restarts", ro.restarts)->capture_default_str();
  cm->add_option("--tol", ro.tol, "vanishing tolerance for roof values")->capture_default_str();
  cm->add_option("--max-iters", ro.max_iters)->capture_default_str();
  cm->add_option("--functions", functions, "fts or mult")->capture_default_str();
  cm->add_flag("--no-npt", no_npt, "skip partial-transpose side information");

  std::string function;
  bool concave = false;
  auto* rf = app.add_subcommand("roof", "convex (or concave) roof of a pure-state function");
  rf->add_option("state", path, "density matrix or state JSON, or - for stdin")->required();
  rf->add_option("--function", function, "y, s1..s3, g1..g3, t, tau2, c, or label:{...}")->required();
  rf->add_option("--entropy", entropy, "entropy for label: functions")->capture_default_str();
  rf->add_option("--m", ro.m, "ensemble size (0 = automatic)")->capture_default_str();
  rf->add_option("--restarts", ro.restarts)->capture_default_str();
  rf->add_option("--max-iters", ro.max_iters)->capture_default_str();
  rf->add_option("--tol", ro.tol)->capture_default_str();
  rf->add_flag("--concave", concave, "maximize instead (lower bound)");

  int n = 3;
  bool classes = false, with_w = false;
  std::string format = "text";
  std::uint64_t cap = kDefaultEnumerationCap;
  auto* lat = app.add_subcommand("lattice", "proper labels and partial separability classes");
  lat->add_option("--n", n, "number of parties")->capture_default_str();
  lat->add_flag("--classes", classes, "enumerate classes as well");
  lat->add_flag("--w", with_w, "add the W node (n = 3)");
  lat->add_option("--format", format, "json, dot or text")->capture_default_str()->check(CLI::IsMember({"json", "dot", "text"}));
  lat->add_option("--cap", cap, "enumeration limit")->capture_default_str();

  bool run = false;
  std::string dump;
  auto* cor = app.add_subcommand("corpus", "named states and their expected verdicts");
  cor->add_flag("--run", run, "re-verify every expectation");
  cor->add_option("--dump", dump, "print one entry as a state JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInput;
  }
  ro.seed = seed;
  ro.jobs = jobs;

  try {
    if (*inv) {
      json j;
      if (!canonical.empty()) {
        const auto p = parse_canonical(canonical);
        j = invariants_json(schmidt_canonical_state(p));
        const auto J = j_invariants(p);
        j["J"] = {{"J1", J.J1}, {"J2", J.J2}, {"J3", J.J3}, {"J4", J.J4}, {"J5", J.J5}};
      } else {
        if (path.empty()) throw ArgumentError("invariants: give a state file or --canonical");
        j = invariants_json(state_from_json(load(path)));
      }
      emit(j);
      return kOk;
    }
    if (*cp) {
      const auto psi = state_from_json(load(path));
      if (!general && psi.dims == Dims{2, 2, 2}) {
        emit(to_json(classify_pure_3q(psi, threshold)));
      } else {
        const auto p = classify_pure_general(psi, EntropySpec::parse(entropy), threshold);
        emit({{"partition", p.str()}, {"entropy", entropy}, {"threshold", threshold}});
      }
      return kOk;
    }
    if (*cm) {
      MixedOptions mo;
      mo.roof = ro;
      mo.set = parse_function_set(functions);
      mo.side_information = !no_npt;
      const auto rho = density_from_json(load(path));
      const auto v = classify_mixed_3q(rho, mo);
      auto j = to_json(v);
      j["functions"] = functions;
      j["seed"] = seed;
      emit(j);
      return v.resolved() ? kOk : kAmbiguous;
    }
    if (*rf) {
      const auto rho = density_from_json(load(path));
      const auto f = roof_function(function, rho.dims, entropy);
      const auto r = concave ? concave_roof(rho, f, ro) : convex_roof(rho, f, ro);
      verify_certificate(rho, f, r);
      auto j = to_json(r);
      j["function"] = function;
      emit(j);
      return r.converged ? kOk : kNotConverged;
    }
    if (*lat) {
      const auto poset = label_poset(n, with_w, cap);
      if (format == "json") std::cout << lattice_json(poset, classes, cap) << "\n";
      else if (format == "dot") std::cout << lattice_dot(poset);
      else std::cout << lattice_text(poset, classes, cap);
      return kOk;
    }
    if (*cor) {
      if (!dump.empty()) {
        emit(entry_json(corpus_entry(dump)));
        return kOk;
      }
      bool all = true;
      for (const auto& e : corpus()) {
        if (!run) {
          std::cout << e.name << "  " << e.note << "\n";
          continue;
        }
        for (const auto& o : verify_entry(e, ro)) {
          all = all && o.pass;
          std::cout << (o.pass ? "PASS  " : "FAIL  ") << e.name << ": " << o.what << "  (" << o.detail << ")\n";
        }
      }
      return all ? kOk : kFailure;
    }
  } catch (const ClassificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kAmbiguous;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const BoundsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
