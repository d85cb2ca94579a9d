#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "partsep/classifier.hpp"

namespace partsep {

struct CheckOutcome {
  std::string what;
  bool pass = false;
  std::string detail;
};

struct CorpusEntry;

struct CorpusCheck {
  std::string what;
  std::function<CheckOutcome(const CorpusEntry&, const RoofOptions&)> run;
};

struct CorpusEntry {
  std::string name;
  std::string note;
  std::optional<StateVector> pure;
  DensityMatrix rho;
  std::vector<CorpusCheck> checks;
};

// Named states with their expected verdicts.
const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& name);

// Named vectors used across tests and tools.
StateVector bell_state();
StateVector w_state();
StateVector ghz_state();
// |0>_a ⊗ |B> on the other two qubits.
StateVector bisep_state(int a);
StateVector psi_m_state();
// dims (4, 2, 2); additive von Neumann g1 vanishes on it.
StateVector neumann_state();
// 1/2 |0>_b |B>_ac + 1/2 |0>_c |B>_ab.
DensityMatrix c22_mixture(int a);
// 1/4, 1/4 of the two terms above for a = 1, plus 1/2 |1>_1 |B>_23.
DensityMatrix c21_mixture();

std::vector<CheckOutcome> verify_entry(const CorpusEntry& e, const RoofOptions& opt = {});

json entry_json(const CorpusEntry& e);

}  // namespace partsep
