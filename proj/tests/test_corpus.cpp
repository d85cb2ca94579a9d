#include <doctest.h>

#include <cmath>
#include <set>

#include "partsep/corpus.hpp"
#include "partsep/errors.hpp"

using namespace partsep;

TEST_CASE("corpus contents") {
  std::set<std::string> names;
  for (const auto& e : corpus()) {
    names.insert(e.name);
    CHECK(!e.checks.empty());
    CHECK(std::abs(e.rho.mat.trace().real() - 1) < 1e-12);
  }
  for (const char* n : {"bell", "w", "ghz", "bisep-1|23", "bisep-2|13", "bisep-3|12", "product", "c22-1", "c22-2", "c22-3", "c21", "psi-m", "neumann-counterexample"})
    CHECK(names.count(n) == 1);
  CHECK(corpus_entry("neumann-counterexample").pure->dims == Dims{4, 2, 2});
  CHECK_THROWS_AS(corpus_entry("nope"), ArgumentError);
}

TEST_CASE("every corpus expectation reproduces") {
  for (const auto& e : corpus())
    for (const auto& o : verify_entry(e)) {
      INFO(e.name << ": " << o.what << " -> " << o.detail);
      CHECK(o.pass);
    }
}

TEST_CASE("corpus entries serialize as state files") {
  auto j = entry_json(corpus_entry("ghz"));
  auto back = state_from_json(parse_json(j.dump()));
  CHECK(back.amp == ghz_state().amp);
  auto m = density_from_json(parse_json(entry_json(corpus_entry("c21")).dump()));
  CHECK((m.mat - c21_mixture().mat).cwiseAbs().maxCoeff() == 0.0);
}
