#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "bernalg/families.hpp"
#include "bernalg/report.hpp"

namespace bernalg {

/// Malformed or unusable input; the CLI exits with status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t rng_seed = 1;
  std::optional<std::size_t> max_steps;
  std::size_t probe_trials = 20;
};

/// A command result: a JSON report, or DSL text for commands that produce
/// algebras, plus the process exit status (0 ok, 1 property failure).
struct Outcome {
  Json report;
  std::optional<std::string> dsl;
  int exit_code = 0;
};

Outcome run_check(const AlgebraFile& f, const Options& opt);
Outcome run_classify(const AlgebraFile& f, const Options& opt);
Outcome run_peirce(const AlgebraFile& f, const std::optional<std::string>& seed, const Options& opt);
Outcome run_powers(const AlgebraFile& f, PowerKind kind, const Options& opt);
Outcome run_fixedspace(const AlgebraFile& f, const Options& opt);
Outcome run_multalg(const AlgebraFile& f, const Options& opt);
Outcome run_lemma51(const AlgebraFile& f, const std::string& vectors, const Options& opt);
Outcome run_thm43(const AlgebraFile& f, const std::string& gens, const Options& opt);
Outcome run_family(FamilyKind kind, std::optional<std::size_t> n);
/// `by` is `annU` or `;`-separated vectors spanning a baric ideal.
Outcome run_quotient(const AlgebraFile& f, const std::string& by, const Options& opt);

}  // namespace bernalg
