#pragma once

// Reproduction experiments. Each experiment evaluates a list of exact claims
// and optionally persists every intermediate polyhedron under an output
// directory next to result.json.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "polycirc/json_io.hpp"

namespace polycirc {

struct Claim {
  std::string description;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct ExperimentParams {
  std::optional<long> n;
  std::optional<long> m;
  std::optional<long> alpha;
  std::optional<Rational> delta;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  bool minimize = false;
  std::string variant;     // sub-case selector for thm5 / thm6; empty runs all
  std::size_t count = 100; // instances per law suite
};

struct ReproductionResult {
  std::string experiment;
  Json parameters;
  std::vector<Claim> claims;
  std::vector<std::string> artifacts;
  double runtime_seconds = 0;
  std::string aborted;  // set when a budget stopped the run early
  bool pass() const;
};

const std::vector<std::string>& experiment_ids();

/// Throws InvalidArgument for an unknown id. BudgetExceeded propagates after
/// the partial result has been written.
ReproductionResult run_experiment(const std::string& id, const ExperimentParams& params,
                                  const std::optional<std::filesystem::path>& out_dir = std::nullopt);

/// Deterministic encoding (runtime excluded).
Json result_to_json(const ReproductionResult& r);

}  // namespace polycirc
