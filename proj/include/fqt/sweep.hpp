#ifndef FQT_SWEEP_HPP
#define FQT_SWEEP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fqt/experiments.hpp"

namespace fqt {

/// An experiment named as on the command line ("interval-primes",
/// "mobius-full-sum", ...) with its parameters as text: polynomial literals,
/// integers, and ';'-separated lists for multi-family or shift inputs.
struct ExperimentDescriptor {
    std::string name;
    std::map<std::string, std::string> params;
};

/// Names accepted by run_experiment.
const std::vector<std::string>& experiment_names();

/// Parses the descriptor against `field` and runs it.
ExperimentReport run_experiment(const ExperimentDescriptor& descriptor, const FieldPtr& field,
                                const RunOptions& opts);

/// Builds the families described by f/g/center/m. f and g may be
/// ';'-separated lists; a single g is reused for every f.
std::vector<QuadraticFamily> parse_families(const std::map<std::string, std::string>& params,
                                            const FieldPtr& field);

struct SweepResult {
    std::vector<ExperimentReport> reports;  // grid order
    std::optional<std::string> error;       // set when a grid point failed; reports are partial
    std::optional<std::uint64_t> failed_q;
};

/// Runs the descriptor at every field order in q_grid, in order. The first
/// failing grid point stops the sweep.
SweepResult sweep(const ExperimentDescriptor& descriptor, const std::vector<std::uint64_t>& q_grid,
                  const RunOptions& opts);

}  // namespace fqt

#endif
