#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swarmctl/analytic.hpp"
#include "swarmctl/generator.hpp"

namespace swarmctl {

/// Monte Carlo statistics of n_D over independent replicas.
struct SimulationStats {
    double mean_n_d = 0.0;
    double std_n_d = 0.0;  ///< sample standard deviation
    double stderr_n_d = 0.0;
};

/// One row of a table or figure: analytic values and, when replicas > 0, the
/// simulated mean with relative errors |analytic - mean| / mean.
struct ScenarioResult {
    NetworkSpec spec;  ///< seed holds the row's master seed
    std::size_t replicas = 0;
    ExponentMode mode = ExponentMode::consistent;

    double analytic_n_d = 0.0;
    double asymptotic_n_d = 0.0;
    std::optional<SimulationStats> simulation;
    std::optional<double> rel_error_closed;
    std::optional<double> rel_error_asym;

    // Row-specific extras.
    std::optional<double> legacy_n_d;              ///< figure 2
    std::optional<double> analytic_paper_literal;  ///< table 4
    std::optional<double> analytic_paper_table;    ///< table 4
    std::optional<double> reference_n_d;           ///< tabulated reference value
    std::vector<std::string> reference_matches;    ///< modes within 1e-5 of reference
};

struct Provenance {
    std::uint64_t master_seed = 0;
    std::size_t n = 0;
    std::size_t replicas = 0;
    ExponentMode mode = ExponentMode::consistent;
};

struct ExperimentReport {
    std::string id;  ///< "table1".."table4", "figure2", "figure3", "scenario"
    Provenance provenance;
    std::vector<ScenarioResult> rows;
};

struct RunOptions {
    /// Worker threads for replicas; results do not depend on it.
    unsigned threads = 1;
    ExponentMode mode = ExponentMode::consistent;
};

inline constexpr std::size_t kDefaultNodes = 2000;
inline constexpr std::size_t kDefaultReplicas = 200;
inline constexpr double kReferenceTolerance = 1e-5;

/// Closed-form n_D for the spec's model (regular or bi-modal in `mode`).
double analytic_driver_fraction(const NetworkSpec& spec, ExponentMode mode);

/// Per-replica n_D values; replica r uses derive_seed(master_seed, r) for
/// generation (stream 0) and link removal (stream 1).
std::vector<double> simulate_replicas(const NetworkSpec& spec, std::size_t replicas,
                                      std::uint64_t master_seed, const RunOptions& options = {});

/// Mean, sample std and standard error with compensated summation.
SimulationStats summarize(const std::vector<double>& samples);

/// Throws ValidationError for replicas == 0 or an invalid spec.
ScenarioResult run_scenario(const NetworkSpec& spec, std::size_t replicas,
                            std::uint64_t master_seed, const RunOptions& options = {});

/// One row per tabulated row; row i is simulated under derive_seed(master_seed, i).
/// replicas == 0 skips simulation. Throws ValidationError for ids outside 1..4.
ExperimentReport reproduce_table(int table_id, std::size_t n, std::size_t replicas,
                                 std::uint64_t master_seed, const RunOptions& options = {});

/// Figure 2: k = 1..8 legacy vs corrected vs simulated (when replicas > 0).
/// Figure 3: analytic n_D over k = 1..8 x p in {0, 0.2, 0.4, 0.6}.
ExperimentReport figure_data(int figure_id, std::size_t n = kDefaultNodes,
                             std::size_t replicas = kDefaultReplicas,
                             std::uint64_t master_seed = 0, const RunOptions& options = {});

// --- reference values -------------------------------------------------------

struct ReferenceRow {
    NetworkSpec spec;  ///< n and seed unset
    double value = 0.0;
};

/// Tabulated closed-form values for tables 1..4 in row order.
const std::vector<ReferenceRow>& reference_rows(int table_id);

// --- serialization ----------------------------------------------------------

/// CSV with header; reals printed with 6 decimals, missing values empty.
std::string to_csv(const ExperimentReport& report);
std::string to_json(const ExperimentReport& report);
std::string to_json(const ScenarioResult& row);

std::string to_json(const NetworkSpec& spec);

/// Parsers for the documents written above. Throw ValidationError on malformed
/// input.
ExperimentReport report_from_json(const std::string& text);
ScenarioResult scenario_from_json(const std::string& text);
/// Fields: n, kind ("regular" | "bimodal"), k or k1/k2/alpha, p, seed. Missing
/// fields keep their defaults.
NetworkSpec spec_from_json(const std::string& text);

}  // namespace swarmctl
