#include "swarmctl/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <variant>

#include "swarmctl/errors.hpp"
#include "swarmctl/matching.hpp"
#include "swarmctl/rng.hpp"

namespace swarmctl {

namespace {

constexpr std::uint64_t kGenerationStream = 0;
constexpr std::uint64_t kRemovalStream = 1;

double replica_driver_fraction(const NetworkSpec& spec, std::uint64_t replica_seed) {
    NetworkSpec local = spec;
    local.seed = derive_seed(replica_seed, kGenerationStream);
    DirectedGraph g = sample_ssn(local);
    if (spec.removal_fraction > 0.0)
        g = remove_links(g, spec.removal_fraction, derive_seed(replica_seed, kRemovalStream));
    return max_matching(g).fraction;
}

// Neumaier compensated sum.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            c_ += (sum_ - t) + v;
        else
            c_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + c_; }

private:
    double sum_ = 0.0;
    double c_ = 0.0;
};

void fill_relative_errors(ScenarioResult& r) {
    if (!r.simulation || r.simulation->mean_n_d == 0.0) return;
    const double mean = r.simulation->mean_n_d;
    r.rel_error_closed = std::abs(r.analytic_n_d - mean) / mean;
    r.rel_error_asym = std::abs(r.asymptotic_n_d - mean) / mean;
}

ScenarioResult analytic_row(const NetworkSpec& spec, ExponentMode mode) {
    ScenarioResult r;
    r.spec = spec;
    r.mode = mode;
    r.analytic_n_d = analytic_driver_fraction(spec, mode);
    r.asymptotic_n_d = std::exp(-nominal_mean_degree(spec) * (1.0 - spec.removal_fraction));
    return r;
}

ScenarioResult scenario_row(const NetworkSpec& spec, std::size_t replicas,
                            std::uint64_t master_seed, const RunOptions& options) {
    if (replicas == 0) {
        auto r = analytic_row(spec, options.mode);
        r.spec.seed = master_seed;
        return r;
    }
    return run_scenario(spec, replicas, master_seed, options);
}

}  // namespace

double analytic_driver_fraction(const NetworkSpec& spec, ExponentMode mode) {
    if (const auto* r = std::get_if<RegularDegree>(&spec.out_degree))
        return nd_closed_regular(r->k, spec.removal_fraction).n_d;
    const auto& b = std::get<BimodalDegree>(spec.out_degree);
    return nd_closed_bimodal(b.k1, b.k2, b.alpha, spec.removal_fraction, mode).n_d;
}

std::vector<double> simulate_replicas(const NetworkSpec& spec, std::size_t replicas,
                                      std::uint64_t master_seed, const RunOptions& options) {
    validate(spec);
    std::vector<double> values(replicas);
    const unsigned workers =
        std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(replicas)));
    if (workers == 1) {
        for (std::size_t r = 0; r < replicas; ++r)
            values[r] = replica_driver_fraction(spec, derive_seed(master_seed, r));
        return values;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                try {
                    for (std::size_t r = next++; r < replicas; r = next++)
                        values[r] = replica_driver_fraction(spec, derive_seed(master_seed, r));
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = replicas;
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
    return values;
}

SimulationStats summarize(const std::vector<double>& samples) {
    SimulationStats s;
    if (samples.empty()) return s;
    CompensatedSum sum;
    for (double v : samples) sum.add(v);
    const auto count = static_cast<double>(samples.size());
    s.mean_n_d = sum.value() / count;
    if (samples.size() > 1) {
        CompensatedSum ss;
        for (double v : samples) ss.add((v - s.mean_n_d) * (v - s.mean_n_d));
        s.std_n_d = std::sqrt(ss.value() / (count - 1.0));
    }
    s.stderr_n_d = s.std_n_d / std::sqrt(count);
    return s;
}

ScenarioResult run_scenario(const NetworkSpec& spec, std::size_t replicas,
                            std::uint64_t master_seed, const RunOptions& options) {
    if (replicas == 0) throw ValidationError("replicas must be >= 1");
    validate(spec);
    auto r = analytic_row(spec, options.mode);
    r.spec.seed = master_seed;
    r.replicas = replicas;
    r.simulation = summarize(simulate_replicas(spec, replicas, master_seed, options));
    fill_relative_errors(r);
    return r;
}

ExperimentReport reproduce_table(int table_id, std::size_t n, std::size_t replicas,
                                 std::uint64_t master_seed, const RunOptions& options) {
    const auto& refs = reference_rows(table_id);
    ExperimentReport report;
    report.id = "table" + std::to_string(table_id);
    report.provenance = {master_seed, n, replicas, options.mode};

    for (std::size_t i = 0; i < refs.size(); ++i) {
        NetworkSpec spec = refs[i].spec;
        spec.n = n;
        auto row = scenario_row(spec, replicas, derive_seed(master_seed, i), options);
        row.reference_n_d = refs[i].value;

        if (const auto* b = std::get_if<BimodalDegree>(&spec.out_degree);
            b != nullptr && spec.removal_fraction > 0.0) {
            const double p = spec.removal_fraction;
            row.analytic_paper_literal =
                nd_closed_bimodal(b->k1, b->k2, b->alpha, p, ExponentMode::paper_literal).n_d;
            row.analytic_paper_table =
                nd_closed_bimodal(b->k1, b->k2, b->alpha, p, ExponentMode::paper_table).n_d;
            for (auto mode : {ExponentMode::consistent, ExponentMode::paper_literal,
                              ExponentMode::paper_table}) {
                const double v = nd_closed_bimodal(b->k1, b->k2, b->alpha, p, mode).n_d;
                if (std::abs(v - refs[i].value) <= kReferenceTolerance)
                    row.reference_matches.emplace_back(to_string(mode));
            }
        } else if (std::abs(row.analytic_n_d - refs[i].value) <= kReferenceTolerance) {
            row.reference_matches.emplace_back("closed-form");
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

ExperimentReport figure_data(int figure_id, std::size_t n, std::size_t replicas,
                             std::uint64_t master_seed, const RunOptions& options) {
    ExperimentReport report;
    report.provenance = {master_seed, n, replicas, options.mode};
    if (figure_id == 2) {
        report.id = "figure2";
        for (int k = 1; k <= 8; ++k) {
            NetworkSpec spec;
            spec.n = n;
            spec.out_degree = RegularDegree{k};
            auto row = scenario_row(spec, replicas,
                                    derive_seed(master_seed, static_cast<std::uint64_t>(k - 1)),
                                    options);
            row.legacy_n_d = komareji_legacy_nd(k).n_d;
            report.rows.push_back(std::move(row));
        }
    } else if (figure_id == 3) {
        report.id = "figure3";
        report.provenance.replicas = 0;
        for (double p : {0.0, 0.2, 0.4, 0.6}) {
            for (int k = 1; k <= 8; ++k) {
                NetworkSpec spec;
                spec.n = n;
                spec.out_degree = RegularDegree{k};
                spec.removal_fraction = p;
                report.rows.push_back(analytic_row(spec, options.mode));
            }
        }
    } else {
        throw ValidationError("figure id must be 2 or 3, got " + std::to_string(figure_id));
    }
    return report;
}

}  // namespace swarmctl
