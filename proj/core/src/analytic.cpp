#include "swarmctl/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "swarmctl/errors.hpp"

namespace swarmctl {

namespace {

void require_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        std::ostringstream os;
        os << what << " must lie in [0, 1], got " << p;
        throw DomainError(os.str());
    }
}

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Horner evaluation of sum_i c[i] y^i.
double polynomial(const std::vector<double>& c, double y) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * y + *it;
    return acc;
}

// sum_i i c[i] y^(i-1)
double polynomial_derivative(const std::vector<double>& c, double y) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 1;) acc = acc * y + static_cast<double>(i) * c[i];
    return acc;
}

double pmf_mean(const std::vector<double>& pmf) {
    double m = 0.0;
    for (std::size_t i = 0; i < pmf.size(); ++i) m += static_cast<double>(i) * pmf[i];
    return m;
}

std::vector<double> validated_pmf(std::vector<double> pmf, const char* side) {
    if (pmf.empty()) throw ValidationError(std::string(side) + " PMF is empty");
    double total = 0.0;
    for (double v : pmf) {
        if (!std::isfinite(v) || v < 0.0)
            throw ValidationError(std::string(side) + " PMF has a negative or non-finite entry");
        total += v;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        std::ostringstream os;
        os << side << " PMF sums to " << total << ", expected 1";
        throw ValidationError(os.str());
    }
    while (pmf.size() > 1 && pmf.back() == 0.0) pmf.pop_back();
    return pmf;
}

struct ScalarRoot {
    double x = 1.0;
    long iterations = 0;
    double residual = 0.0;
    SolveMethod method = SolveMethod::fixed_point_iteration;
};

// Largest root in [0, 1] of x = f(x) for non-decreasing f mapping [0, 1] into itself.
template <class F>
ScalarRoot largest_fixed_point(F&& f) {
    ScalarRoot r;
    double x = 1.0;
    for (long it = 1; it <= kMaxFixedPointIterations; ++it) {
        const double next = std::clamp(f(x), 0.0, 1.0);
        if (std::isnan(next)) break;
        if (std::abs(next - x) <= kFixedPointTolerance) {
            r.x = next;
            r.iterations = it;
            r.residual = std::abs(next - f(next));
            if (r.residual <= kResidualTolerance) return r;
            break;
        }
        x = next;
    }

    // Iteration stalled; scan downwards from 1 for the first sign change of x - f(x).
    auto g = [&](double v) { return v - f(v); };
    r.method = SolveMethod::bisection;
    r.iterations = 0;
    if (g(1.0) == 0.0) {
        r.x = 1.0;
        r.residual = 0.0;
        return r;
    }
    constexpr int kScanSteps = 4096;
    double hi = 1.0;
    double lo = 1.0;
    bool bracketed = false;
    for (int i = 1; i <= kScanSteps; ++i) {
        lo = 1.0 - static_cast<double>(i) / kScanSteps;
        ++r.iterations;
        if (g(lo) <= 0.0) {
            bracketed = true;
            break;
        }
        hi = lo;
    }
    if (!bracketed) {
        throw SolverError("no root of the fixed-point equation in [0, 1]", r.iterations,
                          std::abs(g(0.0)), 0.0);
    }
    while (hi - lo > 1e-15 && r.iterations < kMaxFixedPointIterations) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        ++r.iterations;
        if (g(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    r.x = std::abs(g(lo)) <= std::abs(g(hi)) ? lo : hi;
    r.residual = std::abs(g(r.x));
    if (r.residual > kResidualTolerance) {
        throw SolverError("fixed-point bisection did not reach the residual tolerance",
                          r.iterations, r.residual, r.x);
    }
    return r;
}

FixedPointSolution degenerate_solution() {
    FixedPointSolution s;
    s.w1 = 0.0;
    s.w2 = 1.0;
    s.w1_hat = 1.0;
    s.w2_hat = 0.0;
    s.n_d = 1.0;
    s.method = SolveMethod::degenerate;
    return s;
}

// Builds the symmetric quadruple from x = 1 - w2 = w1 and w1^ = H_in(1 - x).
FixedPointSolution from_scalar(const ScalarRoot& root, double w1_hat) {
    FixedPointSolution s;
    s.w1 = root.x;
    s.w2 = 1.0 - root.x;
    s.w1_hat = w1_hat;
    s.w2_hat = 1.0 - w1_hat;
    s.iterations = root.iterations;
    s.method = root.method;
    return s;
}

void check_residual(const DegreeModel& model, FixedPointSolution& s) {
    s.residual = fixed_point_residual(model, s);
    if (!(s.residual <= kResidualTolerance)) {
        throw SolverError("fixed-point residual above tolerance", s.iterations, s.residual,
                          s.w1);
    }
}

}  // namespace

// --- DegreeModel ------------------------------------------------------------

DegreeModel::DegreeModel(Kind kind, double p) : kind_(std::move(kind)), p_(p) {
    require_probability(p, "removal fraction");
    std::visit(Overloaded{
                   [&](const RegularDegree& r) {
                       if (r.k < 0) throw ValidationError("regular out-degree must be >= 0");
                       intact_mean_ = r.k;
                       intact_in_mean_ = r.k;
                   },
                   [&](const BimodalDegree& b) {
                       if (b.k1 < 1 || b.k2 < 1)
                           throw ValidationError("bi-modal degrees must both be >= 1");
                       if (b.k1 == b.k2)
                           throw ValidationError("bi-modal degrees must differ (use regular)");
                       require_probability(b.alpha, "alpha");
                       intact_mean_ = b.alpha * b.k1 + (1.0 - b.alpha) * b.k2;
                       intact_in_mean_ = intact_mean_;
                   },
                   [&](TabulatedDegree& t) {
                       t.out_pmf = validated_pmf(std::move(t.out_pmf), "out-degree");
                       t.in_pmf = validated_pmf(std::move(t.in_pmf), "in-degree");
                       intact_mean_ = pmf_mean(t.out_pmf);
                       intact_in_mean_ = pmf_mean(t.in_pmf);
                       if (std::abs(intact_mean_ - intact_in_mean_) >
                           1e-9 * std::max(1.0, intact_mean_)) {
                           throw ValidationError("tabulated out- and in-degree means differ");
                       }
                   },
               },
               kind_);
}

DegreeModel DegreeModel::regular(int k, double removal_fraction) {
    return DegreeModel(RegularDegree{k}, removal_fraction);
}

DegreeModel DegreeModel::bimodal(int k1, int k2, double alpha, double removal_fraction) {
    return DegreeModel(BimodalDegree{k1, k2, alpha}, removal_fraction);
}

DegreeModel DegreeModel::tabulated(std::vector<double> out_pmf, std::vector<double> in_pmf,
                                   double removal_fraction) {
    return DegreeModel(TabulatedDegree{std::move(out_pmf), std::move(in_pmf)}, removal_fraction);
}

double DegreeModel::g_out(double x) const {
    const double y = p_ + (1.0 - p_) * x;
    return std::visit(Overloaded{
                          [&](const RegularDegree& r) { return std::pow(y, r.k); },
                          [&](const BimodalDegree& b) {
                              return b.alpha * std::pow(y, b.k1) +
                                     (1.0 - b.alpha) * std::pow(y, b.k2);
                          },
                          [&](const TabulatedDegree& t) { return polynomial(t.out_pmf, y); },
                      },
                      kind_);
}

double DegreeModel::g_in(double x) const {
    const double y = p_ + (1.0 - p_) * x;
    if (const auto* t = std::get_if<TabulatedDegree>(&kind_)) return polynomial(t->in_pmf, y);
    return std::exp(-intact_in_mean_ * (1.0 - y));
}

// Excess-degree functions are G'(y) / G'(1); with zero mean they are taken as 1.
double DegreeModel::h_out(double x) const {
    if (intact_mean_ == 0.0) return 1.0;
    const double y = p_ + (1.0 - p_) * x;
    return std::visit(Overloaded{
                          [&](const RegularDegree& r) { return std::pow(y, r.k - 1); },
                          [&](const BimodalDegree& b) {
                              return (b.alpha * b.k1 * std::pow(y, b.k1 - 1) +
                                      (1.0 - b.alpha) * b.k2 * std::pow(y, b.k2 - 1)) /
                                     intact_mean_;
                          },
                          [&](const TabulatedDegree& t) {
                              return polynomial_derivative(t.out_pmf, y) / intact_mean_;
                          },
                      },
                      kind_);
}

double DegreeModel::h_in(double x) const {
    if (intact_in_mean_ == 0.0) return 1.0;
    const double y = p_ + (1.0 - p_) * x;
    if (const auto* t = std::get_if<TabulatedDegree>(&kind_))
        return polynomial_derivative(t->in_pmf, y) / intact_in_mean_;
    return std::exp(-intact_in_mean_ * (1.0 - y));
}

DegreeModel DegreeModel::thinned(double extra_removal) const {
    require_probability(extra_removal, "removal fraction");
    DegreeModel copy = *this;
    if (extra_removal == 0.0) return copy;
    copy.p_ = p_ == 0.0 ? extra_removal : 1.0 - (1.0 - p_) * (1.0 - extra_removal);
    return copy;
}

// --- operations -------------------------------------------------------------

GeneratingFunctionValues evaluate_generating_functions(const DegreeModel& model, double x) {
    require_probability(x, "generating-function argument");
    return {model.g_out(x), model.g_in(x), model.h_out(x), model.h_in(x)};
}

double mean_degree(const DegreeModel& model) {
    return model.intact_mean_degree() * (1.0 - model.removal_fraction());
}

DegreeModel thin_model(const DegreeModel& model, double p) { return model.thinned(p); }

std::string_view to_string(SolveMethod method) {
    switch (method) {
        case SolveMethod::fixed_point_iteration: return "fixed-point-iteration";
        case SolveMethod::bisection: return "bisection";
        case SolveMethod::degenerate: return "degenerate";
    }
    return "unknown";
}

double fixed_point_residual(const DegreeModel& model, const FixedPointSolution& s) {
    const double r1 = std::abs(s.w1 - model.h_out(s.w2_hat));
    const double r2 = std::abs(s.w2 - (1.0 - model.h_out(1.0 - s.w1_hat)));
    const double r3 = std::abs(s.w1_hat - model.h_in(s.w2));
    const double r4 = std::abs(s.w2_hat - (1.0 - model.h_in(1.0 - s.w1)));
    return std::max({r1, r2, r3, r4});
}

FixedPointSolution solve_fixed_point(const DegreeModel& model) {
    if (mean_degree(model) == 0.0) {
        auto s = degenerate_solution();
        s.n_d = std::numeric_limits<double>::quiet_NaN();
        return s;
    }
    const auto root = largest_fixed_point(
        [&](double x) { return model.h_out(1.0 - model.h_in(1.0 - x)); });
    auto s = from_scalar(root, model.h_in(1.0 - root.x));
    check_residual(model, s);
    return s;
}

FixedPointSolution driver_fraction_general(const DegreeModel& model) {
    auto s = solve_fixed_point(model);
    if (s.method == SolveMethod::degenerate) {
        s.n_d = 1.0;
        return s;
    }
    const double k = mean_degree(model);
    const double n = 0.5 * (model.g_in(s.w2) + model.g_in(1.0 - s.w1) - 2.0 +
                            model.g_out(s.w2_hat) + model.g_out(1.0 - s.w1_hat) +
                            k * (s.w1_hat * (1.0 - s.w2) + s.w1 * (1.0 - s.w2_hat)));
    s.n_d = std::clamp(n, 0.0, 1.0);
    return s;
}

FixedPointSolution nd_closed_regular(int k, double p) {
    if (k < 0) throw DomainError("out-degree k must be >= 0");
    require_probability(p, "removal fraction");
    if (k == 0 || p == 1.0) return degenerate_solution();

    const double kbar = k * (1.0 - p);
    const auto root = largest_fixed_point([&](double x) {
        return std::pow(p + (1.0 - p) * (1.0 - std::exp(-kbar * x)), k - 1);
    });
    const double w1_hat = std::exp(-kbar * root.x);
    auto s = from_scalar(root, w1_hat);
    check_residual(DegreeModel::regular(k, p), s);

    const double x = root.x;
    s.n_d = std::pow(p + (1.0 - p) * (1.0 - w1_hat), k) - 1.0 + w1_hat + kbar * x * w1_hat;
    return s;
}

std::string_view to_string(ExponentMode mode) {
    switch (mode) {
        case ExponentMode::consistent: return "consistent";
        case ExponentMode::paper_literal: return "paper-literal";
        case ExponentMode::paper_table: return "paper-table";
    }
    return "unknown";
}

ExponentMode parse_exponent_mode(std::string_view name) {
    if (name == "default" || name == "consistent") return ExponentMode::consistent;
    if (name == "paper-literal") return ExponentMode::paper_literal;
    if (name == "paper-table") return ExponentMode::paper_table;
    throw ValidationError("unknown exponent mode '" + std::string(name) +
                          "' (expected default, paper-literal or paper-table)");
}

FixedPointSolution nd_closed_bimodal(int k1, int k2, double alpha, double p, ExponentMode mode) {
    if (k1 < 1 || k2 < 1) throw DomainError("bi-modal degrees must both be >= 1");
    require_probability(alpha, "alpha");
    require_probability(p, "removal fraction");
    if (p == 1.0) return degenerate_solution();

    const double k = alpha * k1 + (1.0 - alpha) * k2;
    const double kbar = k * (1.0 - p);
    auto excess = [&](double y) {
        return (alpha * k1 * std::pow(y, k1 - 1) + (1.0 - alpha) * k2 * std::pow(y, k2 - 1)) / k;
    };
    const auto root = largest_fixed_point(
        [&](double x) { return excess(p + (1.0 - p) * (1.0 - std::exp(-kbar * x))); });
    const double x = root.x;
    const double w1_hat = std::exp(-kbar * x);
    auto s = from_scalar(root, w1_hat);
    check_residual(k1 == k2 ? DegreeModel::regular(k1, p) : DegreeModel::bimodal(k1, k2, alpha, p),
                   s);

    auto out_term = [&](double e) {
        const double y = p + (1.0 - p) * (1.0 - e);
        return alpha * std::pow(y, k1) + (1.0 - alpha) * std::pow(y, k2);
    };
    const double e_intact = std::exp(-k * x);
    switch (mode) {
        case ExponentMode::consistent:
            s.n_d = out_term(w1_hat) - 1.0 + w1_hat + kbar * x * w1_hat;
            break;
        case ExponentMode::paper_literal:
            s.n_d = out_term(e_intact) - 1.0 + w1_hat + kbar * x * e_intact;
            break;
        case ExponentMode::paper_table:
            s.n_d = out_term(e_intact) - 1.0 + w1_hat + k * x * e_intact;
            break;
    }
    return s;
}

double nd_asymptotic(const DegreeModel& model) { return std::exp(-mean_degree(model)); }

LegacyDriverFraction komareji_legacy_nd(int k) {
    if (k < 1) throw DomainError("legacy formula requires k >= 1");
    const auto root = largest_fixed_point(
        [&](double x) { return std::pow(1.0 - std::exp(-k * x), k - 1); });
    const double x = root.x;
    const double e = std::exp(-k * x);
    LegacyDriverFraction r;
    r.w2 = 1.0 - x;
    r.n_d = 0.5 * (std::pow(1.0 - e, k) - 1.0 + e + k * x * e);
    r.asymptotic = 0.5 * std::exp(-static_cast<double>(k));
    return r;
}

}  // namespace swarmctl
