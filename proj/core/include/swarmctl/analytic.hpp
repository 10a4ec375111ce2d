#pragma once

#include <cstdint>
#include <limits>
#include <string_view>
#include <variant>
#include <vector>

namespace swarmctl {

/// Out-degree exactly `k` for every node.
struct RegularDegree {
    int k = 0;
};

/// Out-degree `k1` for a fraction `alpha` of nodes and `k2` for the rest.
struct BimodalDegree {
    int k1 = 1;
    int k2 = 2;
    double alpha = 0.5;
};

/// Explicit finite out/in degree PMFs; index i holds P(degree = i).
struct TabulatedDegree {
    std::vector<double> out_pmf;
    std::vector<double> in_pmf;
};

/// Analytic description of an out/in degree distribution pair.
///
/// Regular and bi-modal models pair the out-degree law with a Poisson in-degree
/// of the same mean. A removal fraction p thins every link independently, which
/// composes each generating function with x -> p + (1 - p) x.
///
/// The g_*/h_* members evaluate the power series for any real x (they are
/// polynomials or exponentials); the checked entry point is
/// evaluate_generating_functions().
class DegreeModel {
public:
    using Kind = std::variant<RegularDegree, BimodalDegree, TabulatedDegree>;

    static DegreeModel regular(int k, double removal_fraction = 0.0);
    static DegreeModel bimodal(int k1, int k2, double alpha, double removal_fraction = 0.0);
    /// PMFs are truncated after their last non-zero entry.
    static DegreeModel tabulated(std::vector<double> out_pmf, std::vector<double> in_pmf,
                                 double removal_fraction = 0.0);

    const Kind& kind() const noexcept { return kind_; }
    double removal_fraction() const noexcept { return p_; }

    /// Mean out-degree of the unthinned model.
    double intact_mean_degree() const noexcept { return intact_mean_; }

    double g_out(double x) const;
    double g_in(double x) const;
    double h_out(double x) const;
    double h_in(double x) const;

    /// Same distribution with removal fraction 1 - (1 - p)(1 - extra).
    DegreeModel thinned(double extra_removal) const;

private:
    DegreeModel(Kind kind, double p);

    Kind kind_;
    double p_ = 0.0;
    double intact_mean_ = 0.0;
    double intact_in_mean_ = 0.0;
};

struct GeneratingFunctionValues {
    double g_out = 0.0;
    double g_in = 0.0;
    double h_out = 0.0;
    double h_in = 0.0;
};

/// Throws DomainError unless 0 <= x <= 1.
GeneratingFunctionValues evaluate_generating_functions(const DegreeModel& model, double x);

/// G_out'(1) of the (possibly thinned) model: k(1 - p).
double mean_degree(const DegreeModel& model);

/// Throws DomainError unless 0 <= p <= 1.
DegreeModel thin_model(const DegreeModel& model, double p);

enum class SolveMethod { fixed_point_iteration, bisection, degenerate };

std::string_view to_string(SolveMethod method);

/// Solution of the four coupled equations
///   w1 = H_out(w2^), w2 = 1 - H_out(1 - w1^), w1^ = H_in(w2), w2^ = 1 - H_in(1 - w1)
/// together with the driver fraction derived from it.
struct FixedPointSolution {
    double w1 = 0.0;
    double w2 = 0.0;
    double w1_hat = 0.0;
    double w2_hat = 0.0;
    /// Filled by the driver-fraction operations; NaN straight out of solve_fixed_point().
    double n_d = std::numeric_limits<double>::quiet_NaN();
    long iterations = 0;
    double residual = 0.0;
    SolveMethod method = SolveMethod::fixed_point_iteration;
};

inline constexpr double kFixedPointTolerance = 1e-12;
inline constexpr double kResidualTolerance = 1e-10;
inline constexpr long kMaxFixedPointIterations = 100000;

/// Solves the system through the reduction w1 = 1 - w2, w2^ = 1 - w1^, which
/// leaves the scalar equation x = H_out(1 - H_in(1 - x)) with x = 1 - w2.
///
/// The largest root is taken: fixed-point iteration from x = 1, falling back to
/// a downward bisection scan when the iteration stalls. Models with zero mean
/// degree are returned as `degenerate` without solving.
FixedPointSolution solve_fixed_point(const DegreeModel& model);

/// Residual (max norm) of the four equations at the given point.
double fixed_point_residual(const DegreeModel& model, const FixedPointSolution& s);

/// Driver fraction from the general generating-function expression, clamped to
/// [0, 1]. Zero mean degree yields n_d = 1.
FixedPointSolution driver_fraction_general(const DegreeModel& model);

/// Closed form for k-regular out-degree, Poisson in-degree, links removed
/// with probability p. k = 0 and p = 1 yield n_d = 1.
FixedPointSolution nd_closed_regular(int k, double p);

/// How the bi-modal closed form under link removal is evaluated.
enum class ExponentMode {
    /// e^{-k(1-p)(1-w2)} in every term; reduces to nd_closed_regular when k1 == k2.
    consistent,
    /// The thinned bi-modal expression as usually written: the G_out and
    /// last terms use e^{-k(1-w2)} while the +e term uses e^{-k(1-p)(1-w2)}.
    paper_literal,
    /// paper_literal with the last-term prefactor k instead of k(1-p); this is
    /// the variant behind the commonly quoted tabulated values.
    paper_table,
};

std::string_view to_string(ExponentMode mode);
/// Accepts "default"/"consistent", "paper-literal", "paper-table".
ExponentMode parse_exponent_mode(std::string_view name);

/// All modes coincide at p = 0. Accepts k1 == k2.
FixedPointSolution nd_closed_bimodal(int k1, int k2, double alpha, double p,
                                     ExponentMode mode = ExponentMode::consistent);

/// e^{-k(1-p)} with k the mean out-degree of the intact model.
double nd_asymptotic(const DegreeModel& model);

struct LegacyDriverFraction {
    double n_d = 0.0;         ///< half of the corrected closed form
    double asymptotic = 0.0;  ///< e^{-k} / 2
    double w2 = 0.0;
};

/// Earlier formula that assumes w1 = w2^ = 0; underestimates n_D by about 2x.
LegacyDriverFraction komareji_legacy_nd(int k);

}  // namespace swarmctl
