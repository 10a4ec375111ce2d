#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "swarmctl/analytic.hpp"
#include "swarmctl/errors.hpp"

using namespace swarmctl;

namespace {

constexpr double kTable = 1e-5;

TEST(GeneratingFunctions, RegularAtHalf) {
    const auto v = evaluate_generating_functions(DegreeModel::regular(2), 0.5);
    EXPECT_DOUBLE_EQ(v.g_out, 0.25);
    EXPECT_DOUBLE_EQ(v.h_out, 0.5);
    EXPECT_NEAR(v.g_in, std::exp(-1.0), 1e-15);
    EXPECT_NEAR(v.h_in, std::exp(-1.0), 1e-15);
    EXPECT_NEAR(v.g_in, 0.367879, 1e-6);
}

TEST(GeneratingFunctions, NormalizedAtOne) {
    const DegreeModel models[] = {
        DegreeModel::regular(1),          DegreeModel::regular(5, 0.3),
        DegreeModel::bimodal(1, 3, 0.25), DegreeModel::bimodal(2, 8, 0.5, 0.5),
        DegreeModel::tabulated({0.2, 0.3, 0.5}, {0.1, 0.5, 0.4}, 0.4),
    };
    for (const auto& m : models) {
        const auto v = evaluate_generating_functions(m, 1.0);
        EXPECT_NEAR(v.g_out, 1.0, 1e-15);
        EXPECT_NEAR(v.g_in, 1.0, 1e-15);
        EXPECT_NEAR(v.h_out, 1.0, 1e-15);
        EXPECT_NEAR(v.h_in, 1.0, 1e-15);
    }
}

TEST(GeneratingFunctions, ThinnedRegularAtZero) {
    const auto v = evaluate_generating_functions(DegreeModel::regular(4, 0.5), 0.0);
    EXPECT_DOUBLE_EQ(v.g_out, 0.0625);
    EXPECT_NEAR(v.g_in, std::exp(-2.0), 1e-15);
    EXPECT_NEAR(v.g_in, 0.135335, 1e-6);
}

TEST(GeneratingFunctions, BimodalAtZero) {
    const auto v = evaluate_generating_functions(DegreeModel::bimodal(1, 3, 0.5), 0.0);
    EXPECT_DOUBLE_EQ(v.g_out, 0.0);
    EXPECT_DOUBLE_EQ(v.h_out, 0.25);
}

TEST(GeneratingFunctions, RejectsOutsideUnitInterval) {
    const auto m = DegreeModel::regular(2);
    EXPECT_THROW(evaluate_generating_functions(m, -1e-9), DomainError);
    EXPECT_THROW(evaluate_generating_functions(m, 1.0 + 1e-9), DomainError);
    EXPECT_THROW(evaluate_generating_functions(m, std::nan("")), DomainError);
}

TEST(GeneratingFunctions, MeanDegreeIsDerivativeAtOne) {
    const DegreeModel models[] = {DegreeModel::regular(3), DegreeModel::regular(4, 0.5),
                                  DegreeModel::bimodal(2, 6, 0.75),
                                  DegreeModel::bimodal(1, 3, 0.25, 0.2)};
    for (const auto& m : models) {
        const double k = mean_degree(m);
        EXPECT_NEAR(oracle::derivative([&](double x) { return m.g_out(x); }, 1.0), k, 1e-8);
        EXPECT_NEAR(oracle::derivative([&](double x) { return m.g_in(x); }, 1.0), k, 1e-8);
        // H = G' / G'(1)
        for (double x : {0.2, 0.6}) {
            EXPECT_NEAR(oracle::derivative([&](double y) { return m.g_out(y); }, x) / k, m.h_out(x),
                        1e-8);
            EXPECT_NEAR(oracle::derivative([&](double y) { return m.g_in(y); }, x) / k, m.h_in(x),
                        1e-8);
        }
    }
}

TEST(MeanDegree, Values) {
    EXPECT_DOUBLE_EQ(mean_degree(DegreeModel::regular(3)), 3.0);
    EXPECT_DOUBLE_EQ(mean_degree(DegreeModel::regular(4, 0.5)), 2.0);
    EXPECT_DOUBLE_EQ(mean_degree(DegreeModel::bimodal(2, 6, 0.75)), 3.0);
}

TEST(DegreeModelValidation, RejectsBadParameters) {
    EXPECT_THROW(DegreeModel::regular(-1), ValidationError);
    EXPECT_THROW(DegreeModel::regular(2, 1.5), DomainError);
    EXPECT_THROW(DegreeModel::bimodal(2, 2, 0.5), ValidationError);
    EXPECT_THROW(DegreeModel::bimodal(0, 2, 0.5), ValidationError);
    EXPECT_THROW(DegreeModel::bimodal(1, 2, -0.1), DomainError);
    EXPECT_THROW(DegreeModel::tabulated({0.5, 0.4}, {0.5, 0.5}), ValidationError);
    EXPECT_THROW(DegreeModel::tabulated({0.5, 0.5}, {0.0, 0.0, 1.0}), ValidationError);
}

TEST(ThinModel, ZeroIsIdentity) {
    const auto m = DegreeModel::bimodal(2, 4, 0.5);
    const auto t = thin_model(m, 0.0);
    for (double x : {0.0, 0.1, 0.5, 0.9, 1.0}) {
        EXPECT_EQ(m.g_out(x), t.g_out(x));
        EXPECT_EQ(m.g_in(x), t.g_in(x));
        EXPECT_EQ(m.h_out(x), t.h_out(x));
        EXPECT_EQ(m.h_in(x), t.h_in(x));
    }
}

TEST(ThinModel, RegularSubstitution) {
    const auto t = thin_model(DegreeModel::regular(3), 0.3);
    for (double x : {0.0, 0.25, 0.8})
        EXPECT_NEAR(t.g_out(x), std::pow(0.3 + 0.7 * x, 3), 1e-15);
}

TEST(ThinModel, CompositionLaw) {
    const DegreeModel models[] = {DegreeModel::regular(3), DegreeModel::bimodal(2, 8, 0.25),
                                  DegreeModel::tabulated({0.1, 0.2, 0.7}, {0.2, 0.0, 0.8})};
    for (const auto& m : models) {
        const auto twice = thin_model(thin_model(m, 0.2), 0.25);
        const auto once = thin_model(m, 0.4);
        for (double x : {0.0, 0.3, 0.7, 1.0}) {
            EXPECT_NEAR(twice.g_out(x), once.g_out(x), 1e-12);
            EXPECT_NEAR(twice.g_in(x), once.g_in(x), 1e-12);
            EXPECT_NEAR(twice.h_out(x), once.h_out(x), 1e-12);
            EXPECT_NEAR(twice.h_in(x), once.h_in(x), 1e-12);
        }
    }
}

TEST(ThinModel, RejectsBadFraction) {
    EXPECT_THROW(thin_model(DegreeModel::regular(2), -0.1), DomainError);
    EXPECT_THROW(thin_model(DegreeModel::regular(2), 1.1), DomainError);
}

TEST(SolveFixedPoint, RegularOne) {
    const auto s = solve_fixed_point(DegreeModel::regular(1));
    EXPECT_NEAR(s.w1, 1.0, 1e-12);
    EXPECT_NEAR(s.w2, 0.0, 1e-12);
    EXPECT_NEAR(s.w1_hat, std::exp(-1.0), 1e-12);
    EXPECT_NEAR(s.w2_hat, 1.0 - std::exp(-1.0), 1e-12);
}

TEST(SolveFixedPoint, RegularTwoMatchesBisection) {
    const auto s = solve_fixed_point(DegreeModel::regular(2));
    const double root = static_cast<double>(
        oracle::largest_root([](oracle::Real x) { return 1 - std::exp(-2 * x); }));
    EXPECT_NEAR(root, 0.79681213002002, 1e-12);
    EXPECT_NEAR(1.0 - s.w2, root, 1e-10);
    EXPECT_NEAR(s.w1, root, 1e-10);
    EXPECT_LE(fixed_point_residual(DegreeModel::regular(2), s), kResidualTolerance);
}

TEST(SolveFixedPoint, ZeroDegreeIsDegenerate) {
    const auto s = solve_fixed_point(DegreeModel::regular(0));
    EXPECT_EQ(s.method, SolveMethod::degenerate);
    EXPECT_DOUBLE_EQ(driver_fraction_general(DegreeModel::regular(0)).n_d, 1.0);
    EXPECT_DOUBLE_EQ(nd_closed_regular(0, 0.0).n_d, 1.0);
    EXPECT_DOUBLE_EQ(nd_closed_regular(3, 1.0).n_d, 1.0);
}

TEST(SolveFixedPoint, ResidualsSmallOverGrid) {
    for (int k = 1; k <= 8; ++k)
        for (double p : {0.0, 0.2, 0.5, 0.9}) {
            const auto m = DegreeModel::regular(k, p);
            EXPECT_LE(fixed_point_residual(m, solve_fixed_point(m)), kResidualTolerance)
                << k << ' ' << p;
        }
}

TEST(SolveFixedPoint, NdIsNanBeforeDriverFraction) {
    EXPECT_TRUE(std::isnan(solve_fixed_point(DegreeModel::regular(3)).n_d));
}

TEST(DriverFractionGeneral, KnownValues) {
    EXPECT_NEAR(driver_fraction_general(DegreeModel::regular(1)).n_d, std::exp(-1.0), 1e-12);
    EXPECT_NEAR(driver_fraction_general(DegreeModel::regular(3)).n_d, 0.060759, kTable);
    EXPECT_NEAR(driver_fraction_general(DegreeModel::bimodal(4, 8, 0.5)).n_d, 0.002593, kTable);
}

TEST(DriverFractionGeneral, TabulatedEqualsRegular) {
    // Point-mass out-degree at 2 with a Poisson(2) in-degree truncated far out.
    std::vector<double> in(40);
    double term = std::exp(-2.0), sum = 0.0;
    for (std::size_t i = 0; i < in.size(); ++i) {
        in[i] = term;
        sum += term;
        term *= 2.0 / static_cast<double>(i + 1);
    }
    for (auto& v : in) v /= sum;
    const auto m = DegreeModel::tabulated({0.0, 0.0, 1.0}, in);
    EXPECT_NEAR(driver_fraction_general(m).n_d, nd_closed_regular(2, 0.0).n_d, 1e-9);
}

TEST(NdClosedRegular, TabulatedValues) {
    EXPECT_NEAR(nd_closed_regular(2, 0.0).n_d, 0.161903, kTable);
    EXPECT_NEAR(nd_closed_regular(4, 0.2).n_d, 0.050341, kTable);
    EXPECT_NEAR(nd_closed_regular(5, 0.5).n_d, 0.112696, kTable);
    EXPECT_NEAR(nd_closed_regular(1, 0.0).n_d, 0.367879, kTable);
}

TEST(NdClosedRegular, MatchesOracle) {
    EXPECT_NEAR(nd_closed_regular(2, 0.0).n_d, 0.161902559472979, 1e-12);
    EXPECT_NEAR(nd_closed_regular(3, 0.0).n_d, 0.0607591146109259, 1e-12);
    for (int k = 1; k <= 10; ++k)
        for (double p : {0.0, 0.1, 0.2, 0.5, 0.8})
            EXPECT_NEAR(nd_closed_regular(k, p).n_d,
                        static_cast<double>(oracle::regular_nd(k, p)), 1e-10)
                << k << ' ' << p;
}

TEST(NdClosedRegular, KOneCollapsesToExponential) {
    for (double p : {0.0, 0.2, 0.5})
        EXPECT_NEAR(nd_closed_regular(1, p).n_d, std::exp(-(1.0 - p)), 1e-12);
}

TEST(NdClosedRegular, RejectsBadArguments) {
    EXPECT_THROW(nd_closed_regular(-1, 0.0), DomainError);
    EXPECT_THROW(nd_closed_regular(2, -0.5), DomainError);
}

TEST(NdClosedBimodal, TabulatedIntactValues) {
    EXPECT_NEAR(nd_closed_bimodal(1, 3, 0.25, 0.0).n_d, 0.107746, kTable);
    EXPECT_NEAR(nd_closed_bimodal(2, 6, 0.5, 0.0).n_d, 0.022172, kTable);
}

TEST(NdClosedBimodal, TabulatedRemovalValueNeedsTableMode) {
    EXPECT_NEAR(nd_closed_bimodal(1, 3, 0.25, 0.2, ExponentMode::paper_table).n_d, 0.251484, kTable);
    EXPECT_NEAR(nd_closed_bimodal(1, 3, 0.25, 0.5, ExponentMode::paper_table).n_d, 0.541569, kTable);
}

TEST(NdClosedBimodal, ModesMatchOracle) {
    struct Case {
        int k1, k2;
        double alpha, p, consistent, literal, table;
    };
    const Case cases[] = {
        {1, 3, 0.25, 0.2, 0.180940755477075, 0.187540971738551, 0.251483785160188},
        {1, 3, 0.25, 0.5, 0.352193526111706, 0.380308274484918, 0.541568600026917},
        {2, 8, 0.25, 0.5, 0.0536297278457593, 0.0824615672489170, 0.101497301028593},
    };
    for (const auto& c : cases) {
        const auto consistent = nd_closed_bimodal(c.k1, c.k2, c.alpha, c.p).n_d;
        const auto literal =
            nd_closed_bimodal(c.k1, c.k2, c.alpha, c.p, ExponentMode::paper_literal).n_d;
        const auto table = nd_closed_bimodal(c.k1, c.k2, c.alpha, c.p, ExponentMode::paper_table).n_d;
        EXPECT_NEAR(consistent, c.consistent, 1e-12);
        EXPECT_NEAR(literal, c.literal, 1e-12);
        EXPECT_NEAR(table, c.table, 1e-12);
        EXPECT_NEAR(consistent, static_cast<double>(oracle::bimodal_nd(c.k1, c.k2, c.alpha, c.p)),
                    1e-10);
        EXPECT_NEAR(literal,
                    static_cast<double>(oracle::bimodal_nd_typeset(c.k1, c.k2, c.alpha, c.p, false)),
                    1e-10);
        EXPECT_NEAR(table,
                    static_cast<double>(oracle::bimodal_nd_typeset(c.k1, c.k2, c.alpha, c.p, true)),
                    1e-10);
    }
}

TEST(NdClosedBimodal, ModesCoincideWithoutRemoval) {
    for (auto mode : {ExponentMode::paper_literal, ExponentMode::paper_table})
        EXPECT_DOUBLE_EQ(nd_closed_bimodal(2, 6, 0.75, 0.0, mode).n_d,
                         nd_closed_bimodal(2, 6, 0.75, 0.0).n_d);
}

TEST(NdClosedBimodal, EqualDegreesReduceToRegular) {
    for (int k = 1; k <= 6; ++k)
        for (double alpha : {0.0, 0.3, 1.0})
            for (double p : {0.0, 0.2, 0.5})
                EXPECT_NEAR(nd_closed_bimodal(k, k, alpha, p).n_d, nd_closed_regular(k, p).n_d,
                            1e-12);
}

TEST(NdClosedBimodal, RejectsBadArguments) {
    EXPECT_THROW(nd_closed_bimodal(0, 3, 0.5, 0.0), DomainError);
    EXPECT_THROW(nd_closed_bimodal(1, 3, 1.5, 0.0), DomainError);
    EXPECT_THROW(nd_closed_bimodal(1, 3, 0.5, 2.0), DomainError);
}

TEST(ExponentModeNames, ParseAndPrint) {
    EXPECT_EQ(parse_exponent_mode("default"), ExponentMode::consistent);
    EXPECT_EQ(parse_exponent_mode("consistent"), ExponentMode::consistent);
    EXPECT_EQ(parse_exponent_mode("paper-literal"), ExponentMode::paper_literal);
    EXPECT_EQ(parse_exponent_mode("paper-table"), ExponentMode::paper_table);
    EXPECT_THROW(parse_exponent_mode("literal"), ValidationError);
    for (auto m : {ExponentMode::consistent, ExponentMode::paper_literal, ExponentMode::paper_table})
        EXPECT_EQ(parse_exponent_mode(to_string(m)), m);
}

TEST(NdAsymptotic, Values) {
    EXPECT_NEAR(nd_asymptotic(DegreeModel::regular(2)), 0.135335, kTable);
    EXPECT_NEAR(nd_asymptotic(DegreeModel::regular(1, 0.5)), 0.606531, kTable);
    EXPECT_NEAR(nd_asymptotic(DegreeModel::bimodal(1, 3, 0.25)), 0.082085, kTable);
}

TEST(Legacy, Values) {
    EXPECT_NEAR(komareji_legacy_nd(2).n_d, 0.0809512797364894, 1e-12);
    EXPECT_NEAR(komareji_legacy_nd(2).n_d, 0.5 * 0.161903, kTable);
    EXPECT_NEAR(komareji_legacy_nd(1).n_d, 0.183939720585721, 1e-12);
    EXPECT_NEAR(komareji_legacy_nd(3).asymptotic, 0.0248935341839320, 1e-12);
    for (int k = 1; k <= 8; ++k)
        EXPECT_NEAR(komareji_legacy_nd(k).n_d, static_cast<double>(oracle::legacy_nd(k)), 1e-10);
    EXPECT_THROW(komareji_legacy_nd(0), DomainError);
}

TEST(Monotonicity, DecreasingInKIncreasingInP) {
    for (double p : {0.0, 0.2, 0.5})
        for (int k = 1; k < 8; ++k)
            EXPECT_GT(nd_closed_regular(k, p).n_d, nd_closed_regular(k + 1, p).n_d);
    for (int k = 1; k <= 8; ++k) {
        EXPECT_LT(nd_closed_regular(k, 0.0).n_d, nd_closed_regular(k, 0.2).n_d);
        EXPECT_LT(nd_closed_regular(k, 0.2).n_d, nd_closed_regular(k, 0.5).n_d);
    }
}

}  // namespace
