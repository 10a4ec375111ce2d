#include <array>
#include <string>

#include "swarmctl/errors.hpp"
#include "swarmctl/experiment.hpp"

namespace swarmctl {

namespace {

NetworkSpec regular_spec(int k, double p) {
    NetworkSpec s;
    s.out_degree = RegularDegree{k};
    s.removal_fraction = p;
    return s;
}

NetworkSpec bimodal_spec(int k1, int k2, double alpha, double p) {
    NetworkSpec s;
    s.out_degree = BimodalDegree{k1, k2, alpha};
    s.removal_fraction = p;
    return s;
}

struct BimodalRow {
    int k1, k2;
    double alpha;
    double intact, removed_02, removed_05;
};

// Closed-form columns as tabulated (6 decimals).
constexpr std::array<double, 8> kRegularIntact = {0.367879, 0.161903, 0.060759, 0.020916,
                                                   0.007262, 0.002578, 0.000930, 0.000339};
constexpr std::array<double, 8> kRegularRemoved02 = {0.442926, 0.238827, 0.116278, 0.050341,
                                                      0.021143, 0.009002, 0.003902, 0.001714};
constexpr std::array<double, 8> kRegularRemoved05 = {0.584101, 0.410116, 0.279218, 0.183439,
                                                      0.112696, 0.065394, 0.037384, 0.021502};

constexpr std::array<BimodalRow, 18> kBimodal = {{
    {1, 3, 0.25, 0.107746, 0.251484, 0.541569},
    {1, 3, 0.50, 0.183062, 0.340662, 0.627028},
    {1, 3, 0.75, 0.273670, 0.431100, 0.709013},
    {2, 4, 0.25, 0.036402, 0.122113, 0.410770},
    {2, 4, 0.50, 0.063648, 0.183813, 0.476848},
    {2, 4, 0.75, 0.106955, 0.247667, 0.535501},
    {2, 6, 0.25, 0.007355, 0.033257, 0.299464},
    {2, 6, 0.50, 0.022172, 0.094631, 0.435961},
    {2, 6, 0.75, 0.071349, 0.216405, 0.514376},
    {2, 8, 0.25, 0.001555, 0.008650, 0.101497},
    {2, 8, 0.50, 0.007556, 0.037450, 0.406573},
    {2, 8, 0.75, 0.045382, 0.204397, 0.505728},
    {4, 6, 0.25, 0.004324, 0.020441, 0.163736},
    {4, 6, 0.50, 0.007293, 0.032167, 0.229064},
    {4, 6, 0.75, 0.012357, 0.050380, 0.288043},
    {4, 8, 0.25, 0.000931, 0.005504, 0.058532},
    {4, 8, 0.50, 0.002593, 0.013368, 0.135230},
    {4, 8, 0.75, 0.007354, 0.033187, 0.265665},
}};

std::vector<ReferenceRow> build(int table_id) {
    std::vector<ReferenceRow> rows;
    switch (table_id) {
        case 1:
            for (int k = 1; k <= 8; ++k) rows.push_back({regular_spec(k, 0.0), kRegularIntact[k - 1]});
            break;
        case 2:
            for (int k = 1; k <= 8; ++k) {
                rows.push_back({regular_spec(k, 0.2), kRegularRemoved02[k - 1]});
                rows.push_back({regular_spec(k, 0.5), kRegularRemoved05[k - 1]});
            }
            break;
        case 3:
            for (const auto& r : kBimodal)
                rows.push_back({bimodal_spec(r.k1, r.k2, r.alpha, 0.0), r.intact});
            break;
        case 4:
            for (const auto& r : kBimodal) {
                rows.push_back({bimodal_spec(r.k1, r.k2, r.alpha, 0.2), r.removed_02});
                rows.push_back({bimodal_spec(r.k1, r.k2, r.alpha, 0.5), r.removed_05});
            }
            break;
        default:
            throw ValidationError("table id must be 1..4, got " + std::to_string(table_id));
    }
    return rows;
}

}  // namespace

const std::vector<ReferenceRow>& reference_rows(int table_id) {
    static const std::array<std::vector<ReferenceRow>, 4> tables = {build(1), build(2), build(3),
                                                                    build(4)};
    if (table_id < 1 || table_id > 4)
        throw ValidationError("table id must be 1..4, got " + std::to_string(table_id));
    return tables[static_cast<std::size_t>(table_id - 1)];
}

}  // namespace swarmctl
