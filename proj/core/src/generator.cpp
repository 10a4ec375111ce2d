#include "swarmctl/generator.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "swarmctl/errors.hpp"
#include "swarmctl/rng.hpp"

namespace swarmctl {

namespace {

constexpr std::uint64_t kDegreeStream = 0;
constexpr std::uint64_t kTargetStream = 1;

void require_fraction(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0))
        throw ValidationError(std::string(what) + " must lie in [0, 1], got " + std::to_string(v));
}

// Floyd's algorithm: k distinct values from [0, m), returned sorted.
std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t m, std::uint64_t k) {
    std::vector<std::uint64_t> chosen;
    chosen.reserve(k);
    if (k <= 32) {
        for (std::uint64_t j = m - k; j < m; ++j) {
            const std::uint64_t t = rng.below(j + 1);
            const bool seen = std::find(chosen.begin(), chosen.end(), t) != chosen.end();
            chosen.push_back(seen ? j : t);
        }
    } else {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(k * 2);
        for (std::uint64_t j = m - k; j < m; ++j) {
            const std::uint64_t t = rng.below(j + 1);
            const std::uint64_t v = seen.contains(t) ? j : t;
            seen.insert(v);
            chosen.push_back(v);
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace

void validate(const NetworkSpec& spec) {
    require_fraction(spec.removal_fraction, "removal fraction p");
    if (spec.n == 0) throw ValidationError("network needs at least one node");
    if (spec.n > std::size_t{0xffffffffu}) throw ValidationError("node count exceeds 32-bit ids");
    if (const auto* r = std::get_if<RegularDegree>(&spec.out_degree)) {
        if (r->k < 0) throw ValidationError("out-degree k must be >= 0");
        if (static_cast<std::size_t>(r->k) >= spec.n && r->k > 0)
            throw ValidationError("out-degree k = " + std::to_string(r->k) +
                                  " needs k < n = " + std::to_string(spec.n));
    } else {
        const auto& b = std::get<BimodalDegree>(spec.out_degree);
        if (b.k1 < 1 || b.k2 < 1) throw ValidationError("bi-modal degrees must both be >= 1");
        if (static_cast<std::size_t>(std::max(b.k1, b.k2)) >= spec.n)
            throw ValidationError("bi-modal degrees need max(k1, k2) < n = " +
                                  std::to_string(spec.n));
        require_fraction(b.alpha, "alpha");
    }
}

double nominal_mean_degree(const NetworkSpec& spec) {
    if (const auto* r = std::get_if<RegularDegree>(&spec.out_degree)) return r->k;
    const auto& b = std::get<BimodalDegree>(spec.out_degree);
    return b.alpha * b.k1 + (1.0 - b.alpha) * b.k2;
}

DirectedGraph sample_ssn(const NetworkSpec& spec) {
    validate(spec);
    const std::size_t n = spec.n;

    std::vector<int> degree(n);
    if (const auto* r = std::get_if<RegularDegree>(&spec.out_degree)) {
        std::fill(degree.begin(), degree.end(), r->k);
    } else {
        const auto& b = std::get<BimodalDegree>(spec.out_degree);
        const auto with_k1 = static_cast<std::size_t>(
            std::llround(b.alpha * static_cast<double>(n)));
        std::fill(degree.begin(), degree.begin() + static_cast<std::ptrdiff_t>(with_k1), b.k1);
        std::fill(degree.begin() + static_cast<std::ptrdiff_t>(with_k1), degree.end(), b.k2);
        Rng shuffle(derive_seed(spec.seed, kDegreeStream));
        for (std::size_t i = n; i > 1; --i) std::swap(degree[i - 1], degree[shuffle.below(i)]);
    }

    Rng rng(derive_seed(spec.seed, kTargetStream));
    std::vector<Edge> edges;
    std::size_t total = 0;
    for (int d : degree) total += static_cast<std::size_t>(d);
    edges.reserve(total);
    for (std::size_t u = 0; u < n; ++u) {
        const auto picks = sample_distinct(rng, n - 1, static_cast<std::uint64_t>(degree[u]));
        for (auto t : picks) {
            const auto target = static_cast<NodeId>(t >= u ? t + 1 : t);
            edges.push_back({static_cast<NodeId>(u), target});
        }
    }
    return DirectedGraph::build(n, std::move(edges));
}

std::size_t removal_count(std::size_t edge_count, double p) {
    const auto m = static_cast<std::size_t>(std::floor(p * static_cast<double>(edge_count) + 0.5));
    return std::min(m, edge_count);
}

DirectedGraph remove_links(const DirectedGraph& g, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("removal fraction must lie in [0, 1], got " + std::to_string(p));
    const std::size_t L = g.edge_count();
    const std::size_t m = removal_count(L, p);

    // Partial Fisher-Yates over edge indices; the first m are removed.
    std::vector<std::size_t> order(L);
    for (std::size_t i = 0; i < L; ++i) order[i] = i;
    Rng rng(seed);
    for (std::size_t i = 0; i < m; ++i) std::swap(order[i], order[i + rng.below(L - i)]);
    std::vector<char> removed(L, 0);
    for (std::size_t i = 0; i < m; ++i) removed[order[i]] = 1;

    std::vector<Edge> kept;
    kept.reserve(L - m);
    auto edges = g.edges();
    for (std::size_t i = 0; i < L; ++i)
        if (!removed[i]) kept.push_back(edges[i]);
    return DirectedGraph::build(g.node_count(), std::move(kept));
}

}  // namespace swarmctl
