#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "swarmctl/errors.hpp"
#include "swarmctl/experiment.hpp"

namespace swarmctl {

namespace {

using nlohmann::json;

json optional_json(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}

std::optional<double> optional_double(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

json spec_json(const NetworkSpec& spec) {
    json j;
    j["n"] = spec.n;
    if (const auto* r = std::get_if<RegularDegree>(&spec.out_degree)) {
        j["kind"] = "regular";
        j["k"] = r->k;
    } else {
        const auto& b = std::get<BimodalDegree>(spec.out_degree);
        j["kind"] = "bimodal";
        j["k1"] = b.k1;
        j["k2"] = b.k2;
        j["alpha"] = b.alpha;
    }
    j["p"] = spec.removal_fraction;
    j["seed"] = spec.seed;
    return j;
}

NetworkSpec spec_parse(const json& j) {
    if (!j.is_object()) throw ValidationError("network spec must be a JSON object");
    NetworkSpec spec;
    const std::string kind = j.value("kind", std::string("regular"));
    if (kind == "regular") {
        spec.out_degree = RegularDegree{j.value("k", 1)};
    } else if (kind == "bimodal") {
        BimodalDegree b;
        b.k1 = j.value("k1", b.k1);
        b.k2 = j.value("k2", b.k2);
        b.alpha = j.value("alpha", b.alpha);
        spec.out_degree = b;
    } else {
        throw ValidationError("unknown network kind '" + kind + "'");
    }
    spec.n = j.value("n", std::size_t{0});
    spec.removal_fraction = j.value("p", 0.0);
    spec.seed = j.value("seed", std::uint64_t{0});
    return spec;
}

json row_json(const ScenarioResult& r) {
    json j;
    j["spec"] = spec_json(r.spec);
    j["replicas"] = r.replicas;
    j["mode"] = to_string(r.mode);
    if (r.simulation) {
        j["mean_n_d"] = r.simulation->mean_n_d;
        j["std_n_d"] = r.simulation->std_n_d;
        j["stderr"] = r.simulation->stderr_n_d;
    } else {
        j["mean_n_d"] = nullptr;
        j["std_n_d"] = nullptr;
        j["stderr"] = nullptr;
    }
    j["analytic_n_d"] = r.analytic_n_d;
    j["asymptotic_n_d"] = r.asymptotic_n_d;
    j["rel_error_closed"] = optional_json(r.rel_error_closed);
    j["rel_error_asym"] = optional_json(r.rel_error_asym);
    j["legacy_n_d"] = optional_json(r.legacy_n_d);
    j["analytic_paper_literal"] = optional_json(r.analytic_paper_literal);
    j["analytic_paper_table"] = optional_json(r.analytic_paper_table);
    j["reference_n_d"] = optional_json(r.reference_n_d);
    j["reference_matches"] = r.reference_matches;
    return j;
}

ScenarioResult row_parse(const json& j) {
    ScenarioResult r;
    r.spec = spec_parse(j.at("spec"));
    r.replicas = j.at("replicas").get<std::size_t>();
    r.mode = parse_exponent_mode(j.at("mode").get<std::string>());
    if (auto mean = optional_double(j, "mean_n_d")) {
        SimulationStats s;
        s.mean_n_d = *mean;
        s.std_n_d = optional_double(j, "std_n_d").value_or(0.0);
        s.stderr_n_d = optional_double(j, "stderr").value_or(0.0);
        r.simulation = s;
    }
    r.analytic_n_d = j.at("analytic_n_d").get<double>();
    r.asymptotic_n_d = j.at("asymptotic_n_d").get<double>();
    r.rel_error_closed = optional_double(j, "rel_error_closed");
    r.rel_error_asym = optional_double(j, "rel_error_asym");
    r.legacy_n_d = optional_double(j, "legacy_n_d");
    r.analytic_paper_literal = optional_double(j, "analytic_paper_literal");
    r.analytic_paper_table = optional_double(j, "analytic_paper_table");
    r.reference_n_d = optional_double(j, "reference_n_d");
    if (j.contains("reference_matches"))
        r.reference_matches = j.at("reference_matches").get<std::vector<std::string>>();
    return r;
}

json report_json(const ExperimentReport& report) {
    json j;
    j["id"] = report.id;
    j["provenance"] = {
        {"master_seed", report.provenance.master_seed},
        {"n", report.provenance.n},
        {"replicas", report.provenance.replicas},
        {"mode", to_string(report.provenance.mode)},
    };
    j["rows"] = json::array();
    for (const auto& r : report.rows) j["rows"].push_back(row_json(r));
    return j;
}

template <class F>
auto parse_document(const std::string& text, F&& f) {
    try {
        return f(json::parse(text));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed JSON document: ") + e.what());
    }
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fixed6(const std::optional<double>& v) { return v ? fixed6(*v) : std::string(); }

}  // namespace

std::string to_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "id,kind,n,k,k1,k2,alpha,p,replicas,mean_n_d,std,stderr,analytic,asymptotic,"
           "r_closed,r_asym,legacy,analytic_paper_literal,analytic_paper_table,reference,"
           "reference_match\n";
    for (const auto& r : report.rows) {
        out << report.id << ',';
        if (const auto* reg = std::get_if<RegularDegree>(&r.spec.out_degree)) {
            out << "regular," << r.spec.n << ',' << reg->k << ",,,,";
        } else {
            const auto& b = std::get<BimodalDegree>(r.spec.out_degree);
            out << "bimodal," << r.spec.n << ",," << b.k1 << ',' << b.k2 << ','
                << fixed6(b.alpha) << ',';
        }
        out << fixed6(r.spec.removal_fraction) << ',' << r.replicas << ',';
        if (r.simulation)
            out << fixed6(r.simulation->mean_n_d) << ',' << fixed6(r.simulation->std_n_d) << ','
                << fixed6(r.simulation->stderr_n_d) << ',';
        else
            out << ",,,";
        out << fixed6(r.analytic_n_d) << ',' << fixed6(r.asymptotic_n_d) << ','
            << fixed6(r.rel_error_closed) << ',' << fixed6(r.rel_error_asym) << ','
            << fixed6(r.legacy_n_d) << ',' << fixed6(r.analytic_paper_literal) << ','
            << fixed6(r.analytic_paper_table) << ',' << fixed6(r.reference_n_d) << ',';
        for (std::size_t i = 0; i < r.reference_matches.size(); ++i)
            out << (i ? ";" : "") << r.reference_matches[i];
        out << '\n';
    }
    return out.str();
}

std::string to_json(const ExperimentReport& report) { return report_json(report).dump(2); }

std::string to_json(const ScenarioResult& row) { return row_json(row).dump(2); }

std::string to_json(const NetworkSpec& spec) { return spec_json(spec).dump(2); }

ExperimentReport report_from_json(const std::string& text) {
    return parse_document(text, [](const json& j) {
        ExperimentReport report;
        report.id = j.at("id").get<std::string>();
        const auto& p = j.at("provenance");
        report.provenance.master_seed = p.at("master_seed").get<std::uint64_t>();
        report.provenance.n = p.at("n").get<std::size_t>();
        report.provenance.replicas = p.at("replicas").get<std::size_t>();
        report.provenance.mode = parse_exponent_mode(p.at("mode").get<std::string>());
        for (const auto& row : j.at("rows")) report.rows.push_back(row_parse(row));
        return report;
    });
}

ScenarioResult scenario_from_json(const std::string& text) {
    return parse_document(text, [](const json& j) { return row_parse(j); });
}

NetworkSpec spec_from_json(const std::string& text) {
    return parse_document(text, [](const json& j) { return spec_parse(j); });
}

}  // namespace swarmctl
