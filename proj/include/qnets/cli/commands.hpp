#pragma once

// The commands behind the qnets tool, as library calls returning a report
// and an exit code. Exit codes: 0 success, 1 internal error, 2 usage or
// schema, 3 domain assumption violated, 4 table mismatch.

#include <string>
#include <vector>

#include "qnets/cli/documents.hpp"
#include "qnets/concurrency.hpp"
#include "qnets/hodge/zero_locus.hpp"
#include "qnets/nets/discriminant.hpp"
#include "qnets/nets/instances.hpp"
#include "qnets/nets/proposition.hpp"
#include "qnets/nets/singular_locus.hpp"

namespace qnets::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kDomain = 3, kMismatch = 4 };

struct CommandOutcome {
    int exit_code = kOk;
    ReportDocument report;
};

inline std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const ConeCase*>(&e)) return "ConeCase";
    if (dynamic_cast<const DegenerateNet*>(&e)) return "DegenerateNet";
    if (dynamic_cast<const NotNormalForm*>(&e)) return "NotNormalForm";
    if (dynamic_cast<const NotApplicable*>(&e)) return "NotApplicable";
    if (dynamic_cast<const EmptyCenter*>(&e)) return "EmptyCenter";
    if (dynamic_cast<const AssumptionViolated*>(&e)) return "AssumptionViolated";
    if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
    if (dynamic_cast<const GenericityFailure*>(&e)) return "GenericityFailure";
    if (dynamic_cast<const SingularInterpolationSystem*>(&e)) return "SingularInterpolationSystem";
    if (dynamic_cast<const OddDegree*>(&e)) return "OddDegree";
    if (dynamic_cast<const InvalidSpec*>(&e)) return "InvalidSpec";
    if (dynamic_cast<const SchemaError*>(&e)) return "SchemaError";
    if (dynamic_cast<const InvalidInput*>(&e)) return "InvalidInput";
    return "InternalError";
}

inline Json error_json(const std::exception& e) { return Json{{"kind", error_kind(e)}, {"message", e.what()}}; }

/// Small integers as JSON numbers, anything larger as a decimal string.
inline Json big(const BigInt& v) { return v.fits_slong_p() ? Json(v.get_si()) : Json(v.get_str()); }

/// "Q" (or "q") for the rationals, "fp:P" / "Fp:P" for a prime field.
inline std::optional<std::uint64_t> parse_field_option(const std::string& s) {
    if (s == "Q" || s == "q") return std::nullopt;
    const auto colon = s.find(':');
    if (colon != std::string::npos) {
        std::string head = s.substr(0, colon);
        for (auto& c : head) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        const std::string tail = s.substr(colon + 1);
        if (head == "fp" && !tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos && tail.size() < 19) {
            const std::uint64_t p = std::stoull(tail);
            if (!is_prime(p)) throw SchemaError("field modulus " + tail + " is not prime");
            return p;
        }
    }
    throw SchemaError("field must be Q or fp:<prime>, got \"" + s + "\"");
}

inline RowId parse_table_row(const std::string& s) {
    const auto id = parse_row_id(s);
    if (!id || !configuration(*id).is_table_row()) throw SchemaError("unknown table row \"" + s + "\"");
    return *id;
}

// gen ------------------------------------------------------------------------

inline NetDocument cmd_gen(RowId row, std::optional<std::uint64_t> prime, std::uint64_t seed) {
    Json meta{{"row", std::string(configuration(row).name)}, {"seed", seed}, {"generator", "generate_instance"}};
    if (prime) return make_net_document(generate_instance(row, PrimeField(*prime), seed), meta);
    return make_net_document(generate_instance(row, RationalField{}, seed), meta);
}

// analyze --------------------------------------------------------------------

namespace detail {

template <class F>
Json proposition_json(const NetOfQuadrics<F>& net) {
    NetOfQuadrics<F> normal = net;
    bool normalized = false;
    try {
        require_proposition_normal_form(net);
    } catch (const NotNormalForm&) {
        normal = normalize_vertex(net).first;
        normalized = true;
    }
    const auto res = verify_proposition(normal);
    Json j{{"applicable", true},
           {"normalized", normalized},
           {"multiplicity", res.multiplicity},
           {"residual_degree", res.residual.degree()},
           {"residual_verdict", res.residual_smooth.kind_name()}};
    if (res.residual_smooth.kind != SmoothnessVerdict::Kind::Inconclusive) j["prime"] = res.residual_smooth.prime;
    if (res.residual_smooth.kind == SmoothnessVerdict::Kind::SingularModP)
        j["witness"] = Json::array({res.residual_smooth.witness[0], res.residual_smooth.witness[1], res.residual_smooth.witness[2]});
    return j;
}

template <class F>
CommandOutcome analyze_net(const NetOfQuadrics<F>& net, ReportDocument report) {
    Json& r = report.results;
    r["field"] = net.field().name();
    r["ambient_N"] = net.ambient_dim();
    Json kernels = Json::array();
    for (std::size_t i = 0; i < 3; ++i) kernels.push_back(kernel(net[i]).dim());
    r["kernel_dims"] = kernels;
    // Classification first: a cone is reported as such rather than through
    // its identically vanishing discriminant.
    std::optional<Json> error;
    try {
        const auto cls = classify_row(net);
        r["classification"] = cls.name();
        const auto model = singular_locus_model(net);
        r["singular_locus"] = Json{{"label", to_string(model.label)},
                                   {"k_dim", model.k_dim},
                                   {"orders", Json::array({model.orders[0], model.orders[1], model.orders[2]})},
                                   {"restricted_ranks", model.restricted_ranks}};
        if (cls.kind == RowClassification::Kind::Row && cls.row == RowId::T1_1) {
            try {
                r["proposition"] = proposition_json(net);
            } catch (const DomainError& e) {
                r["proposition"] = Json{{"applicable", false}, {"reason", e.what()}};
            }
        } else {
            r["proposition"] = Json{{"applicable", false}, {"reason", "only one-point singular loci of the first table row"}};
        }
    } catch (const DomainError& e) {
        error = error_json(e);
    }
    try {
        const auto disc = discriminant_curve(net);
        Json coeffs = Json::array();
        for (const auto& c : disc.coefficients()) coeffs.push_back(to_string(c));
        r["discriminant"] = Json{{"degree", disc.degree()}, {"order", "graded-lex l1>l2>l3"}, {"coefficients", coeffs}};
        const auto mult = coordinate_line_multiplicities(disc);
        r["line_multiplicities"] = Json::array({mult[0], mult[1], mult[2]});
    } catch (const DomainError& e) {
        if (!error) error = error_json(e);
    }
    if (error) {
        r["error"] = *error;
        return {kDomain, std::move(report)};
    }
    return {kOk, std::move(report)};
}

}  // namespace detail

inline CommandOutcome cmd_analyze(const NetDocument& doc, Json command) {
    ReportDocument report;
    report.command = std::move(command);
    report.inputs_digest = fnv1a64(to_json(doc).dump());
    if (doc.metadata.contains("seed") && doc.metadata["seed"].is_number_unsigned()) report.seed = doc.metadata["seed"].get<std::uint64_t>();
    if (doc.prime) return detail::analyze_net(doc.prime_net(), std::move(report));
    return detail::analyze_net(doc.rational_net(), std::move(report));
}

// hodge ----------------------------------------------------------------------

inline Json middle_json(const MiddleVector& m) {
    return Json{{"vector", Json::array({big(m.values[0]), big(m.values[1]), big(m.values[2])})}, {"ambiguous", m.ambiguous}};
}

inline Json diamond_json(const HodgeDiamond& d) {
    Json rows = Json::array();
    for (const auto& row : d.rows) {
        Json h = Json::array();
        for (int q = 0; q <= d.dim; ++q) h.push_back(big(row.dim(q)));
        rows.push_back(Json{{"p", row.p}, {"h", h}, {"ambiguous_q", row.ambiguous}, {"euler_p", big(row.euler_p)}});
    }
    Json j{{"dim_Y", d.dim}, {"rows", rows}, {"euler_characteristic", big(d.euler_characteristic())},
           {"any_ambiguous", d.any_ambiguous()}};
    if (d.dim % 2 == 0 && d.dim >= 2) {
        j["middle"] = middle_json(middle_vector(d));
        j["k3_type"] = is_k3_type(d);
    }
    return j;
}

/// `label` names a table spec, or is empty for a custom spec.
inline CommandOutcome cmd_hodge(const BundleSpec& spec, const std::string& label, Json command) {
    ReportDocument report;
    report.command = std::move(command);
    const Json spec_json = to_json(spec);
    report.inputs_digest = fnv1a64(spec_json.dump());
    Json& r = report.results;
    r["spec"] = label.empty() ? Json("custom") : Json(label);
    r["bundle"] = spec_json;
    const auto d = hodge_diamond(spec);
    r["hodge"] = diamond_json(d);
    if (!label.empty()) {
        const auto& e = configuration(*parse_row_id(label)).expected_h4;
        r["expected_middle"] = Json::array({e[0], e[1], e[2]});
    }
    r["metadata"] = Json{{"convention", "full h^{p,q} of the zero locus (not primitive cohomology)"},
                         {"ambiguity", "ambiguous_q lists levels resting on a differential that degree, symmetry and Euler "
                                       "arguments do not determine; the reported value assumes degeneration"}};
    return {kOk, std::move(report)};
}

// tables ---------------------------------------------------------------------

struct TablesOptions {
    std::vector<RowId> rows = table_rows();
    std::uint64_t seed = 1;
    std::optional<RowId> corrupt;  // test mode: perturb this row's expected H^4 vector
};

inline CommandOutcome cmd_tables(const TablesOptions& opt, Json command) {
    ReportDocument report;
    report.command = std::move(command);
    report.seed = opt.seed;
    std::string digest_input;
    for (RowId id : opt.rows) digest_input += std::string(configuration(id).name) + ";";
    report.inputs_digest = fnv1a64(digest_input + std::to_string(opt.seed));
    Json rows = Json::array();
    int passed = 0;
    for (RowId id : opt.rows) {
        const auto& cfg = configuration(id);
        auto expected = cfg.expected_h4;
        if (opt.corrupt == id) expected[1] += 1;
        Json row{{"row", std::string(cfg.name)}};
        Json diffs = Json::array();
        try {
            const auto net = generate_instance(id, RationalField{}, opt.seed);
            const auto cls = classify_row(net);
            const auto model = singular_locus_model(net);
            row["classification"] = cls.name();
            row["singular_locus"] = to_string(model.label);
            row["expected_singular_locus"] = to_string(*cfg.expected_singular_label);
            row["discriminant_degree"] = discriminant_curve(net).degree();
            if (!(cls.kind == RowClassification::Kind::Row && cls.row == id))
                diffs.push_back("classification " + cls.name() + " != " + std::string(cfg.name));
            if (model.label != *cfg.expected_singular_label)
                diffs.push_back("singular locus " + to_string(model.label) + " != " + to_string(*cfg.expected_singular_label));
        } catch (const Error& e) {
            row["error"] = error_json(e);
            diffs.push_back(std::string("analysis failed: ") + e.what());
        }
        const auto mv = middle_vector(hodge_diamond(bundle_spec(id)));
        row["h4"] = middle_json(mv);
        row["expected_h4"] = Json::array({expected[0], expected[1], expected[2]});
        for (std::size_t i = 0; i < 3; ++i)
            if (mv.values[i] != expected[i]) {
                diffs.push_back("h4 " + Json::array({big(mv.values[0]), big(mv.values[1]), big(mv.values[2])}).dump() +
                                " != " + row["expected_h4"].dump());
                break;
            }
        if (mv.ambiguous) diffs.push_back("h4 rests on an undetermined differential (ambiguous)");
        row["diffs"] = diffs;
        row["status"] = diffs.empty() ? "PASS" : "FAIL";
        passed += diffs.empty();
        rows.push_back(std::move(row));
    }
    report.results = Json{{"rows", rows}, {"passed", passed}, {"total", opt.rows.size()}};
    return {passed == static_cast<int>(opt.rows.size()) ? kOk : kMismatch, std::move(report)};
}

// verify-prop ----------------------------------------------------------------

struct PropTrial {
    std::uint64_t seed = 0;
    unsigned multiplicity = 0;
    unsigned residual_degree = 0;
    std::string verdict;
    std::string error;
};

inline CommandOutcome cmd_verify_prop(std::size_t trials, std::uint64_t seed, Json command) {
    ReportDocument report;
    report.command = std::move(command);
    report.seed = seed;
    report.inputs_digest = fnv1a64("verify-prop;" + std::to_string(trials) + ";" + std::to_string(seed));
    std::vector<PropTrial> out(trials);
    parallel_for(trials, [&](std::size_t i) {
        PropTrial& t = out[i];
        t.seed = seed + i;
        try {
            const auto net = generate_instance(RowId::T1_1, RationalField{}, t.seed, 5);
            const auto res = verify_proposition(net);
            t.multiplicity = res.multiplicity;
            t.residual_degree = res.residual.degree();
            t.verdict = res.residual_smooth.kind_name();
        } catch (const Error& e) {
            t.error = error_kind(e) + ": " + e.what();
        }
    });
    std::size_t mult2 = 0, deg6 = 0, smooth = 0;
    Json failures = Json::array();
    for (const auto& t : out) {
        mult2 += t.error.empty() && t.multiplicity == 2;
        deg6 += t.error.empty() && t.residual_degree == 6;
        smooth += t.error.empty() && t.verdict == "SmoothCertified";
        if (!t.error.empty() || t.multiplicity != 2 || t.residual_degree != 6 || t.verdict != "SmoothCertified")
            failures.push_back(Json{{"seed", t.seed}, {"multiplicity", t.multiplicity}, {"residual_degree", t.residual_degree},
                                    {"verdict", t.verdict}, {"error", t.error}});
    }
    report.results = Json{{"trials", trials}, {"multiplicity_two", mult2}, {"residual_degree_six", deg6},
                          {"smooth_certified", smooth}, {"exceptions", failures}, {"entry_box", 5}};
    return {kOk, std::move(report)};
}

}  // namespace qnets::cli
