#pragma once

// JSON documents exchanged by the command-line tool: nets of quadrics and
// command reports. Rationals are strings "num/den" in lowest terms
// (integers without a denominator) so exactness survives any JSON reader.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qnets/errors.hpp"
#include "qnets/exactalg/field.hpp"
#include "qnets/hodge/box_sum.hpp"
#include "qnets/nets/quadratic_form.hpp"

namespace qnets::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolkitVersion = "1.0.0";

/// Schema violations; the tool maps these to exit code 2.
class SchemaError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

inline Rational parse_rational(const std::string& s) {
    static const auto valid = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        bool slash = false, digit = false;
        for (; i < t.size(); ++i) {
            if (t[i] == '/' && !slash && digit) {
                slash = true;
                digit = false;
            } else if (t[i] >= '0' && t[i] <= '9') {
                digit = true;
            } else {
                return false;
            }
        }
        return digit;
    };
    if (!valid(s)) throw SchemaError("not an exact rational: \"" + s + "\"");
    Rational r;
    if (r.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw SchemaError("not an exact rational: \"" + s + "\"");
    if (sgn(r.get_den()) == 0) throw SchemaError("zero denominator in \"" + s + "\"");
    r.canonicalize();
    return r;
}

inline std::string format_rational(Rational r) {
    r.canonicalize();
    return r.get_str();
}

/// A net as stored on disk; Gram entries over F_p are residues 0..p-1.
struct NetDocument {
    int schema_version = kSchemaVersion;
    std::optional<std::uint64_t> prime;  // empty: the rationals
    int ambient_n = 0;
    std::array<Matrix<Rational>, 3> grams{Matrix<Rational>(1, 1, Rational(0)), Matrix<Rational>(1, 1, Rational(0)),
                                          Matrix<Rational>(1, 1, Rational(0))};
    Json metadata = Json::object();

    std::string field_name() const { return prime ? "F_" + std::to_string(*prime) : "Q"; }

    NetOfQuadrics<RationalField> rational_net() const {
        if (prime) throw InvalidInput("document is over F_p");
        const RationalField f;
        return {QuadraticForm<RationalField>(f, grams[0]), QuadraticForm<RationalField>(f, grams[1]),
                QuadraticForm<RationalField>(f, grams[2])};
    }

    NetOfQuadrics<PrimeField> prime_net() const {
        if (!prime) throw InvalidInput("document is over Q");
        const PrimeField f(*prime);
        std::vector<QuadraticForm<PrimeField>> q;
        for (std::size_t k = 0; k < 3; ++k) {
            Matrix<Fp> g(grams[k].rows(), grams[k].cols(), f.zero());
            for (std::size_t i = 0; i < g.rows(); ++i)
                for (std::size_t j = 0; j < g.cols(); ++j) {
                    auto r = reduce_mod(grams[k](i, j), f);
                    if (!r) throw SchemaError("entry has a denominator divisible by " + std::to_string(*prime));
                    g(i, j) = *r;
                }
            q.emplace_back(f, std::move(g));
        }
        return {q[0], q[1], q[2]};
    }

    friend bool operator==(const NetDocument& a, const NetDocument& b) {
        return a.schema_version == b.schema_version && a.prime == b.prime && a.ambient_n == b.ambient_n &&
               a.grams == b.grams && a.metadata == b.metadata;
    }
};

template <class F>
NetDocument make_net_document(const NetOfQuadrics<F>& net, Json metadata = Json::object()) {
    NetDocument doc;
    if constexpr (std::is_same_v<F, PrimeField>) doc.prime = net.field().p;
    doc.ambient_n = static_cast<int>(net.ambient_dim());
    for (std::size_t k = 0; k < 3; ++k) {
        Matrix<Rational> g(net.size(), net.size(), Rational(0));
        for (std::size_t i = 0; i < net.size(); ++i)
            for (std::size_t j = 0; j < net.size(); ++j) {
                if constexpr (std::is_same_v<F, PrimeField>) g(i, j) = Rational(static_cast<unsigned long>(net[k](i, j).value()));
                else g(i, j) = net[k](i, j);
            }
        doc.grams[k] = std::move(g);
    }
    doc.metadata = std::move(metadata);
    return doc;
}

inline Json to_json(const NetDocument& doc) {
    Json j;
    j["schema_version"] = doc.schema_version;
    if (doc.prime) j["field"] = Json{{"Fp", *doc.prime}};
    else j["field"] = "Q";
    j["ambient_N"] = doc.ambient_n;
    Json grams = Json::array();
    for (const auto& g : doc.grams) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < g.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(format_rational(g(i, c)));
            rows.push_back(std::move(row));
        }
        grams.push_back(std::move(rows));
    }
    j["grams"] = std::move(grams);
    j["metadata"] = doc.metadata;
    return j;
}

inline NetDocument parse_net_document(const Json& j) {
    if (!j.is_object()) throw SchemaError("net document must be a JSON object");
    for (const char* key : {"schema_version", "field", "ambient_N", "grams"})
        if (!j.contains(key)) throw SchemaError(std::string("missing key \"") + key + "\"");
    NetDocument doc;
    if (!j["schema_version"].is_number_integer() || j["schema_version"].get<int>() != kSchemaVersion)
        throw SchemaError("unsupported schema_version (expected 1)");
    const auto& field = j["field"];
    if (field.is_string() && field.get<std::string>() == "Q") {
        doc.prime.reset();
    } else if (field.is_object() && field.size() == 1 && field.contains("Fp") && field["Fp"].is_number_unsigned()) {
        const auto p = field["Fp"].get<std::uint64_t>();
        if (!is_prime(p)) throw SchemaError("field modulus " + std::to_string(p) + " is not prime");
        doc.prime = p;
    } else {
        throw SchemaError("field must be \"Q\" or {\"Fp\": p}");
    }
    if (!j["ambient_N"].is_number_integer() || j["ambient_N"].get<int>() < 1) throw SchemaError("ambient_N must be a positive integer");
    doc.ambient_n = j["ambient_N"].get<int>();
    const std::size_t n = static_cast<std::size_t>(doc.ambient_n) + 1;
    const auto& grams = j["grams"];
    if (!grams.is_array() || grams.size() != 3) throw SchemaError("grams must hold three matrices");
    for (std::size_t k = 0; k < 3; ++k) {
        const auto& rows = grams[k];
        if (!rows.is_array() || rows.size() != n) throw SchemaError("each Gram matrix must have N+1 rows");
        Matrix<Rational> g(n, n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (!rows[i].is_array() || rows[i].size() != n) throw SchemaError("each Gram matrix must have N+1 columns");
            for (std::size_t c = 0; c < n; ++c) {
                if (!rows[i][c].is_string()) throw SchemaError("Gram entries must be strings such as \"3/7\"");
                g(i, c) = parse_rational(rows[i][c].get<std::string>());
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t c = i + 1; c < n; ++c)
                if (g(i, c) != g(c, i)) throw SchemaError("Gram matrix " + std::to_string(k + 1) + " is not symmetric");
        if (doc.prime)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t c = 0; c < n; ++c)
                    if (g(i, c).get_den() != 1 || sgn(g(i, c)) < 0 || g(i, c) >= Rational(static_cast<unsigned long>(*doc.prime)))
                        throw SchemaError("entries over F_p must be residues 0..p-1");
        doc.grams[k] = std::move(g);
    }
    if (j.contains("metadata")) {
        if (!j["metadata"].is_object()) throw SchemaError("metadata must be an object");
        doc.metadata = j["metadata"];
    }
    return doc;
}

inline Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
}

/// FNV-1a 64-bit, hex.
inline std::string fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

struct ReportDocument {
    Json command = Json::array();  // argument echo
    std::string inputs_digest;
    Json results = Json::object();
    std::optional<std::uint64_t> seed;
    std::string toolkit_version = kToolkitVersion;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

inline Json to_json(const ReportDocument& r) {
    Json j;
    j["command"] = r.command;
    j["inputs_digest"] = r.inputs_digest;
    j["results"] = r.results;
    j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
    j["toolkit_version"] = r.toolkit_version;
    return j;
}

inline ReportDocument parse_report_document(const Json& j) {
    if (!j.is_object()) throw SchemaError("report must be a JSON object");
    for (const char* key : {"command", "inputs_digest", "results", "seed", "toolkit_version"})
        if (!j.contains(key)) throw SchemaError(std::string("report is missing \"") + key + "\"");
    ReportDocument r;
    r.command = j["command"];
    r.inputs_digest = j["inputs_digest"].get<std::string>();
    r.results = j["results"];
    if (!j["seed"].is_null()) r.seed = j["seed"].get<std::uint64_t>();
    r.toolkit_version = j["toolkit_version"].get<std::string>();
    return r;
}

/// Custom bundle specs: {"a": 6, "b": 7, "has_quotient": true, "lines": [[2,0],[2,0],[1,1]]}.
inline BundleSpec parse_bundle_spec(const Json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("lines"))
        throw SchemaError("bundle spec needs \"a\", \"b\" and \"lines\"");
    BundleSpec s;
    try {
        s.a = j["a"].get<int>();
        s.b = j["b"].get<int>();
        s.has_quotient = j.value("has_quotient", true);
        for (const auto& l : j["lines"]) {
            if (!l.is_array() || l.size() != 2) throw SchemaError("each line summand is a pair [d1, d2]");
            s.lines.emplace_back(l[0].get<int>(), l[1].get<int>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("bad bundle spec: ") + e.what());
    }
    return s;
}

inline Json to_json(const BundleSpec& s) {
    Json lines = Json::array();
    for (const auto& [d1, d2] : s.lines) lines.push_back(Json::array({d1, d2}));
    return Json{{"a", s.a}, {"b", s.b}, {"has_quotient", s.has_quotient}, {"lines", lines}};
}

}  // namespace qnets::cli
