// qnets: generate, analyze and tabulate nets of quadrics; Hodge numbers of
// their resolutions.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qnets/cli/commands.hpp"

namespace {

using namespace qnets;
using namespace qnets::cli;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

int emit(const CommandOutcome& o, const std::string& out_path) {
    write_output(out_path, to_json(o.report).dump(2) + "\n");
    return o.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nets of quadrics: discriminants, singular loci and Hodge numbers"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolkitVersion);

    Json echo = Json::array();
    for (int i = 1; i < argc; ++i) echo.push_back(argv[i]);

    std::string out_path;
    std::string row, field = "Q", net_path, spec_id, spec_json, rows_csv, corrupt;
    std::uint64_t seed = 1, tables_seed = 1, prop_seed = 1;
    std::size_t trials = 100;

    auto* gen = app.add_subcommand("gen", "Write a NetDocument realizing a table row");
    gen->add_option("--row", row, "Row id such as T1-1 or K3-27")->required();
    gen->add_option("--field", field, "Q or fp:<prime>")->capture_default_str();
    gen->add_option("--seed", seed, "Generator seed")->capture_default_str();
    gen->add_option("--out,-o", out_path, "Output path (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "Discriminant, multiplicities, singular locus and Proposition check");
    analyze->add_option("net", net_path, "NetDocument path (- for stdin)")->required();
    analyze->add_option("--out,-o", out_path, "Report path (default stdout)");

    auto* hodge = app.add_subcommand("hodge", "Hodge numbers of a zero locus in P^a x P^b");
    auto* spec_opt = hodge->add_option("--spec", spec_id, "Table row id or C8-SPLIT");
    auto* json_opt = hodge->add_option("--spec-json", spec_json, "Custom bundle spec file");
    spec_opt->excludes(json_opt);
    hodge->add_option("--out,-o", out_path, "Report path (default stdout)");

    auto* tables = app.add_subcommand("tables", "Reproduce the table rows");
    tables->add_option("--rows", rows_csv, "Comma-separated subset of rows");
    tables->add_option("--seed", tables_seed, "Generator seed")->capture_default_str();
    tables->add_option("--corrupt-expectation", corrupt, "Test mode: perturb one row's expected vector")->group("");
    tables->add_option("--out,-o", out_path, "Report path (default stdout)");

    auto* prop = app.add_subcommand("verify-prop", "Check the double-line Proposition on random normal-form nets");
    prop->add_option("--trials", trials, "Number of instances")->capture_default_str();
    prop->add_option("--seed", prop_seed, "First seed")->capture_default_str();
    prop->add_option("--out,-o", out_path, "Report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (gen->parsed()) {
            const auto doc = cmd_gen(parse_table_row(row), parse_field_option(field), seed);
            write_output(out_path, to_json(doc).dump(2) + "\n");
            return kOk;
        }
        if (analyze->parsed()) {
            const std::string text = net_path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : read_file(net_path);
            return emit(cmd_analyze(parse_net_document(parse_json_text(text)), echo), out_path);
        }
        if (hodge->parsed()) {
            if (!spec_id.empty()) {
                const auto id = parse_row_id(spec_id);
                if (!id) throw SchemaError("unknown spec \"" + spec_id + "\"");
                return emit(cmd_hodge(bundle_spec(*id), std::string(configuration(*id).name), echo), out_path);
            }
            if (spec_json.empty()) throw SchemaError("hodge needs --spec or --spec-json");
            return emit(cmd_hodge(parse_bundle_spec(parse_json_text(read_file(spec_json))), "", echo), out_path);
        }
        if (tables->parsed()) {
            TablesOptions opt;
            opt.seed = tables_seed;
            if (!rows_csv.empty()) {
                opt.rows.clear();
                std::stringstream ss(rows_csv);
                for (std::string item; std::getline(ss, item, ',');) opt.rows.push_back(parse_table_row(item));
            }
            if (!corrupt.empty()) opt.corrupt = parse_table_row(corrupt);
            return emit(cmd_tables(opt, echo), out_path);
        }
        if (prop->parsed()) return emit(cmd_verify_prop(trials, prop_seed, echo), out_path);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << error_kind(e) << ": " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << error_kind(e) << ": " << e.what() << "\n";
        return kDomain;
    } catch (const GenericityFailure& e) {
        std::cerr << "error: GenericityFailure: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}
