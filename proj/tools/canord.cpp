// Command-line front end: JSON germs and family parameters in, JSON and DOT out.

#include "canord/acceptance.hpp"
#include "canord/birgeom.hpp"
#include "canord/errors.hpp"
#include "canord/families.hpp"
#include "canord/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

using namespace canord;

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kSchema = 2, kUnsupported = 3, kVerification = 4 };

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("input is not valid JSON: ") + e.what());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write " + path);
    out << text;
}

void emit(const Json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) std::cout << text;
    else write_file(out_path, text);
}

struct FamilyArgs {
    std::string type;
    int n = 0;
    int e = 0;
    int l = 1;
    std::optional<int> a;
    std::string ade_type;
    std::string spec_file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--type", type, "Family type: A12xi, BLn, Bn, Ln, DLn, BDn, ADE, Anxi, NonGor, NonGorFixed");
        cmd->add_option("--n", n, "Family parameter n");
        cmd->add_option("--e", e, "Ramification parameter e");
        cmd->add_option("--l", l, "Root of unity exponent l, coprime to e");
        cmd->add_option("--a", a, "Central character exponent for Ln, DLn and BDn");
        cmd->add_option("--adeType,--ade-type", ade_type, "Kleinian type such as A2, D4 or E6");
        cmd->add_option("--spec", spec_file, "Family parameters as a JSON document");
    }

    FamilySpec spec() const {
        if (!spec_file.empty()) return family_spec_from_json(parse_json(read_input(spec_file)));
        if (type.empty()) throw SchemaError("--type or --spec is required");
        FamilySpec s;
        s.tag = parse_tag(type);
        s.n = n;
        s.e = e;
        s.l = l;
        s.a = a;
        s.ade_type = ade_type;
        return s;
    }
};

int run_guarded(const std::function<int()>& body) {
    auto fail = [](int code, const std::string& kind, const std::string& msg) {
        std::cout << error_report(kind, msg).dump(2) << "\n";
        std::cerr << "canord: " << msg << "\n";
        return code;
    };
    try {
        return body();
    } catch (const SchemaError& e) {
        return fail(kSchema, "schema", e.what());
    } catch (const UnsupportedError& e) {
        return fail(kUnsupported, "unsupported", e.what());
    } catch (const VerificationError& e) {
        return fail(kVerification, "verification", e.what());
    } catch (const std::exception& e) {
        return fail(kFailure, "internal", e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical orders toolkit"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);

    std::string input, out_path, dot_path;
    unsigned workers = 0;
    FamilyArgs fam_check, fam_quiver;

    auto* classify_cmd = app.add_subcommand("classify", "Classify a decorated germ by its discrepancy");
    classify_cmd->add_option("germ", input, "Germ JSON file, or - for stdin")->default_val("-");
    classify_cmd->add_option("--out", out_path, "Write the report to a file");

    auto* resolve_cmd = app.add_subcommand("resolve", "Minimal resolution of a canonical germ");
    resolve_cmd->add_option("germ", input, "Germ JSON file, or - for stdin")->default_val("-");
    resolve_cmd->add_option("--dot", dot_path, "Write the dual graph in DOT format");
    resolve_cmd->add_option("--out", out_path, "Write the report to a file");

    auto* family_cmd = app.add_subcommand("family-check", "Verify a family of the classification");
    fam_check.attach(family_cmd);
    family_cmd->add_option("--out", out_path, "Write the report to a file");

    auto* quiver_cmd = app.add_subcommand("quiver", "McKay quiver with AR translation of a family");
    fam_quiver.attach(quiver_cmd);
    quiver_cmd->add_option("--dot", dot_path, "Write the quiver in DOT format");
    quiver_cmd->add_option("--out", out_path, "Write the report to a file");

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest_cmd->add_option("--workers", workers, "Worker threads for family checks (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << error_report("schema", e.what()).dump(2) << "\n";
        std::cerr << "canord: " << e.what() << "\n";
        return kSchema;
    }

    if (*classify_cmd) {
        return run_guarded([&] {
            const GermConfig g = germ_from_json(parse_json(read_input(input)));
            emit(classification_report(g, classify(g)), out_path);
            return kOk;
        });
    }
    if (*resolve_cmd) {
        return run_guarded([&] {
            const GermConfig g = germ_from_json(parse_json(read_input(input)));
            const ResolutionConfig cfg = minimal_resolution(g);
            Json report = resolution_report(g, cfg);
            report["fourCase"] = Json::array();
            for (const auto& fc : four_case_check(cfg)) report["fourCase"].push_back({{"id", fc.id}, {"cell", fc.cell}});
            report["shapeOk"] = expcurve_shape_check(cfg);
            const TypeMatch t = recognize_type(g);
            report["type"] = {{"tag", t.tag}, {"n", t.n}, {"e", t.e}, {"adeType", t.ade_type}};
            if (!dot_path.empty()) write_file(dot_path, resolution_to_dot(cfg));
            emit(report, out_path);
            return kOk;
        });
    }
    if (*family_cmd) {
        return run_guarded([&] {
            const FamilySpec s = fam_check.spec();
            const FamilyReport r = check_family(build(s));
            emit(family_report(s, r), out_path);
            return r.ok() ? kOk : kVerification;
        });
    }
    if (*quiver_cmd) {
        return run_guarded([&] {
            const FamilySpec s = fam_quiver.spec();
            const Quiver q = family_quiver(build(s));
            Json report = quiver_report(s, q);
            if (!dot_path.empty()) write_file(dot_path, quiver_to_dot(q, "AR"));
            emit(report, out_path);
            return kOk;
        });
    }
    return run_guarded([&] {
        bool all = true;
        for (const auto& r : run_acceptance(workers)) {
            std::cout << format_result(r) << std::endl;
            all = all && r.pass;
        }
        return all ? kOk : kVerification;
    });
}
