// kgraph: command-line front door for the toolkit. Talks to the core
// exclusively through the C API; JSON reports are the contract, the text
// format is a human summary of the same data.

#include <kgraph/kgraph_c.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kUsageError = 3;

struct SkeletonHandle {
    kg_skeleton* ptr = nullptr;
    ~SkeletonHandle() { kg_skeleton_free(ptr); }
};

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { kg_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct InputOptions {
    std::string file;
    std::string fixture;
    int m = -1;
    std::uint64_t seed = 0;
    // Every positional lands here; when --fixture is given they are all
    // command arguments, otherwise the first one is the input file.
    std::vector<std::string> positionals;

    std::vector<std::string> args() const {
        if (!fixture.empty()) return positionals;
        if (positionals.empty()) return {};
        return {positionals.begin() + 1, positionals.end()};
    }

    int resolve() {
        if (fixture.empty()) {
            if (positionals.empty()) {
                std::cerr << "error: give a skeleton file or --fixture\n";
                return kUsageError;
            }
            file = positionals.front();
        }
        return 0;
    }
};

struct OutputOptions {
    std::string format = "json";
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("args", in.positionals,
                    "skeleton JSON file (when no --fixture), then command arguments");
    cmd->add_option("--fixture", in.fixture, "built-in fixture: ex43|loops|free2|exchange3|random");
    cmd->add_option("--m", in.m, "fixture parameter (truncation / loops per color / size hint)");
    cmd->add_option("--seed", in.seed, "seed for seeded fixtures and sampled checks");
}

void add_format_flag(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "json|text")->check(CLI::IsMember({"json", "text"}));
}

int load_skeleton(InputOptions& in, SkeletonHandle& sk) {
    if (int rc = in.resolve()) return rc;
    OwnedString err;
    kg_status status;
    if (!in.fixture.empty()) {
        status = kg_skeleton_fixture(in.fixture.c_str(), in.m, in.seed, &sk.ptr, &err.ptr);
    } else {
        std::ifstream f(in.file);
        if (!f) {
            std::cerr << "error: cannot read '" << in.file << "'\n";
            return kUsageError;
        }
        std::stringstream buf;
        buf << f.rdbuf();
        std::string text = buf.str();
        status = kg_skeleton_from_json(text.c_str(), &sk.ptr, &err.ptr);
    }
    if (status != KG_OK) {
        std::cerr << (err.ptr ? err.str() : "{\"error\":\"load failed\"}") << "\n";
        return static_cast<int>(status);
    }
    return 0;
}

void print_text_summary(const json& j, const std::string& headline) {
    std::cout << headline << "\n";
    if (j.contains("error")) {
        std::cout << "  error: " << j["error"].get<std::string>() << "\n";
        return;
    }
    if (j.contains("valid")) {
        std::cout << "  valid: " << (j["valid"].get<bool>() ? "yes" : "no") << "\n";
        for (const auto& v : j.value("violations", json::array()))
            std::cout << "  violation: " << v.get<std::string>() << "\n";
        return;
    }
    if (j.contains("mce")) {
        std::cout << "  " << j["mce"].size() << " minimal common extension(s)\n";
        for (const auto& p : j["mce"]) std::cout << "    " << p.get<std::string>() << "\n";
        return;
    }
    if (j.contains("veeF")) {
        std::cout << "  closure of " << j["F"].size() << " path(s) has " << j["veeF"].size()
                  << " member(s)\n";
        for (const auto& p : j["veeF"]) std::cout << "    " << p.get<std::string>() << "\n";
        return;
    }
    if (j.contains("maxGeneratorMce")) {
        std::cout << "  max generator-pair MCE: " << j["maxGeneratorMce"];
        if (!j["argmax"].is_null())
            std::cout << "  (pair " << j["argmax"][0].get<std::string>() << ", "
                      << j["argmax"][1].get<std::string>() << ")";
        std::cout << "\n  max MCE up to bound " << j["bound"].get<std::string>() << ": "
                  << j["maxBoundedMce"] << "\n";
        return;
    }
    if (j.contains("relations")) {
        for (const auto& r : j["relations"]) {
            std::string rel = r["relation"].get<std::string>();
            std::cout << "  relation " << rel << ": " << r["status"].get<std::string>();
            if (r.contains("detail")) std::cout << "  [" << r["detail"].get<std::string>() << "]";
            std::cout << "\n";
        }
        int nica_bad = 0;
        for (const auto& r : j["nicaProducts"])
            if (r["status"] != "pass") ++nica_bad;
        std::cout << "  nica products: " << j["nicaProducts"].size() - nica_bad << "/"
                  << j["nicaProducts"].size() << " pass\n";
        int part_ok = 0;
        for (const auto& p : j["partitionChecks"])
            if (p["partitionHolds"].get<bool>() && p["rangeIdentitiesHold"].get<bool>()) ++part_ok;
        std::cout << "  partition identities: " << part_ok << "/" << j["partitionChecks"].size()
                  << " hold\n";
        int proj_ok = 0;
        for (const auto& p : j["projectionIdentities"])
            if (p["holds"].get<bool>()) ++proj_ok;
        std::cout << "  projection identities: " << proj_ok << "/"
                  << j["projectionIdentities"].size() << " hold\n";
        std::cout << "  status: " << j["status"].get<std::string>() << "\n";
        return;
    }
    if (j.contains("nonzero")) {
        std::cout << "  product nonzero: " << (j["nonzero"].get<bool>() ? "yes" : "no")
                  << " (support " << j["support"] << ")\n";
        if (!j["witness"].is_null())
            std::cout << "  witness: e_" << j["witness"].get<std::string>() << "\n";
        if (j.contains("avoidingPath")) {
            if (j["avoidingPath"].is_null()) {
                std::cout << "  avoiding path: none found\n";
            } else {
                std::cout << "  avoiding path: " << j["avoidingPath"].get<std::string>()
                          << (j["avoidingPathVerified"].get<bool>() ? " (verified)"
                                                                    : " (VERIFICATION FAILED)")
                          << "\n";
            }
        }
        std::cout << "  status: " << j["status"].get<std::string>() << "\n";
        return;
    }
    std::cout << j.dump(2) << "\n";
}

void print_report(const std::string& report, const OutputOptions& out,
                  const std::string& headline) {
    if (out.format == "json") {
        std::cout << report << "\n";
        return;
    }
    json j = json::parse(report, nullptr, false);
    if (j.is_discarded()) {
        std::cout << report << "\n";
        return;
    }
    print_text_summary(j, headline);
}

std::string read_all_or_literal(const std::string& arg) {
    // Accepts inline JSON or @file.
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream f(arg.substr(1));
        std::stringstream buf;
        buf << f.rdbuf();
        return buf.str();
    }
    return arg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kgraph: combinatorics and operator relations of product systems of graphs over N^k"};
    app.require_subcommand(1);

    InputOptions in;
    OutputOptions out;
    std::string bound;
    double tol = 1e-9;
    int samples = 10;

    auto* validate = app.add_subcommand("validate", "check skeleton axioms");
    add_input_flags(validate, in);
    add_format_flag(validate, out);

    auto* fixture = app.add_subcommand("fixture", "emit a built-in skeleton as JSON");
    add_input_flags(fixture, in);
    std::string out_file;
    fixture->add_option("--out", out_file, "write to file instead of stdout");

    auto* mce_cmd = app.add_subcommand("mce", "minimal common extensions of a pair of path literals");
    add_input_flags(mce_cmd, in);
    add_format_flag(mce_cmd, out);

    auto* vee_cmd = app.add_subcommand("vee", "closure of a finite set of path literals under MCEs");
    add_input_flags(vee_cmd, in);
    add_format_flag(vee_cmd, out);

    auto* align = app.add_subcommand("align", "finite-alignment statistics");
    add_input_flags(align, in);
    add_format_flag(align, out);
    align->add_option("--bound", bound, "degree bound a,b,... for the pair scan");

    auto* check = app.add_subcommand("check", "TCK relations, Nica products, partition identities");
    add_input_flags(check, in);
    add_format_flag(check, out);
    check->add_option("--bound", bound, "Fock truncation bound a,b,...");
    check->add_option("--tol", tol, "tolerance for norm reports")->check(CLI::PositiveNumber);
    check->add_option("--samples", samples, "sampled families for the partition suite");

    auto* faithful = app.add_subcommand("faithful", "faithfulness-hypothesis products");
    add_input_flags(faithful, in);
    add_format_flag(faithful, out);
    std::string vertex, sets_arg, gens_arg;
    faithful->add_option("--vertex", vertex, "vertex id")->required();
    faithful->add_option("--sets", sets_arg, "per-degree path sets as JSON or @file");
    faithful->add_option("--gens", gens_arg, "per-color generator sets as JSON or @file");
    faithful->add_option("--bound", bound, "Fock truncation bound a,b,...");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsageError;
    }

    if (fixture->parsed()) {
        if (in.fixture.empty()) {
            std::cerr << "error: fixture command needs --fixture\n";
            return kUsageError;
        }
        SkeletonHandle sk;
        if (int rc = load_skeleton(in, sk)) return rc;
        OwnedString text{kg_skeleton_to_json(sk.ptr)};
        if (!out_file.empty()) {
            std::ofstream f(out_file);
            f << text.str() << "\n";
        } else {
            std::cout << text.str() << "\n";
        }
        return 0;
    }

    if (validate->parsed()) {
        // Files are validated without keeping the handle so that invalid
        // documents still produce a structured report.
        if (in.fixture.empty()) {
            if (int rc = in.resolve()) return rc;
            std::ifstream f(in.file);
            if (!f) {
                std::cerr << "error: cannot read '" << in.file << "'\n";
                return kUsageError;
            }
            std::stringstream buf;
            buf << f.rdbuf();
            std::string text = buf.str();
            OwnedString report;
            kg_status status = kg_validate_json(text.c_str(), &report.ptr);
            print_report(report.str(), out, "validation");
            return static_cast<int>(status);
        }
        SkeletonHandle sk;
        if (int rc = load_skeleton(in, sk)) return rc;
        OwnedString text{kg_skeleton_to_json(sk.ptr)};
        OwnedString report;
        kg_status status = kg_validate_json(text.str().c_str(), &report.ptr);
        print_report(report.str(), out, "validation");
        return static_cast<int>(status);
    }

    SkeletonHandle sk;
    if (int rc = load_skeleton(in, sk)) return rc;
    const char* bound_arg = bound.empty() ? nullptr : bound.c_str();
    OwnedString report;
    kg_status status = KG_BAD_ARGUMENT;
    std::string headline;

    if (mce_cmd->parsed()) {
        auto pair = in.args();
        if (pair.size() != 2) {
            std::cerr << "error: mce needs exactly two path literals\n";
            return kUsageError;
        }
        status = kg_mce(sk.ptr, pair[0].c_str(), pair[1].c_str(), &report.ptr);
        headline = "mce(" + pair[0] + ", " + pair[1] + ")";
    } else if (vee_cmd->parsed()) {
        auto family = in.args();
        if (family.empty()) {
            std::cerr << "error: vee needs at least one path literal\n";
            return kUsageError;
        }
        std::vector<const char*> raw;
        for (const auto& s : family) raw.push_back(s.c_str());
        status = kg_vee(sk.ptr, raw.data(), static_cast<int>(raw.size()), &report.ptr);
        headline = "vee closure";
    } else if (align->parsed()) {
        status = kg_align(sk.ptr, bound_arg, &report.ptr);
        headline = "alignment statistics";
    } else if (check->parsed()) {
        status = kg_check(sk.ptr, bound_arg, tol, in.seed, samples, &report.ptr);
        headline = "check suite";
    } else if (faithful->parsed()) {
        std::string sets = read_all_or_literal(sets_arg);
        std::string gens = read_all_or_literal(gens_arg);
        status = kg_faithful(sk.ptr, vertex.c_str(), sets.empty() ? nullptr : sets.c_str(),
                             gens.empty() ? nullptr : gens.c_str(), bound_arg, &report.ptr);
        headline = "faithfulness hypothesis";
    }

    print_report(report.str(), out, headline);
    return static_cast<int>(status);
}
