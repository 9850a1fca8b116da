#include "homwb/dsl/spec.hpp"
#include "homwb/dsl/workbench.hpp"
#include "homwb/random.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw homwb::InputError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int emit(const homwb::dsl::Report& r, const std::string& out) {
    if (out.empty()) {
        std::cout << r.to_json();
        return r.exit_code;
    }
    try {
        homwb::dsl::emit_report(r, out);
    } catch (const homwb::Error& e) {
        std::cerr << "homwb: " << e.what() << "\n";
        return 2;
    }
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    using namespace homwb;
    CLI::App app{"homology workbench"};
    app.require_subcommand(1);

    std::string file, out, coeff, window, flavor, command = "validate";
    std::uint64_t seed = 0;
    bool timing = false;

    auto* run = app.add_subcommand("run", "run the command of a workbench file and print a JSON report");
    run->add_option("file", file, "workbench file")->required();
    run->add_option("--coeff", coeff, "Z, Z/m or Zmod<m>");
    run->add_option("--window", window, "degree window a..b");
    run->add_option("--flavor", flavor, "core,homotopy,cd");
    run->add_option("--out", out, "write the report here instead of stdout");
    auto* seed_opt = run->add_option("--seed", seed, "recorded in the report");
    run->add_flag("--timing", timing, "add wall-clock time to the report");

    auto* print = app.add_subcommand("print", "parse a workbench file and print it canonically");
    print->add_option("file", file, "workbench file")->required();

    auto* rnd = app.add_subcommand("random", "print a random workbench file");
    rnd->add_option("--seed", seed, "generator seed");
    rnd->add_option("--command", command, "validate, cellular, spectral or end-algebra")
        ->check(CLI::IsMember({"validate", "cellular", "spectral", "end-algebra"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*print) {
        try {
            std::cout << dsl::print(dsl::parse(read_file(file)));
            return 0;
        } catch (const Error& e) {
            std::cerr << "homwb: " << e.what() << "\n";
            return 2;
        }
    }

    if (*rnd) {
        random::Rng rng(seed);
        const auto kind = command == "cellular"      ? dsl::CommandStmt::Kind::Cellular
                          : command == "spectral"    ? dsl::CommandStmt::Kind::Spectral
                          : command == "end-algebra" ? dsl::CommandStmt::Kind::EndAlgebra
                                                     : dsl::CommandStmt::Kind::Validate;
        std::cout << dsl::print(random::spec(rng, kind));
        return 0;
    }

    dsl::Report report;
    std::string text;
    try {
        text = read_file(file);
        dsl::RunOptions opts;
        if (!coeff.empty()) opts.modulus = dsl::parse_coefficient(coeff);
        if (!window.empty()) opts.window = dsl::parse_window(window);
        if (!flavor.empty()) opts.flavors = logic::Flavors::parse(flavor);
        if (*seed_opt) opts.seed = seed;
        opts.timing = timing;
        report = dsl::run(dsl::parse(text), text, opts);
    } catch (const Error& e) {
        report = dsl::Report{};
        report.command = "run";
        if (!text.empty()) report.input_digest = dsl::digest(text);
        report.exit_code = 2;
        report.notes.push_back(e.what());
    }
    return emit(report, out);
}
