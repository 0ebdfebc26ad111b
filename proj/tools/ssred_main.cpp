#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ssred/cli/cli.hpp"

int main(int argc, char** argv) {
    using namespace ssred::cli;
    CLI::App app{"Semisimplification of matrix representations over exact fields"};
    app.require_subcommand(1);

    Options opts;
    std::string input, inputB, mPath, hPath, outPath;

    auto addCommon = [&](CLI::App* sub) {
        sub->add_option("--out", outPath, "Write the JSON report here instead of stdout");
        sub->add_option("--max-group-order", opts.maxGroupOrder, "Upper bound for group enumeration");
    };

    auto* check = app.add_subcommand("check", "Decide complete reducibility over the base field");
    check->add_option("--input", input, "Representation file")->required();
    check->add_flag("--oracle", opts.oracle, "Cross-check against the brute-force orbit oracle");
    addCommon(check);

    auto* ss = app.add_subcommand("ss", "Semisimplify along a composition flag");
    ss->add_option("--input", input, "Representation file")->required();
    ss->add_option("--seed", opts.seed, "Seed for the composition series");
    addCommon(ss);

    auto* conj = app.add_subcommand("conjugacy", "Certify that two semisimplifications are conjugate");
    conj->add_option("--input", input, "Representation file")->required();
    conj->add_option("--input-b", inputB, "Second file with the same generators");
    conj->add_option("--seed-a", opts.seed, "Seed for the first semisimplification");
    conj->add_option("--seed-b", opts.seedB, "Seed for the second semisimplification");
    addCommon(conj);

    auto* cliff = app.add_subcommand("clifford", "Semisimplify a normal subgroup along the flag of the group");
    cliff->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
    cliff->add_option("--m", mPath, "Representation of M")->required();
    cliff->add_option("--h", hPath, "Representation of H, normal in M")->required();
    cliff->add_option("--seed", opts.seed, "Seed for the composition series of M");
    addCommon(cliff);

    auto* opt = app.add_subcommand("optimal", "Search for flags maximizing the destabilizing measure");
    opt->add_option("--input", input, "Representation file")->required();
    opt->add_option("--max-weight", opts.maxWeight, "Largest block weight")->check(CLI::Range(2, 64));
    addCommon(opt);

    auto* orc = app.add_subcommand("oracle", "Enumerate orbits and limits by brute force");
    orc->add_option("--input", input, "Representation file")->required();
    addCommon(orc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kInvalidInput;
    }

    CLI::App* sub = app.get_subcommands().front();
    std::vector<std::string> paths;
    if (sub == cliff) {
        paths = {mPath, hPath};
    } else {
        paths = {input};
        if (!inputB.empty()) paths.push_back(inputB);
    }

    Outcome outcome = runCommand(sub->get_name(), paths, opts);
    const std::string text = canonicalText(outcome.report);
    if (outPath.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(outPath, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << outPath << "\n";
            return kInvalidInput;
        }
        out << text;
    }
    if (outcome.report.contains("error")) std::cerr << outcome.report["error"]["message"].get<std::string>() << "\n";
    return outcome.exitCode;
}
