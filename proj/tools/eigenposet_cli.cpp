#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "eigenposet_c.h"

namespace {

struct Options {
    int m = 1, p = 1, n = 1, d = 1, d2 = 0, max_n = 9;
    std::string poset = "eigen";
    std::string format = "text";
    std::string output;
    unsigned threads = 1;
    std::uint64_t budget = 0;
};

int exit_code(epz_status status)
{
    switch (status) {
    case EPZ_OK: return 0;
    case EPZ_VERIFICATION_FAILED: return 1;
    default: return 2;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Eigenspace posets of complex reflection groups"};
    app.require_subcommand(1);
    Options opt;

    const std::map<std::string, std::string> commands{
        {"build", "Build a poset and print it"},
        {"betti", "Reduced Betti numbers of the proper part"},
        {"moebius", "Moebius function from bottom to top"},
        {"rao-check", "Check the lexicographic atom ordering"},
        {"witness-check", "Construct and verify witnesses for every atom pair"},
        {"geometric-check", "Check that every upper interval is a geometric lattice"},
        {"independence", "Compare the posets for d and d2"},
        {"classify", "Classify the eigenspace arrangement"},
        {"complement", "Reduced cohomology of the arrangement complement"},
        {"table3", "Sphere counts for balanced partition posets"},
        {"specht", "Decompose the top homology of the balanced partition poset"},
        {"ribbon-check", "Compare pointed d-divisible homology with a ribbon character"},
        {"zeroing-conjecture", "Rank of the zeroing map on top homology"},
        {"dot", "Hasse diagram in DOT format"},
        {"selftest", "Run the built-in property checks"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        auto positive = CLI::PositiveNumber;
        sub->add_option("--m", opt.m, "m in G(m,p,n)")->check(positive);
        sub->add_option("--p", opt.p, "p in G(m,p,n)")->check(positive);
        sub->add_option("--n", opt.n, "rank n")->check(positive);
        sub->add_option("--d", opt.d, "order of the root of unity")->check(positive);
        sub->add_option("--d2", opt.d2, "second order for independence")->check(positive);
        sub->add_option("--max-n", opt.max_n, "largest n for table3")->check(CLI::Range(2, 20));
        sub->add_option("--poset", opt.poset, "eigen, balanced, dowling or pointed")
            ->check(CLI::IsMember({"eigen", "balanced", "dowling", "pointed"}));
        sub->add_option("--format", opt.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("--output", opt.output, "write output to this file");
        sub->add_option("--threads", opt.threads, "worker threads")->check(positive);
        sub->add_option("--budget", opt.budget, "work budget (default from EIGENPOSET_BUDGET)")->check(positive);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    static const std::map<std::string, epz_poset_kind> kinds{
        {"eigen", EPZ_POSET_EIGEN}, {"balanced", EPZ_POSET_BALANCED}, {"dowling", EPZ_POSET_DOWLING}, {"pointed", EPZ_POSET_POINTED}};

    epz_context* ctx = nullptr;
    if (epz_context_create(&ctx) != EPZ_OK) return 2;
    std::unique_ptr<epz_context, decltype(&epz_context_destroy)> guard(ctx, epz_context_destroy);
    if (opt.budget && epz_context_set_budget(ctx, opt.budget) != EPZ_OK) return 2;
    if (epz_context_set_threads(ctx, opt.threads) != EPZ_OK) return 2;

    epz_request request;
    epz_request_init(&request);
    request.command = command.c_str();
    request.m = opt.m;
    request.p = opt.p;
    request.n = opt.n;
    request.d = opt.d;
    request.d2 = opt.d2;
    request.max_n = opt.max_n;
    request.poset = kinds.at(opt.poset);
    request.format = opt.format.c_str();

    char* text = nullptr;
    const epz_status status = epz_run(ctx, &request, &text);
    if (text) {
        if (opt.output.empty()) {
            std::fputs(text, stdout);
        } else {
            std::ofstream file(opt.output, std::ios::binary);
            file << text;
            if (!file) {
                std::cerr << "error: cannot write " << opt.output << '\n';
                epz_string_free(text);
                return 2;
            }
        }
        epz_string_free(text);
    }
    if (status != EPZ_OK) {
        std::cerr << "error: " << epz_status_string(status);
        if (*epz_last_error(ctx)) std::cerr << ": " << epz_last_error(ctx);
        std::cerr << '\n';
    }
    return exit_code(status);
}
