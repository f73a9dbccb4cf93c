#include "annularkh/cli.hpp"
#include "annularkh/diagram.hpp"
#include "annularkh/parallel.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace annularkh;

int main(int argc, char** argv) {
    CLI::App app{"Annular Khovanov homology over GF(2)"};
    app.require_subcommand(1);

    std::string format = "table";
    std::string out_path;
    std::size_t threads = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "structured"}));
    app.add_option("--out", out_path, "Write output to this file");
    app.add_option("--threads", threads, "Worker threads (default: ANNULARKH_THREADS or all cores)");

    cli::Options opts;
    std::string input;
    auto file_command = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", input, "Diagram file")->required();
        return sub;
    };
    file_command("kh", "Annular Khovanov homology");
    auto* ss = file_command("ss", "Spectral sequence of the annular filtration");
    ss->add_option("--rmax", opts.r_max, "Last page to compute (0: until stable)")->check(CLI::NonNegativeNumber);
    auto* sfh = file_command("sfh", "V_H of one resolution and its checks");
    sfh->add_option("--bits", opts.bits, "Resolution as a 0/1 string, one bit per crossing");
    file_command("cut", "Cut along the ray and check the summand correspondence");
    file_command("euler", "Chain- and homology-level Euler characteristics");
    auto* check = app.add_subcommand("check", "Run every property check on a corpus directory");
    check->add_option("dir", input, "Corpus directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (threads > 0) set_default_thread_count(threads);
    opts.threads = resolve_threads(threads);
    const auto fmt = format == "structured" ? cli::Format::structured : cli::Format::table;
    const std::string command = app.get_subcommands().front()->get_name();

    cli::Report report;
    try {
        if (command == "kh") report = cli::cmd_kh(input, opts);
        else if (command == "ss") report = cli::cmd_ss(input, opts);
        else if (command == "sfh") report = cli::cmd_sfh(input, opts);
        else if (command == "cut") report = cli::cmd_cut(input, opts);
        else if (command == "euler") report = cli::cmd_euler(input, opts);
        else report = cli::cmd_check(input, opts);
    } catch (const DiagramError& e) {
        std::cerr << "error: " << kind_name(e.kind()) << ": " << e.what() << "\n";
        return 2;
    } catch (const cli::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }

    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
    const std::string text = cli::render(report, fmt);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out || !(out << text)) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return 2;
        }
    }
    return report.passed() ? 0 : 1;
}
