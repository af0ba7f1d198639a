#ifndef ORE_CLI_HPP_
#define ORE_CLI_HPP_

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ore/json_io.hpp"

namespace ore::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_internal = 1,
    exit_usage = 2,
    exit_not_regular = 3,
    exit_unfactored = 4,
};

struct Config {
    std::string poly;
    bool from_disc = false;
    std::string modulus;
    std::string hints;
    std::string out;
    std::string log = "quiet";
    unsigned jobs = 1;
};

inline std::string slurp(std::string const & path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/* --poly is either an inline "[...]" list or the path of a JSON input
 * document (a bare list also works). */
inline InputDocument load_input(std::string const & arg)
{
    auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '[')
        return InputDocument{parse_intpoly(arg), RunOptions::Mode::from_disc, 0, {}};
    std::string const text = slurp(arg);
    json j;
    try {
        j = json::parse(text);
    } catch (json::parse_error const & e) {
        throw std::invalid_argument(arg + ": " + e.what());
    }
    return input_from_json(j);
}

inline int execute(int argc, char const * const * argv, std::ostream & out, std::ostream & err)
{
    Config cfg;
    CLI::App app{"N-integral basis of Q[x]/(f) without factoring N"};
    app.add_option("--poly", cfg.poly, "coefficient list \"[a0, a1, ...]\" or path to a JSON input document")->required();
    auto * disc = app.add_flag("--from-disc", cfg.from_disc, "N = |disc f| with primes <= deg f removed");
    auto * mod = app.add_option("--modulus", cfg.modulus, "explicit modulus N (decimal)");
    disc->excludes(mod);
    app.add_option("--hints", cfg.hints, "JSON list of integers known to be squarefree");
    app.add_option("--out", cfg.out, "write the output document here instead of stdout");
    app.add_option("--jobs", cfg.jobs, "moduli processed in parallel")->check(CLI::Range(1u, 256u));
    app.add_option("--log", cfg.log, "quiet, info or debug")->check(CLI::IsMember({"quiet", "info", "debug"}));

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const &) {
        out << app.help();
        return exit_ok;
    } catch (CLI::ParseError const & e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }

    InputDocument in;
    RunOptions opt;
    try {
        in = load_input(cfg.poly);
        if (in.f.degree() < 2)
            throw std::invalid_argument("f must have degree at least 2");
        if (!in.f.is_monic())
            throw std::invalid_argument("f must be monic");
        opt.mode = in.mode;
        opt.modulus = in.N;
        if (cfg.from_disc)
            opt.mode = RunOptions::Mode::from_disc;
        if (!cfg.modulus.empty()) {
            opt.mode = RunOptions::Mode::explicit_modulus;
            opt.modulus = parse_integer(cfg.modulus);
        }
        if (opt.mode == RunOptions::Mode::explicit_modulus && opt.modulus < 1)
            throw std::invalid_argument("modulus must be a positive integer");
        opt.hints = in.hints;
        if (!cfg.hints.empty()) {
            auto more = hints_from_json(json::parse(slurp(cfg.hints)));
            opt.hints.insert(opt.hints.end(), more.begin(), more.end());
        }
        validate_hints(opt.hints);
        opt.jobs = cfg.jobs;
    } catch (std::exception const & e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }

    if (cfg.log != "quiet")
        opt.on_event = [&err, debug = cfg.log == "debug"](Event const & e) {
            if (debug || e.type != "based")
                err << "[" << e.type << "] " << (bit_length(e.modulus) > 64 ? std::to_string(bit_length(e.modulus)) + "-bit modulus" : to_decimal(e.modulus)) << ": " << e.detail << "\n";
        };

    RunReport rep;
    try {
        rep = run(in.f, opt);
    } catch (std::domain_error const & e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (std::exception const & e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    if (cfg.log != "quiet")
        err << "status " << to_string(rep.status) << " after " << rep.seconds << " s\n";

    std::string const doc = to_json(rep).dump(2) + "\n";
    if (cfg.out.empty()) {
        out << doc;
    } else {
        std::ofstream f(cfg.out);
        if (!f) {
            err << "cannot write " << cfg.out << "\n";
            return exit_usage;
        }
        f << doc;
    }
    if (rep.obstruction)
        err << "not regular at " << to_decimal(rep.obstruction->modulus) << ": " << rep.obstruction->where.description << "\n";

    switch (rep.status) {
    case RunStatus::ok:
        return exit_ok;
    case RunStatus::not_regular:
        return exit_not_regular;
    default:
        return exit_unfactored;
    }
}

} // namespace ore::cli

#endif /* ORE_CLI_HPP_ */
