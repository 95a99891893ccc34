// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include "binseq/codec.hpp"
#include "binseq/dataset.hpp"
#include "binseq/error.hpp"
#include "binseq/oracle.hpp"
#include "binseq/skew.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <ostream>

#ifndef BINSEQ_VERSION
#define BINSEQ_VERSION "0.0.0"
#endif

namespace binseq::cli {
namespace {

std::string merit_text(const std::optional<double>& f)
{
    return f ? fmt::format("{:.4f}", round_merit(*f)) : "inf";
}

std::string merit_full(const std::optional<double>& f)
{
    return f ? fmt::format("{:.17g}", *f) : "inf";
}

std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::ofstream open_output(const std::string& path, std::ios::openmode mode)
{
    std::ofstream file(path, mode);
    if (!file)
        throw InvalidInput("cannot open '" + path + "' for writing");
    return file;
}

std::size_t default_length(const std::string& hex, std::size_t length)
{
    return length != 0 ? length : 4 * canonical_hex(hex).size();
}

void print_report(std::ostream& out, const Sequence& s)
{
    const auto report = evaluate(s);
    fmt::print(out, "length: {}\n", report.length);
    fmt::print(out, "energy: {}\n", report.energy);
    fmt::print(out, "merit_factor: {}\n", merit_text(report.merit_factor));
    fmt::print(out, "merit_factor_full: {}\n", merit_full(report.merit_factor));
    fmt::print(out, "psl: {}\n", report.psl ? std::to_string(*report.psl) : "n/a");
    fmt::print(out, "skew_symmetric: {}\n", is_skew_symmetric(s));
}

int cmd_verify(const std::string& dataset, std::ostream& out)
{
    const auto records = dataset.empty() ? bundled_records() : load_records(dataset);
    std::size_t failures = 0;
    fmt::print(out, "{:>5} {:>8} {:>12} {:>7} {:>7} {:>6} {}\n", "L", "F_pub", "F_calc", "E", "E_exp",
               "skew", "status");
    for (const auto& entry : records)
    {
        const auto check = check_record(entry);
        if (!check.passed())
            ++failures;
        if (!check.decoded)
        {
            fmt::print(out, "{:>5} {:>8} decode error: {}  FAIL\n", entry.length, entry.published_merit,
                       check.error);
            continue;
        }
        fmt::print(out, "{:>5} {:>8} {:>12.8f} {:>7} {:>7} {:>6} {}\n", entry.length,
                   entry.published_merit, check.merit, check.energy, check.expected_energy,
                   check.skew_symmetric ? "yes" : "no", check.passed() ? "ok" : "FAIL");
    }
    fmt::print(out, "{} of {} records verified\n", records.size() - failures, records.size());
    return failures == 0 ? exit_ok : exit_mismatch;
}

int cmd_spectrum(const std::string& hex, std::size_t length, std::size_t samples,
                 const std::string& out_path, std::ostream& out)
{
    const auto s = decode(hex, default_length(hex, length));
    const auto modulus = spectrum_modulus(s, samples);
    std::ofstream file;
    if (!out_path.empty())
        file = open_output(out_path, std::ios::trunc);
    std::ostream& sink = out_path.empty() ? out : file;
    sink << "t,modulus\n";
    for (std::size_t m = 0; m < samples; ++m)
    {
        const double t = static_cast<double>(m) / static_cast<double>(samples);
        fmt::print(sink, "{:.9g},{:.9g}\n", t, modulus[m]);
    }
    return exit_ok;
}

int cmd_oracle(std::size_t length, const std::string& mode_text, unsigned threads, std::ostream& out)
{
    const auto r = exhaustive(length, parse_mode(mode_text), threads);
    fmt::print(out, "length: {}\n", r.length);
    fmt::print(out, "mode: {}\n", to_string(r.mode));
    fmt::print(out, "optimal_energy: {}\n", r.optimal_energy);
    fmt::print(out, "merit_factor: {}\n", merit_text(merit_factor(r.length, r.optimal_energy)));
    fmt::print(out, "optimum_classes: {}\n", r.optimum_count);
    fmt::print(out, "witness: {}\n", encode(r.witness).hex);
    fmt::print(out, "witness_signs: {}\n", r.witness.to_string());
    return exit_ok;
}

int cmd_search(const SearchConfig& cfg, const std::string& out_path, std::ostream& out)
{
    const auto result = run_parallel(cfg);
    const auto record = make_result_record(cfg, result, utc_timestamp());
    const std::string line = record.dump();
    if (!out_path.empty())
    {
        auto file = open_output(out_path, std::ios::app);
        file << line << '\n';
    }
    out << line << '\n';
    return exit_ok;
}

int cmd_recheck(const std::string& path, std::ostream& out)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open '" + path + "'");
    std::string line;
    std::size_t checked = 0;
    std::size_t failures = 0;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no)
    {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        ++checked;
        bool ok = false;
        try
        {
            const auto record = nlohmann::json::parse(line);
            const auto& res = record.at("result");
            const auto s = decode(record.at("hex").get<std::string>(), res.at("length").get<std::size_t>());
            ok = energy(s) == res.at("energy").get<std::int64_t>() &&
                 (parse_mode(res.at("mode").get<std::string>()) == Mode::full || is_skew_symmetric(s));
        }
        catch (const std::exception& e)
        {
            fmt::print(out, "line {}: {}\n", line_no, e.what());
        }
        if (!ok)
        {
            ++failures;
            fmt::print(out, "line {}: FAIL\n", line_no);
        }
    }
    fmt::print(out, "{} of {} records re-verified\n", checked - failures, checked);
    return failures == 0 ? exit_ok : exit_mismatch;
}

}  // namespace

nlohmann::json make_result_record(const SearchConfig& cfg, const SearchResult& result,
                                  const std::string& timestamp)
{
    using nlohmann::json;
    json config = {
        {"length", cfg.length},
        {"mode", to_string(cfg.mode)},
        {"seed", cfg.seed},
        {"target_energy", cfg.target_energy ? json(*cfg.target_energy) : json(nullptr)},
        {"max_flips", cfg.max_flips},
        {"max_restarts", cfg.max_restarts},
        {"wall_time_limit", cfg.wall_time_limit ? json(*cfg.wall_time_limit) : json(nullptr)},
        {"workers", cfg.workers},
        {"memory_capacity", cfg.memory_capacity},
    };
    const auto report = evaluate(result.best);
    json res = {
        {"length", result.best.size()},
        {"mode", to_string(result.mode)},
        {"energy", result.best_energy},
        {"merit_factor", result.merit_factor ? json(*result.merit_factor) : json(nullptr)},
        {"merit_factor_4dp", merit_text(result.merit_factor)},
        {"psl", report.psl ? json(*report.psl) : json(nullptr)},
        {"skew_symmetric", is_skew_symmetric(result.best)},
        {"flips", result.flips},
        {"restarts", result.restarts},
        {"seed", result.seed},
        {"target_reached", result.target_reached},
        {"stop_reason", to_string(result.stop_reason)},
        {"worker", result.worker},
        {"rng", search_rng_name},
    };
    return json{
        {"tool", "binseq"},
        {"version", BINSEQ_VERSION},
        {"timing", {{"timestamp", timestamp}, {"wall_time_s", result.wall_time_s}}},
        {"config", std::move(config)},
        {"result", std::move(res)},
        {"hex", encode(result.best).hex},
    };
}

nlohmann::json without_timing(nlohmann::json record)
{
    record.erase("timing");
    return record;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Low-autocorrelation binary sequence toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", BINSEQ_VERSION);

    std::string hex;
    std::string signs;
    std::size_t length = 0;
    std::string out_path;
    std::string dataset;
    std::string mode_text = "skew";
    std::size_t samples = 1024;
    unsigned threads = 0;

    auto* eval = app.add_subcommand("eval", "Energy, merit factor, PSL and skew-symmetry of a hex sequence");
    eval->add_option("hex", hex, "Hex-encoded sequence")->required();
    eval->add_option("--length,-L", length, "Sequence length (default: 4 x hex digits)");

    auto* dec = app.add_subcommand("decode", "Print a hex sequence as +/- signs");
    dec->add_option("hex", hex, "Hex-encoded sequence")->required();
    dec->add_option("--length,-L", length, "Sequence length (default: 4 x hex digits)");

    auto* enc = app.add_subcommand("encode", "Print a +/- sign string in hex notation");
    enc->add_option("signs", signs, "Sequence as + and - characters")->required();

    auto* verify = app.add_subcommand("verify", "Re-evaluate every record of a dataset");
    verify->add_option("--dataset", dataset, "Three-column L F HEX file (default: bundled table)");

    auto* spectrum = app.add_subcommand("spectrum", "CSV of |p(exp(2 pi i t))| on a uniform grid in [0,1)");
    spectrum->add_option("hex", hex, "Hex-encoded sequence")->required();
    spectrum->add_option("--length,-L", length, "Sequence length (default: 4 x hex digits)");
    spectrum->add_option("--samples", samples, "Number of grid points")->check(CLI::PositiveNumber);
    spectrum->add_option("--out", out_path, "Write the CSV here instead of stdout");

    auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum for small lengths");
    oracle->add_option("--length,-L", length, "Sequence length")->required();
    oracle->add_option("--mode", mode_text, "full or skew")->check(CLI::IsMember({"full", "skew"}));
    oracle->add_option("--threads", threads, "Worker threads (0 = all cores)");

    SearchConfig cfg;
    std::int64_t target = 0;
    double wall_time = 0.0;
    auto* search = app.add_subcommand("search", "Self-avoiding-walk local search; prints one JSON record");
    search->add_option("--length,-L", cfg.length, "Sequence length")->required()->check(CLI::PositiveNumber);
    search->add_option("--mode", mode_text, "full or skew")->check(CLI::IsMember({"full", "skew"}));
    search->add_option("--seed", cfg.seed, "64-bit seed");
    search->add_option("--workers", cfg.workers, "Parallel workers")->envname("BINSEQ_WORKERS");
    auto* target_opt = search->add_option("--target-energy", target, "Stop at this energy or below");
    search->add_option("--max-flips", cfg.max_flips, "Flip budget per worker")->envname("BINSEQ_MAX_FLIPS");
    search->add_option("--max-restarts", cfg.max_restarts, "Restart budget per worker")
        ->envname("BINSEQ_MAX_RESTARTS");
    auto* wall_opt = search->add_option("--wall-time", wall_time, "Wall-clock limit in seconds")
                         ->envname("BINSEQ_WALL_TIME");
    search->add_option("--memory", cfg.memory_capacity, "Visited fingerprints kept per walk");
    search->add_option("--out", out_path, "Append the record to this file");

    auto* recheck = app.add_subcommand("recheck", "Re-evaluate every record of a results file");
    recheck->add_option("file", out_path, "Line-delimited results file")->required();

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        if (*eval)
        {
            print_report(out, decode(hex, default_length(hex, length)));
            return exit_ok;
        }
        if (*dec)
        {
            out << decode(hex, default_length(hex, length)).to_string() << '\n';
            return exit_ok;
        }
        if (*enc)
        {
            const auto record = encode(Sequence::parse(signs));
            fmt::print(out, "{} {}\n", record.hex, record.length);
            return exit_ok;
        }
        if (*verify)
            return cmd_verify(dataset, out);
        if (*spectrum)
            return cmd_spectrum(hex, length, samples, out_path, out);
        if (*oracle)
            return cmd_oracle(length, mode_text, threads, out);
        if (*recheck)
            return cmd_recheck(out_path, out);
        if (*search)
        {
            cfg.mode = parse_mode(mode_text);
            if (target_opt->count() > 0)
                cfg.target_energy = target;
            if (*wall_opt)
                cfg.wall_time_limit = wall_time;
            return cmd_search(cfg, out_path, out);
        }
    }
    catch (const InvalidInput& e)
    {
        fmt::print(err, "error: {}\n", e.what());
        return exit_usage;
    }
    catch (const std::exception& e)
    {
        fmt::print(err, "internal error: {}\n", e.what());
        return exit_internal;
    }
    return exit_usage;
}

}  // namespace binseq::cli
