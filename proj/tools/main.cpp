#include "reptriples/bounds.hpp"
#include "reptriples/oracle.hpp"
#include "reptriples/records.hpp"
#include "reptriples/search.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using reptriples::BaseResult;
using reptriples::SearchConfig;
using reptriples::Solution;
using ordered_json = nlohmann::ordered_json;

unsigned default_workers() {
    if (const char* env = std::getenv("REPDIGIT_WORKERS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 4096)
            return static_cast<unsigned>(v);
        std::cerr << "warning: ignoring invalid REPDIGIT_WORKERS=" << env << "\n";
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw != 0 ? hw : 1;
}

struct OutputTarget {
    std::ostream* stream = &std::cout;
    std::ofstream file;
    bool fresh = true;  // false when appending to a non-empty file

    bool open(const std::string& path) {
        if (path.empty()) return true;
        std::ifstream probe(path, std::ios::ate | std::ios::binary);
        fresh = !probe.good() || probe.tellg() == 0;
        probe.close();
        file.open(path, std::ios::app);
        if (!file) return false;
        stream = &file;
        return true;
    }
};

// Completion certificates, one JSON line per finished base, appended to
// <out>.certs.jsonl. A base is skipped on re-run when a certificate with
// the same threshold, cap and phase set already exists.
struct CertStore {
    std::string path;
    std::map<unsigned long, ordered_json> by_base;
    std::ofstream out;

    void load(const std::string& out_path) {
        path = out_path + ".certs.jsonl";
        std::ifstream in(path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                ordered_json j = ordered_json::parse(line);
                const unsigned long g = j.at("g").get<unsigned long>();
                by_base[g] = std::move(j);
            } catch (const nlohmann::json::exception&) {
                // unreadable certificate: treat the base as unfinished
            }
        }
    }

    bool covered(unsigned long g, const std::string& B, int cap,
                 const std::string& phases) const {
        const auto it = by_base.find(g);
        if (it == by_base.end()) return false;
        const ordered_json& j = it->second;
        try {
            return j.at("B").get<std::string>() == B && j.at("cap").get<int>() == cap &&
                   j.at("phases").get<std::string>() == phases;
        } catch (const nlohmann::json::exception&) {
            return false;
        }
    }

    void append(unsigned long g, const std::string& B, int cap, const std::string& phases,
                size_t solutions, double seconds) {
        if (path.empty()) return;
        if (!out.is_open()) out.open(path, std::ios::app);
        ordered_json j;
        j["g"] = g;
        j["B"] = B;
        j["cap"] = cap;
        j["phases"] = phases;
        j["solutions"] = solutions;
        j["wall_ms"] = static_cast<long>(seconds * 1000.0);
        out << j.dump() << "\n";
        out.flush();
    }
};

struct SearchOptions {
    unsigned long base = 0;
    std::string base_range;
    unsigned long long threshold = 0;
    int cap_override = -1;
    std::string phase = "both";
    unsigned workers = 0;
    std::string format = "json";
    std::string out_path;
    bool progress = false;
    bool force = false;
};

bool parse_range(const std::string& text, unsigned long& lo, unsigned long& hi) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) return false;
    try {
        size_t used = 0;
        lo = std::stoul(text.substr(0, pos), &used);
        if (used != pos) return false;
        const std::string rest = text.substr(pos + 2);
        hi = std::stoul(rest, &used);
        return used == rest.size();
    } catch (const std::exception&) {
        return false;
    }
}

int run_search(const SearchOptions& opt) {
    std::vector<unsigned long> bases;
    if (opt.base != 0 && !opt.base_range.empty()) {
        std::cerr << "error: --base and --base-range are mutually exclusive\n";
        return 1;
    }
    if (opt.base != 0) {
        if (opt.base < 2) {
            std::cerr << "error: base must be >= 2\n";
            return 1;
        }
        bases.push_back(opt.base);
    } else if (!opt.base_range.empty()) {
        unsigned long lo = 0, hi = 0;
        if (!parse_range(opt.base_range, lo, hi) || lo < 2 || lo > hi) {
            std::cerr << "error: --base-range expects LO..HI with 2 <= LO <= HI\n";
            return 1;
        }
        for (unsigned long g = lo; g <= hi; ++g) bases.push_back(g);
    } else {
        std::cerr << "error: one of --base or --base-range is required\n";
        return 1;
    }

    SearchConfig cfg;
    if (opt.threshold != 0) cfg.threshold_B = mpz_class(std::to_string(opt.threshold));
    if (opt.cap_override >= 0) cfg.n3_cap_override = opt.cap_override;
    cfg.phase_small = opt.phase == "both" || opt.phase == "small";
    cfg.phase_large = opt.phase == "both" || opt.phase == "large";
    cfg.workers = opt.workers != 0 ? opt.workers : default_workers();
    cfg.emit_progress = opt.progress;

    const std::string phases = opt.phase == "both" ? "small,large" : opt.phase;
    const bool csv = opt.format == "csv";

    OutputTarget target;
    if (!target.open(opt.out_path)) {
        std::cerr << "error: cannot open output file " << opt.out_path << "\n";
        return 1;
    }

    CertStore certs;
    if (!opt.out_path.empty()) certs.load(opt.out_path);

    auto effective_B = [&](unsigned long g) {
        return cfg.threshold_B ? cfg.threshold_B->get_str()
                               : reptriples::default_threshold(g).get_str();
    };
    auto effective_cap = [&](unsigned long g) {
        if (g == 2) return 0;
        return cfg.n3_cap_override ? *cfg.n3_cap_override : reptriples::n3_cap(g);
    };

    // caps are pure per base; resolve them once up front so certificate
    // matching and the search agree
    std::map<unsigned long, int> caps;
    std::vector<unsigned long> to_run;
    for (unsigned long g : bases) {
        caps[g] = effective_cap(g);
        if (!opt.force && certs.covered(g, effective_B(g), caps[g], phases)) {
            if (opt.progress) std::cerr << "g=" << g << ": certificate present, skipping\n";
            continue;
        }
        to_run.push_back(g);
    }

    if (csv && target.fresh) *target.stream << reptriples::csv_header() << "\n";

    std::mutex progress_mu;
    reptriples::ProgressFn progress;
    std::map<unsigned long, double> wall;
    if (opt.progress || !opt.out_path.empty()) {
        progress = [&](unsigned long g, size_t n, double secs) {
            std::lock_guard<std::mutex> lock(progress_mu);
            wall[g] = secs;
            if (opt.progress) {
                std::fprintf(stderr, "g=%lu: %zu solution(s) in %.2fs\n", g, n, secs);
                std::fflush(stderr);
            }
        };
    }

    int exit_code = 0;
    reptriples::search_bases(to_run, cfg, [&](const BaseResult& r) {
        if (!r.error.empty()) {
            std::cerr << "error: base " << r.g << ": " << r.error << "\n";
            exit_code = 2;
            return;  // no certificate for a failed base
        }
        for (const Solution& s : r.solutions)
            *target.stream << (csv ? reptriples::to_csv_row(s) : reptriples::to_json_line(s))
                           << "\n";
        target.stream->flush();
        if (!opt.out_path.empty()) {
            double secs = 0;
            {
                std::lock_guard<std::mutex> lock(progress_mu);
                const auto it = wall.find(r.g);
                if (it != wall.end()) secs = it->second;
            }
            certs.append(r.g, effective_B(r.g), caps[r.g], phases, r.solutions.size(), secs);
        }
    }, progress);

    return exit_code;
}

int run_bounds(unsigned long g) {
    const reptriples::BoundReport r = reptriples::bound_report(g);
    ordered_json j;
    j["g"] = r.g;
    j["case2_cap"] = r.case2_cap;
    j["case3_cap"] = r.case3_cap;
    j["n3_cap"] = r.n3_cap;
    j["a_bound"] = r.a_bound.get_str();
    j["count_bound"] = r.count_bound.get_str();
    std::cout << j.dump() << "\n";
    return 0;
}

int run_verify(const std::string& in_path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!in_path.empty()) {
        file.open(in_path);
        if (!file) {
            std::cerr << "error: cannot open " << in_path << "\n";
            return 1;
        }
        in = &file;
    }
    std::string line;
    size_t lineno = 0, checked = 0, failed = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            const Solution s = reptriples::parse_json_record(line);
            ++checked;
            if (!reptriples::verify_solution(s)) {
                std::cerr << "line " << lineno << ": verification failed\n";
                ++failed;
            }
        } catch (const std::exception& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            ++failed;
            ++checked;
        }
    }
    std::cerr << "verified " << (checked - failed) << "/" << checked << " record(s)\n";
    return failed == 0 ? 0 : 2;
}

int run_oracle(unsigned long g, unsigned long long a_max, unsigned workers,
               const std::string& format) {
    const auto sols = reptriples::brute_force(g, mpz_class(std::to_string(a_max)),
                                              workers != 0 ? workers : default_workers());
    const bool csv = format == "csv";
    if (csv) std::cout << reptriples::csv_header() << "\n";
    for (const Solution& s : sols)
        std::cout << (csv ? reptriples::to_csv_row(s) : reptriples::to_json_line(s)) << "\n";
    return 0;
}

int run_census(unsigned long g) {
    ordered_json j;
    j["g"] = g;
    j["count"] = reptriples::count_single_digit_triples(g).get_str();
    std::cout << j.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Diophantine triples with repdigit products: search, bounds, oracles"};
    app.require_subcommand(1);

    SearchOptions sopt;
    auto* search = app.add_subcommand("search", "two-phase complete search per base");
    search->add_option("--base", sopt.base, "single base g >= 2");
    search->add_option("--base-range", sopt.base_range, "inclusive range LO..HI");
    search->add_option("--threshold", sopt.threshold,
                       "phase split B (default: 1000 for g <= 100, else 10000)");
    search->add_option("--n3-cap", sopt.cap_override, "override the per-base length cap")
        ->check(CLI::NonNegativeNumber);
    search->add_option("--phase", sopt.phase, "small|large|both (default both)")
        ->check(CLI::IsMember({"small", "large", "both"}));
    search->add_option("--workers", sopt.workers, "worker count (default: REPDIGIT_WORKERS or hardware)");
    search->add_option("--format", sopt.format, "json|csv (default json lines)")
        ->check(CLI::IsMember({"json", "csv"}));
    search->add_option("--out", sopt.out_path, "append results to FILE; enables certificates");
    search->add_flag("--progress", sopt.progress, "per-base progress on stderr");
    search->add_flag("--force", sopt.force, "re-search bases with completion certificates");

    unsigned long bounds_base = 0;
    auto* bounds = app.add_subcommand("bounds", "per-base bound report as JSON");
    bounds->add_option("--base", bounds_base, "base g >= 3")->required();

    unsigned long oracle_base = 0;
    unsigned long long oracle_amax = 0;
    unsigned oracle_workers = 0;
    std::string oracle_format = "json";
    std::string verify_in;
    bool verify_mode = false;
    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth / record verification");
    oracle->add_option("--base", oracle_base, "base g >= 2");
    oracle->add_option("--a-max", oracle_amax, "enumerate a <= a-max");
    oracle->add_option("--workers", oracle_workers, "worker count");
    oracle->add_option("--format", oracle_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    oracle->add_flag("--verify", verify_mode, "re-verify records from --in or stdin");
    oracle->add_option("--in", verify_in, "records file for --verify");

    unsigned long census_base = 0;
    auto* census = app.add_subcommand("census", "count single-digit-product triples");
    census->add_option("--base", census_base, "base g >= 5")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(search)) return run_search(sopt);
        if (app.got_subcommand(bounds)) return run_bounds(bounds_base);
        if (app.got_subcommand(oracle)) {
            if (verify_mode) return run_verify(verify_in);
            if (oracle_base == 0 || oracle_amax == 0) {
                std::cerr << "error: oracle needs --base and --a-max (or --verify)\n";
                return 1;
            }
            return run_oracle(oracle_base, oracle_amax, oracle_workers, oracle_format);
        }
        if (app.got_subcommand(census)) return run_census(census_base);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
