// Acceptance run: one PASS/FAIL line per criterion with its measured value
// and the pinned limit.
//
//   acceptance --cli <path to annularkh> [--only 1,2,10a] [--perf diagram.json]

#include "annularkh/khovanov.hpp"
#include "annularkh/sfh.hpp"
#include "annularkh/spectral.hpp"
#include "annularkh/tangle.hpp"
#include "support/fixtures.hpp"

#include <CLI11.hpp>

#include <fcntl.h>
#include <spawn.h>
#include <sys/resource.h>
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

extern char** environ;

using namespace annularkh;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string name;
    std::function<Outcome()> run;
};

std::vector<std::uint64_t> all_resolutions(const AnnularDiagram& d) {
    std::vector<std::uint64_t> out(std::size_t{1} << d.crossing_count());
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = x;
    return out;
}

// Finger move on the first edge, or on the first free loop of a crossingless diagram.
AnnularDiagram finger_moved(const AnnularDiagram& d) { return finger_move(d, 0, 1); }

Outcome convention_pin() {
    const auto start = Clock::now();
    const auto mine = fixtures::to_map(khovanov::total_homology(fixtures::right_trefoil()));
    const auto reference = oracle::khovanov(fixtures::left_trefoil_pd());
    const double s = seconds_since(start);
    std::ostringstream os;
    os << "right trefoil total dim " << oracle::total(mine) << ", left-trefoil reference dim "
       << oracle::total(reference) << ", " << mine.size() << " bidegrees; " << fmt_seconds(s) << " (limit 1 s)";
    return {mine == reference && oracle::total(mine) == 6 && s < 1.0, os.str()};
}

Outcome resolved_equivalence() {
    const auto start = Clock::now();
    std::size_t checked = 0, failed = 0;
    std::set<int> sizes;
    std::string first_failure;
    for (const auto& d : fixtures::corpus())
        for (std::uint64_t bits : all_resolutions(d)) {
            const auto r = resolve(d, Resolution(d.crossing_count(), bits));
            const auto rep = sfh::check_equivalence(r);
            ++checked;
            sizes.insert(rep.t + rep.n);
            if (!rep.pass) {
                if (!failed) first_failure = d.name() + " " + r.resolution.to_string() + ": " + rep.mismatch;
                ++failed;
            }
        }
    const double s = seconds_since(start);
    bool spans = true;
    for (int size = 1; size <= 6; ++size) spans = spans && sizes.count(size);
    std::ostringstream os;
    os << checked << " resolved diagrams, " << failed << " mismatches, t+n from " << *sizes.begin() << " to "
       << *sizes.rbegin() << "; " << fmt_seconds(s) << " (limit 10 s, at least 200 covering t+n = 1..6)";
    if (failed) os << "; first: " << first_failure;
    return {failed == 0 && checked >= 200 && spans && s < 10.0, os.str()};
}

Outcome rank_law() {
    std::size_t checked = 0, failed = 0;
    for (const auto& d : fixtures::corpus())
        for (std::uint64_t bits : all_resolutions(d)) {
            const auto r = resolve(d, Resolution(d.crossing_count(), bits));
            const sfh::VHSpace v = sfh::v_h(r);
            const std::size_t expected = std::size_t{1} << (r.trivial_count() + r.nontrivial_count());
            std::size_t vh_total = 0;
            for (const auto& [deg, dim] : v.dims()) vh_total += dim;
            const khovanov::VertexSpace gens(r);
            ++checked;
            if (vh_total != expected || gens.size() != expected) ++failed;
        }
    std::ostringstream os;
    os << checked << " resolved diagrams, " << failed << " with total dim != 2^(t+n) (exact)";
    return {failed == 0, os.str()};
}

Outcome abutment() {
    const auto start = Clock::now();
    std::size_t checked = 0;
    std::vector<std::string> failed;
    for (const auto& d : fixtures::corpus()) {
        if (d.crossing_count() > 10) continue;
        const auto fc = khovanov::build_complex(d);
        const auto ss = spectral::compute(fc);
        ++checked;
        if (ss.stable_at == 0 || forget_k(ss.infinity) != khovanov::total_homology(fc)) failed.push_back(d.name());
    }
    const double s = seconds_since(start);
    std::ostringstream os;
    os << checked << " diagrams with at most 10 crossings, " << failed.size() << " mismatches; " << fmt_seconds(s)
       << " (limit 60 s)";
    for (const auto& name : failed) os << " " << name;
    return {failed.empty() && s < 60.0, os.str()};
}

Outcome sigma1_numbers() {
    // Hand computation on the two-vertex cube: E^1 has four classes, d_1
    // cancels one pair, and the surviving k = 2 class is the tangle summand.
    const auto& d = fixtures::corpus_entry("sigma1");
    const auto fc = khovanov::build_complex(d);
    const auto ss = spectral::compute(fc);
    const auto rep = tangle::summand_check(fc);
    std::size_t k2 = 0;
    for (const auto& [deg, dim] : khovanov::annular_homology(fc))
        if (deg.k == 2) k2 += dim;
    const std::size_t e1 = ss.pages.empty() ? 0 : ss.pages.front().dims.total();
    std::ostringstream os;
    os << "E1 " << e1 << " (want 4), Einf " << ss.infinity.total() << " (want 2), tangle " << rep.tangle_dims.total()
       << " (want 1), annular k=2 " << k2 << " (want 1)";
    return {e1 == 4 && ss.infinity.total() == 2 && rep.tangle_dims.total() == 1 && k2 == 1, os.str()};
}

Outcome summand() {
    std::size_t summands = 0, trivial = 0;
    std::vector<std::string> failed;
    for (const auto& d : fixtures::corpus()) {
        try {
            const auto rep = tangle::summand_check(d);
            if (rep.verdict == tangle::Verdict::trivial) {
                ++trivial;
                if (!rep.annular_dims.empty()) failed.push_back(d.name());
            } else {
                ++summands;
                if (rep.tangle_dims != rep.annular_dims) failed.push_back(d.name());
            }
        } catch (const std::exception& e) {
            failed.push_back(d.name() + " (" + e.what() + ")");
        }
    }
    std::ostringstream os;
    os << summands << " summand verdicts, " << trivial << " trivial, " << failed.size() << " failures (exact)";
    for (const auto& name : failed) os << " " << name;
    return {failed.empty(), os.str()};
}

Outcome triviality() {
    std::size_t checked = 0;
    std::vector<std::string> failed;
    for (const auto& d : fixtures::corpus()) {
        const AnnularDiagram moved = finger_moved(d);
        const auto fc = khovanov::build_complex(moved);
        const auto rep = tangle::summand_check(fc);
        ++checked;
        if (rep.verdict != tangle::Verdict::trivial ||
            khovanov::annular_homology(fc) != khovanov::annular_homology(d))
            failed.push_back(d.name());
    }
    std::ostringstream os;
    os << checked << " finger-moved diagrams, " << failed.size() << " not trivial or with changed homology (exact)";
    for (const auto& name : failed) os << " " << name;
    return {failed.empty(), os.str()};
}

Outcome invariance() {
    std::size_t pairs = 0;
    std::vector<std::string> failed;
    for (const auto& d : fixtures::corpus()) {
        if (d.isotopic_to().empty()) continue;
        ++pairs;
        const auto& other = fixtures::corpus_entry(d.isotopic_to());
        if (khovanov::annular_homology(d) != khovanov::annular_homology(other)) failed.push_back(d.name());
    }
    std::ostringstream os;
    os << pairs << " related pairs (need at least 10), " << failed.size() << " with different dims (exact)";
    for (const auto& name : failed) os << " " << name;
    return {failed.empty() && pairs >= 10, os.str()};
}

Outcome euler() {
    std::size_t checked = 0;
    std::vector<std::string> failed;
    for (const auto& d : fixtures::corpus()) {
        const auto fc = khovanov::build_complex(d);
        ++checked;
        if (khovanov::euler_characteristic(fc.graded().chain_dims()) !=
            khovanov::euler_characteristic(khovanov::annular_homology(fc)))
            failed.push_back(d.name());
    }
    std::ostringstream os;
    os << checked << " diagrams, " << failed.size() << " disagreements (exact)";
    for (const auto& name : failed) os << " " << name;
    return {failed.empty(), os.str()};
}

struct ChildRun {
    int status = -1;
    double seconds = 0;
    long max_rss_kb = 0;
};

ChildRun run_quiet(const std::vector<std::string>& argv) {
    std::vector<char*> args;
    for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
    args.push_back(nullptr);
    posix_spawn_file_actions_t actions;
    posix_spawn_file_actions_init(&actions);
    posix_spawn_file_actions_addopen(&actions, 1, "/dev/null", O_WRONLY, 0);
    ChildRun out;
    const auto start = Clock::now();
    pid_t pid = 0;
    if (posix_spawn(&pid, args[0], &actions, nullptr, args.data(), environ) != 0) {
        posix_spawn_file_actions_destroy(&actions);
        return out;
    }
    posix_spawn_file_actions_destroy(&actions);
    int status = 0;
    rusage usage{};
    wait4(pid, &status, 0, &usage);
    out.seconds = seconds_since(start);
    out.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    out.max_rss_kb = usage.ru_maxrss;
    return out;
}

Outcome envelope(const std::string& cli, const std::string& perf_file) {
    const AnnularDiagram d = load_diagram(perf_file);
    const ChildRun run = run_quiet({cli, "--format", "structured", "kh", perf_file});
    const double rss_mb = static_cast<double>(run.max_rss_kb) / 1024.0;
    std::ostringstream os;
    os << d.crossing_count() << "-crossing kh: exit " << run.status << ", " << fmt_seconds(run.seconds) << " (limit 60 s), "
       << static_cast<long>(rss_mb) << " MB peak (limit 2048 MB)";
    return {run.status == 0 && d.crossing_count() >= 12 && run.seconds < 60.0 && rss_mb < 2048.0, os.str()};
}

Outcome speedup(const std::string& perf_file) {
    const AnnularDiagram d = load_diagram(perf_file);
    auto best_of = [&](std::size_t threads) {
        double best = 1e300;
        for (int rep = 0; rep < 3; ++rep) {
            const auto start = Clock::now();
            const auto fc = khovanov::build_complex(d, {threads, false});
            best = std::min(best, seconds_since(start));
        }
        return best;
    };
    const double one = best_of(1);
    const double eight = best_of(8);
    const double ratio = one / eight;
    char buf[160];
    std::snprintf(buf, sizeof buf, "cube construction %.2f s on 1 worker, %.2f s on 8: %.2fx (need >= 3x; %u hardware threads)",
                  one, eight, ratio, std::thread::hardware_concurrency());
    return {ratio >= 3.0, buf};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::string cli;
    std::string only;
    std::string perf_file = fixtures::corpus_dir() + "/perf/perf_12.json";
    app.add_option("--cli", cli, "Path to the annularkh executable")->required();
    app.add_option("--only", only, "Comma-separated criterion ids to run (default: all)");
    app.add_option("--perf", perf_file, "Diagram for the performance envelope");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria{
        {"1", "convention-pin", convention_pin},
        {"2", "resolved-equivalence", resolved_equivalence},
        {"3", "rank-law", rank_law},
        {"4", "abutment", abutment},
        {"5", "sigma1-numbers", sigma1_numbers},
        {"6", "summand", summand},
        {"7", "triviality", triviality},
        {"8", "invariance", invariance},
        {"9", "euler", euler},
        {"10a", "kh-envelope", [&] { return envelope(cli, perf_file); }},
        {"10b", "cube-speedup", [&] { return speedup(perf_file); }},
    };

    std::set<std::string> selected;
    std::stringstream ss(only);
    for (std::string id; std::getline(ss, id, ',');)
        if (!id.empty()) selected.insert(id);
    for (const auto& id : selected) {
        bool known = false;
        for (const auto& c : criteria) known = known || c.id == id;
        if (!known) {
            std::fprintf(stderr, "unknown criterion '%s'\n", id.c_str());
            return 2;
        }
    }

    int failures = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        std::printf("%s %-3s %s: %s\n", o.pass ? "PASS" : "FAIL", c.id.c_str(), c.name.c_str(), o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
