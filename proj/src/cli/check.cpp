#include "annularkh/cli.hpp"
#include "annularkh/parallel.hpp"
#include "annularkh/sfh.hpp"
#include "annularkh/spectral.hpp"
#include "annularkh/tangle.hpp"

#include <algorithm>
#include <filesystem>
#include <map>

namespace annularkh::cli {
namespace {

namespace fs = std::filesystem;

struct Entry {
    fs::path path;
    std::optional<AnnularDiagram> diagram;
    std::string error;
    DiagramError::Kind kind = DiagramError::Kind::syntax;
};

using Checks = std::vector<Check>;

void add(Checks& out, std::string name, bool pass, std::string detail = "") {
    out.push_back({std::move(name), pass, std::move(detail)});
}

// Runs `body`, turning an escaping exception into a failed check.
template <class F>
void guarded(Checks& out, const std::string& name, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        add(out, name, false, e.what());
    }
}

Checks properties(const AnnularDiagram& d, const std::map<std::string, const AnnularDiagram*>& by_name) {
    Checks out;
    std::optional<khovanov::FilteredComplex> fc;
    guarded(out, "chain-complex", [&] {
        fc = khovanov::build_complex(d, {1, true});
        add(out, "chain-complex", true, std::to_string(fc->size()) + " generators, D and GD square to zero");
    });
    if (!fc) return out;
    const TrigradedDims h = khovanov::annular_homology(*fc, 1);

    guarded(out, "resolved-equivalence", [&] {
        std::size_t failures = 0;
        bool ranks = true;
        bool symmetric = true;
        std::string first;
        for (std::size_t v = 0; v < fc->vertex_count(); ++v) {
            const ResolvedDiagram& r = fc->vertex(v).resolved;
            const auto eq = sfh::check_equivalence(r);
            if (!eq.pass && failures++ == 0) first = r.resolution.to_string() + ": " + eq.mismatch;
            const auto vh = sfh::v_h(r);
            const std::size_t expected = std::size_t{1} << (vh.t() + vh.n());
            ranks = ranks && vh.size() == expected && fc->vertex(v).space.size() == expected &&
                    sfh::predicted_ranks(r).cover_rank == expected;
            symmetric = symmetric && sfh::symmetric(vh);
        }
        add(out, "resolved-equivalence", failures == 0,
            failures == 0 ? std::to_string(fc->vertex_count()) + " resolutions" : first);
        add(out, "rank-law", ranks, "V_H, generators and predicted cover rank equal 2^(t+n)");
        add(out, "sfh-symmetry", symmetric, "dim(A,M) = dim(-A-p, M-2A-p)");
    });

    guarded(out, "abutment", [&] {
        const auto ss = spectral::compute(*fc, 0, 1);
        const auto total = khovanov::total_homology(*fc, 1);
        add(out, "abutment", forget_k(ss.infinity) == total,
            "E_inf at page " + std::to_string(ss.stable_at) + ", total " + std::to_string(total.total()));
    });

    guarded(out, "summand", [&] {
        const auto rep = tangle::summand_check(*fc, 1);
        add(out, "summand", rep.tangle_dims == rep.annular_dims,
            std::string(rep.verdict == tangle::Verdict::summand ? "Summand, " : "Trivial, ") + rep.certificate);
    });

    guarded(out, "cut-glue", [&] {
        add(out, "cut-glue", to_json(tangle::glue(tangle::cut(d))) == to_json(d));
    });

    guarded(out, "finger-move", [&] {
        if (d.edges().empty() && d.free_loops().empty()) {
            add(out, "finger-move", true, "empty diagram");
            return;
        }
        const AnnularDiagram moved = finger_move(d, 0, 1);
        const auto mc = khovanov::build_complex(moved, {1, true});
        const auto rep = tangle::summand_check(mc, 1);
        const bool same = khovanov::annular_homology(mc, 1) == h;
        add(out, "finger-move", rep.verdict == tangle::Verdict::trivial && same,
            std::string(rep.verdict == tangle::Verdict::trivial ? "Trivial" : "Summand") +
                (same ? ", annular homology unchanged" : ", annular homology changed"));
    });

    guarded(out, "euler", [&] {
        const auto chain = khovanov::euler_characteristic(fc->graded().chain_dims());
        const auto hom = khovanov::euler_characteristic(h);
        add(out, "euler", chain == hom, hom.to_string());
    });

    guarded(out, "ray-direction", [&] {
        add(out, "ray-direction", khovanov::annular_homology(negate_windings(d), 1) == h);
    });

    if (!d.isotopic_to().empty()) {
        guarded(out, "isotopy", [&] {
            auto it = by_name.find(d.isotopic_to());
            if (it == by_name.end()) {
                add(out, "isotopy", false, "no diagram named '" + d.isotopic_to() + "'");
                return;
            }
            add(out, "isotopy", khovanov::annular_homology(*it->second, 1) == h, "against " + d.isotopic_to());
        });
    }
    return out;
}

}  // namespace

Report cmd_check(const std::string& dir, const Options& o) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw InputError("cannot read corpus directory '" + dir + "'");
    std::vector<Entry> entries;
    for (const auto& item : fs::directory_iterator(dir, ec))
        if (item.is_regular_file() && item.path().extension() == ".json") entries.push_back({item.path(), {}, {}, {}});
    if (ec) throw InputError("cannot read corpus directory '" + dir + "': " + ec.message());
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.path < b.path; });

    Report r;
    r.diagram = dir;
    r.command = "check";
    if (entries.empty()) {
        r.warnings.push_back("no diagrams found in '" + dir + "'");
        r.details["diagrams"] = 0;
        return r;
    }

    for (Entry& e : entries) {
        try {
            e.diagram = load_diagram(e.path.string());
            if (e.diagram->name().empty()) e.diagram->set_name(e.path.stem().string());
        } catch (const DiagramError& err) {
            e.error = err.what();
            e.kind = err.kind();
        }
    }
    std::map<std::string, const AnnularDiagram*> by_name;
    for (const Entry& e : entries)
        if (e.diagram) {
            by_name.emplace(e.diagram->name(), &*e.diagram);
            by_name.emplace(e.path.stem().string(), &*e.diagram);
        }

    std::vector<Checks> results(entries.size());
    parallel_for(entries.size(), o.threads, [&](std::size_t x) {
        const Entry& e = entries[x];
        if (!e.diagram) {
            const bool orientation = e.kind == DiagramError::Kind::orientation;
            add(results[x], orientation ? "orientation-consistency" : "well-formed", false, e.error);
            return;
        }
        add(results[x], "well-formed", true);
        Checks more = properties(*e.diagram, by_name);
        results[x].insert(results[x].end(), more.begin(), more.end());
    });

    std::size_t failed = 0;
    for (std::size_t x = 0; x < entries.size(); ++x) {
        const std::string stem = entries[x].path.stem().string();
        bool ok = true;
        for (Check& c : results[x]) {
            ok = ok && c.pass;
            r.check(stem + " " + c.name, c.pass, std::move(c.detail));
        }
        failed += ok ? 0 : 1;
    }
    r.details["diagrams"] = entries.size();
    r.details["failed_diagrams"] = failed;
    return r;
}

}  // namespace annularkh::cli
