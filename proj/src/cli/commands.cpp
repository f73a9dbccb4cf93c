#include "annularkh/cli.hpp"
#include "annularkh/sfh.hpp"
#include "annularkh/spectral.hpp"
#include "annularkh/tangle.hpp"

namespace annularkh::cli {
namespace {

khovanov::FilteredComplex build(const AnnularDiagram& d, const Options& o) {
    return khovanov::build_complex(d, {o.threads, true});
}

Report start(const AnnularDiagram& d, const char* command) {
    Report r;
    r.diagram = d.name();
    r.command = command;
    return r;
}

json page_json(const spectral::Page& p) {
    return {{"r", p.r}, {"total", p.dims.total()}, {"differential_nonzero", p.differential_nonzero}, {"dims", dims_rows(p.dims)}};
}

}  // namespace

Report cmd_kh(const std::string& path, const Options& o) {
    const AnnularDiagram d = load_diagram(path);
    Report r = start(d, "kh");
    const auto fc = build(d, o);
    const TrigradedDims h = khovanov::annular_homology(fc, o.threads);
    r.details["crossings"] = d.crossing_count();
    r.details["n_plus"] = d.positive_crossings();
    r.details["n_minus"] = d.negative_crossings();
    r.details["generators"] = fc.size();
    r.details["total_dim"] = h.total();
    r.columns = {"i", "j", "k", "dim"};
    r.dims = dims_rows(h);
    r.polynomials["annular"] = poincare(h);
    r.check("chain-complex", true, "D and its graded part square to zero and respect the gradings");
    return r;
}

Report cmd_ss(const std::string& path, const Options& o) {
    const AnnularDiagram d = load_diagram(path);
    Report r = start(d, "ss");
    const auto fc = build(d, o);
    const auto ss = spectral::compute(fc, o.r_max, o.threads);
    const BigradedDims total = khovanov::total_homology(fc, o.threads);

    json pages = json::array();
    for (const auto& p : ss.pages) pages.push_back(page_json(p));
    r.details["stable"] = ss.stable_at > 0;
    r.details["stable_at"] = ss.stable_at;
    r.details["pages"] = pages;
    r.columns = {"i", "j", "k", "dim"};
    r.dims = dims_rows(ss.infinity);
    if (!ss.pages.empty()) r.polynomials["E1"] = poincare(ss.pages.front().dims);
    r.polynomials["Einf"] = poincare(ss.infinity);
    r.polynomials["Kh"] = poincare(total);
    const bool abut = forget_k(ss.infinity) == total;
    r.check("abutment", abut,
            "sum over k of E_inf has total " + std::to_string(ss.infinity.total()) + ", Kh has " + std::to_string(total.total()));
    return r;
}

Report cmd_sfh(const std::string& path, const Options& o) {
    const AnnularDiagram d = load_diagram(path);
    if (o.bits.size() != d.crossing_count())
        throw InputError("resolution length " + std::to_string(o.bits.size()) + " does not match " +
                         std::to_string(d.crossing_count()) + " crossings");
    Resolution bits;
    try {
        bits = Resolution::parse(o.bits);
    } catch (const std::exception& e) {
        throw InputError(std::string("bits: ") + e.what());
    }
    Report r = start(d, "sfh");
    const ResolvedDiagram res = resolve(d, bits);
    const sfh::VHSpace v = sfh::v_h(res);
    const khovanov::VertexSpace kh(res);
    const auto pred = sfh::predicted_ranks(res);

    r.details["resolution"] = bits.to_string();
    r.details["t"] = v.t();
    r.details["n"] = v.n();
    r.details["p"] = v.p();
    r.details["rank"] = std::size_t{1} << (v.t() + v.n());
    json kh_rows = json::array();
    std::map<std::pair<int, int>, std::size_t> fq;
    for (std::uint32_t m = 0; m < kh.size(); ++m) fq[{kh.f(m), kh.q(m)}]++;
    for (auto it = fq.rbegin(); it != fq.rend(); ++it)
        kh_rows.push_back({{"f", it->first.first}, {"q", it->first.second}, {"dim", it->second}});
    r.details["khovanov"] = kh_rows;
    r.details["predicted"] = {{"cover_rank", pred.cover_rank},
                              {"hf_rank", pred.hf_rank},
                              {"hfk_rank", pred.hfk_rank},
                              {"theta_factor", pred.theta_factor},
                              {"associated_graded", pred.associated_graded},
                              {"limit", pred.limit_shape},
                              {"limit_alternate", pred.limit_shape_alternate},
                              {"shift_ambiguous", pred.shift_ambiguous}};

    r.columns = {"A", "M", "dim"};
    const auto dims = v.dims();
    for (auto it = dims.rbegin(); it != dims.rend(); ++it)
        r.dims.push_back({{"A", it->first.a.to_string()}, {"M", it->first.m.to_string()}, {"dim", it->second}});

    const auto eq = sfh::check_equivalence(res);
    r.check("equivalence", eq.pass, eq.pass ? std::to_string(eq.generators) + " generators under A=(f-p)/2, M=(q-p)/2" : eq.mismatch);
    const std::size_t expected = std::size_t{1} << (v.t() + v.n());
    r.check("rank-law", v.size() == expected && kh.size() == expected && pred.cover_rank == expected,
            "2^(t+n) = " + std::to_string(expected));
    r.check("symmetry", sfh::symmetric(v), "dim(A,M) = dim(-A-p, M-2A-p)");
    return r;
}

Report cmd_cut(const std::string& path, const Options& o) {
    const AnnularDiagram d = load_diagram(path);
    const tangle::TangleDiagram t = tangle::cut(d);
    Report r = start(d, "cut");
    const auto fc = build(d, o);
    r.details["n"] = t.n();
    r.columns = {"i", "j", "dim"};
    try {
        const auto rep = tangle::summand_check(fc, o.threads);
        r.details["resolutions"] = rep.resolutions;
        r.details["backtracking"] = rep.backtracking;
        r.details["verdict"] = rep.verdict == tangle::Verdict::summand ? "Summand" : "Trivial";
        r.details["certificate"] = rep.certificate;
        json cmp = json::array();
        std::map<BiDegree, std::pair<std::size_t, std::size_t>> side;
        for (const auto& [deg, dim] : rep.tangle_dims) side[deg].first = dim;
        for (const auto& [deg, dim] : rep.annular_dims) side[deg].second = dim;
        for (const auto& [deg, dims] : side)
            cmp.push_back({{"i", deg.i}, {"j", deg.j}, {"tangle", dims.first}, {"annular_k_n", dims.second}});
        r.details["comparison"] = cmp;
        r.dims = dims_rows(rep.tangle_dims);
        r.polynomials["tangle"] = poincare(rep.tangle_dims);
        r.check("summand", true, rep.certificate);
        r.check("k=n-dims", rep.tangle_dims == rep.annular_dims,
                "tangle total " + std::to_string(rep.tangle_dims.total()) + ", annular k=n total " +
                    std::to_string(rep.annular_dims.total()));
    } catch (const tangle::SummandError& e) {
        r.check("summand", false, e.what());
    }
    r.check("glue", to_json(tangle::glue(t)) == to_json(d), "gluing the cut recovers the diagram");
    return r;
}

Report cmd_euler(const std::string& path, const Options& o) {
    const AnnularDiagram d = load_diagram(path);
    Report r = start(d, "euler");
    const auto fc = build(d, o);
    const TrigradedDims h = khovanov::annular_homology(fc, o.threads);
    const auto chain = khovanov::euler_characteristic(fc.graded().chain_dims());
    const auto homology = khovanov::euler_characteristic(h);
    r.columns = {"i", "j", "k", "dim"};
    r.dims = dims_rows(h);
    r.polynomials["chain"] = chain.to_string();
    r.polynomials["homology"] = homology.to_string();
    r.check("euler", chain == homology, "chain-level and homology-level characteristics in t, q");
    return r;
}

}  // namespace annularkh::cli
