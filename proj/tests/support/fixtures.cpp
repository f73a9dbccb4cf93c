#include "support/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <stdexcept>

namespace fixtures {

using namespace annularkh;

std::string corpus_dir() { return ANNULARKH_CORPUS_DIR; }
std::string fixture_dir() { return ANNULARKH_FIXTURE_DIR; }

const std::vector<AnnularDiagram>& corpus() {
    static const std::vector<AnnularDiagram> all = [] {
        std::vector<std::string> paths;
        for (const auto& entry : std::filesystem::directory_iterator(corpus_dir()))
            if (entry.is_regular_file() && entry.path().extension() == ".json") paths.push_back(entry.path().string());
        std::sort(paths.begin(), paths.end());
        std::vector<AnnularDiagram> out;
        for (const auto& p : paths) out.push_back(load_diagram(p));
        return out;
    }();
    return all;
}

const AnnularDiagram& corpus_entry(const std::string& name) {
    for (const auto& d : corpus())
        if (d.name() == name) return d;
    throw std::out_of_range("no corpus diagram named " + name);
}

AnnularDiagram sigma1_closure() { return braid_closure(2, {1}, "sigma1_closure"); }

AnnularDiagram right_trefoil() {
    AnnularDiagram d = braid_closure(2, {1, 1, 1}, "trefoil_right");
    return place_axis(d, 0, 0);
}

oracle::PD left_trefoil_pd() {
    oracle::PD pd;
    pd.crossings = {{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}};
    pd.signs = oracle::signs_from_consecutive_labels(pd.crossings);
    return pd;
}

oracle::PD to_pd(const AnnularDiagram& d) {
    oracle::PD pd;
    for (std::size_t x = 0; x < d.crossings().size(); ++x) {
        const auto& c = d.crossings()[x];
        std::array<int, 4> labels{};
        for (int s = 0; s < 4; ++s) labels[static_cast<std::size_t>(s)] = static_cast<int>(c.edges[static_cast<std::size_t>(s)]) + 1;
        pd.crossings.push_back(labels);
        // the over-strand enters through d for a positive crossing
        const Edge& at_d = d.edges()[c.edges[3]];
        pd.signs.push_back(at_d.to == SlotRef{x, 3} ? 1 : -1);
    }
    for (std::size_t e = 0; e < d.edges().size(); ++e)
        if (d.edges()[e].winding != 0) pd.windings[static_cast<int>(e) + 1] = d.edges()[e].winding;
    for (const auto& l : d.free_loops()) (l.winding == 0 ? pd.free_loops_trivial : pd.free_loops_nontrivial)++;
    return pd;
}

oracle::Bigraded to_map(const BigradedDims& dims) {
    oracle::Bigraded out;
    for (const auto& [deg, d] : dims) out[{deg.i, deg.j}] = static_cast<int>(d);
    return out;
}

oracle::Trigraded to_map(const TrigradedDims& dims) {
    oracle::Trigraded out;
    for (const auto& [deg, d] : dims) out[{deg.i, deg.j, deg.k}] = static_cast<int>(d);
    return out;
}

oracle::Bigraded negated(const oracle::Bigraded& h) {
    oracle::Bigraded out;
    for (const auto& [key, d] : h) out[{-key.first, -key.second}] = d;
    return out;
}

oracle::Trigraded negated(const oracle::Trigraded& h) {
    oracle::Trigraded out;
    for (const auto& [key, d] : h) out[{-std::get<0>(key), -std::get<1>(key), -std::get<2>(key)}] = d;
    return out;
}

}  // namespace fixtures
