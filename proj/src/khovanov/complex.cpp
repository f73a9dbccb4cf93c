#include "annularkh/khovanov.hpp"
#include "annularkh/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace annularkh::khovanov {

FilteredComplex build_complex(const AnnularDiagram& d, const BuildOptions& options) {
    const std::size_t ell = d.crossing_count();
    if (ell > 24) throw DiagramError(DiagramError::Kind::unsupported, d.name(), "too many crossings for the cube");
    const std::size_t nv = std::size_t{1} << ell;

    FilteredComplex out;
    out.diagram_ = d;
    out.vertices_.resize(nv);
    parallel_for(nv, options.threads, [&](std::size_t v) {
        Vertex& vx = out.vertices_[v];
        vx.resolved = resolve(d, Resolution(ell, v));
        vx.space = VertexSpace(vx.resolved);
    });
    std::size_t total = 0;
    for (auto& vx : out.vertices_) {
        vx.offset = total;
        total += vx.space.size();
    }
    if (total > std::size_t{UINT32_MAX}) throw std::length_error("complex too large");

    std::vector<Degree> degrees(total);
    const std::size_t np = d.positive_crossings(), nm = d.negative_crossings();
    parallel_for(nv, options.threads, [&](std::size_t v) {
        const Vertex& vx = out.vertices_[v];
        const std::size_t weight = static_cast<std::size_t>(std::popcount(v));
        for (std::uint32_t m = 0; m < vx.space.size(); ++m)
            degrees[vx.offset + m] = generator_degree(vx.space, m, weight, np, nm);
    });

    // Per vertex: CSC fragments for D and the graded part.
    struct Fragment {
        std::vector<std::uint32_t> count, graded_count;
        std::vector<std::uint32_t> rows, graded_rows;
    };
    std::vector<Fragment> frags(nv);
    std::atomic<std::size_t> merges{0}, splits{0};
    parallel_for(nv, options.threads, [&](std::size_t v) {
        const Vertex& src = out.vertices_[v];
        std::vector<std::pair<std::size_t, Saddle>> saddles;
        for (std::size_t c = 0; c < ell; ++c) {
            if ((v >> c) & 1u) continue;
            const std::size_t w = v | (std::size_t{1} << c);
            saddles.emplace_back(w, saddle_between(src.resolved, out.vertices_[w].resolved));
            (saddles.back().second.kind == SaddleKind::merge ? merges : splits)++;
        }
        Fragment& fr = frags[v];
        const std::size_t n = src.space.size();
        fr.count.resize(n);
        fr.graded_count.resize(n);
        std::vector<std::pair<std::uint32_t, bool>> col;
        std::uint32_t img[2];
        for (std::uint32_t m = 0; m < n; ++m) {
            col.clear();
            const int f = src.space.f(m);
            for (const auto& [w, s] : saddles) {
                const Vertex& dst = out.vertices_[w];
                const int k = saddle_image(s, m, img);
                for (int i = 0; i < k; ++i)
                    col.emplace_back(static_cast<std::uint32_t>(dst.offset + img[i]), dst.space.f(img[i]) == f);
            }
            std::sort(col.begin(), col.end());
            fr.count[m] = static_cast<std::uint32_t>(col.size());
            std::uint32_t g = 0;
            for (const auto& [row, graded] : col) {
                fr.rows.push_back(row);
                if (graded) {
                    fr.graded_rows.push_back(row);
                    ++g;
                }
            }
            fr.graded_count[m] = g;
        }
    });
    out.merges_ = merges.load();
    out.splits_ = splits.load();

    auto assemble = [&](bool graded) {
        std::vector<std::size_t> ptr(total + 1, 0);
        std::size_t nnz = 0;
        for (const auto& fr : frags) nnz += graded ? fr.graded_rows.size() : fr.rows.size();
        std::vector<std::uint32_t> idx;
        idx.reserve(nnz);
        std::size_t col = 0;
        for (const auto& fr : frags) {
            const auto& counts = graded ? fr.graded_count : fr.count;
            const auto& rows = graded ? fr.graded_rows : fr.rows;
            idx.insert(idx.end(), rows.begin(), rows.end());
            for (std::uint32_t c : counts) {
                ptr[col + 1] = ptr[col] + c;
                ++col;
            }
        }
        return gf2::SparseMatrixF2(total, total, std::move(ptr), std::move(idx));
    };
    auto graded = assemble(true);
    auto full = assemble(false);
    frags.clear();
    frags.shrink_to_fit();
    out.graded_ = GradedComplex(degrees, std::move(graded));
    out.total_ = GradedComplex(std::move(degrees), std::move(full));
    if (options.verify) {
        out.total_.validate({0, 2});
        out.graded_.validate({0});
    }
    return out;
}

std::pair<std::size_t, std::uint32_t> FilteredComplex::locate(std::size_t g) const {
    auto it = std::upper_bound(vertices_.begin(), vertices_.end(), g,
                               [](std::size_t value, const Vertex& v) { return value < v.offset; });
    const std::size_t v = static_cast<std::size_t>(it - vertices_.begin()) - 1;
    return {v, static_cast<std::uint32_t>(g - vertices_[v].offset)};
}

std::string FilteredComplex::generator_id(std::size_t g) const {
    const auto [v, mask] = locate(g);
    const Vertex& vx = vertices_[v];
    std::string id = vx.resolved.resolution.to_string() + ":{";
    bool first = true;
    for (std::size_t c = 0; c < vx.resolved.circles.size(); ++c) {
        if (!((mask >> c) & 1u)) continue;
        if (!first) id += ",";
        id += vx.resolved.circles[c].label;
        first = false;
    }
    return id + "}";
}

TrigradedDims annular_homology(const FilteredComplex& c, std::size_t threads) {
    return homology_dims(c.graded(), threads);
}

TrigradedDims annular_homology(const AnnularDiagram& d, std::size_t threads) {
    return annular_homology(build_complex(d, {threads, true}), threads);
}

BigradedDims total_homology(const FilteredComplex& c, std::size_t threads) {
    return homology_dims_ij(c.complex(), threads);
}

BigradedDims total_homology(const AnnularDiagram& d, std::size_t threads) {
    return total_homology(build_complex(d, {threads, true}), threads);
}

}  // namespace annularkh::khovanov
