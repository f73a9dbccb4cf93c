#include "annularkh/parallel.hpp"
#include "annularkh/tangle.hpp"

#include <algorithm>
#include <bit>

namespace annularkh::tangle {
namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Component of each segment at a vertex: closed components by index, arcs
// encoded as -1 - arc index.
std::vector<long> component_of(const TangleResolution& v, std::size_t segments) {
    std::vector<long> out(segments, 0);
    for (std::size_t a = 0; a < v.arcs.size(); ++a)
        for (std::size_t s : v.arcs[a].segments) out[s] = -1 - static_cast<long>(a);
    for (std::size_t c = 0; c < v.closed.size(); ++c)
        for (std::size_t s : v.closed[c]) out[s] = static_cast<long>(c);
    return out;
}

// Components meeting crossing x at a vertex, without repeats.
std::vector<long> touching(const TangleDiagram& t, const std::vector<long>& comp, std::size_t x) {
    std::vector<long> out;
    for (std::size_t s = 0; s < t.segments().size(); ++s) {
        const Segment& seg = t.segments()[s];
        for (const SegmentEnd* e : {&seg.from, &seg.to})
            if (e->kind == SegmentEnd::Kind::slot && e->slot.crossing == x &&
                std::find(out.begin(), out.end(), comp[s]) == out.end())
                out.push_back(comp[s]);
    }
    return out;
}

// Saddle at crossing x between two non-backtracking vertices, as a rule on
// masks over closed components.
class Move {
public:
    Move(const TangleDiagram& t, const TangleResolution& src, const TangleResolution& dst, std::size_t x) {
        const std::size_t nseg = t.segments().size();
        const auto cs = component_of(src, nseg);
        const auto cd = component_of(dst, nseg);
        from_ = touching(t, cs, x);
        to_ = touching(t, cd, x);
        for (std::size_t c = 0; c < src.closed.size(); ++c)
            if (std::find(from_.begin(), from_.end(), static_cast<long>(c)) == from_.end())
                carried_.emplace_back(static_cast<unsigned>(c), static_cast<unsigned>(cd[src.closed[c].front()]));
        const bool merge = from_.size() == 2 && to_.size() == 1;
        const bool split = from_.size() == 1 && to_.size() == 2;
        if (!merge && !split) throw std::logic_error("saddle between non-backtracking tangle resolutions joins two arcs");
        if (split && from_[0] < 0) {
            if ((to_[0] < 0) == (to_[1] < 0)) throw std::logic_error("arc split must shed exactly one closed component");
        } else if (split && (to_[0] < 0 || to_[1] < 0)) {
            throw std::logic_error("closed component split into an arc");
        }
    }

    /// Writes up to two images of `mask`; returns how many.
    int apply(std::uint32_t mask, std::uint32_t out[2]) const {
        std::uint32_t rest = 0;
        for (const auto& [c, image] : carried_)
            if ((mask >> c) & 1u) rest |= 1u << image;
        auto marked = [&](long c) { return c >= 0 && ((mask >> c) & 1u); };

        if (to_.size() == 1) {
            const bool m0 = marked(from_[0]), m1 = marked(from_[1]);
            if (m0 && m1) return 0;
            if (to_[0] < 0) {
                // A closed circle merged into an arc survives only unmarked.
                if (m0 || m1) return 0;
                out[0] = rest;
                return 1;
            }
            out[0] = (m0 || m1) ? rest | (1u << to_[0]) : rest;
            return 1;
        }
        if (from_[0] < 0) {
            // An arc sheds a closed circle, which comes out marked.
            out[0] = rest | (1u << (to_[0] >= 0 ? to_[0] : to_[1]));
            return 1;
        }
        if (marked(from_[0])) {
            out[0] = rest | (1u << to_[0]) | (1u << to_[1]);
            return 1;
        }
        out[0] = rest | (1u << to_[0]);
        out[1] = rest | (1u << to_[1]);
        return 2;
    }

private:
    std::vector<long> from_;
    std::vector<long> to_;
    std::vector<std::pair<unsigned, unsigned>> carried_;
};

}  // namespace

std::pair<std::size_t, std::uint32_t> TangleComplex::locate(std::size_t g) const {
    for (std::size_t v = vertices_.size(); v-- > 0;)
        if (offsets_[v] != npos && offsets_[v] <= g) return {v, static_cast<std::uint32_t>(g - offsets_[v])};
    throw std::out_of_range("generator index out of range");
}

TangleComplex build_complex(const TangleDiagram& t, std::size_t threads) {
    const std::size_t ell = t.crossing_count();
    if (ell > 24) throw std::invalid_argument("tangle complex supports at most 24 crossings");
    const std::size_t count = std::size_t{1} << ell;
    TangleComplex out;
    out.vertices_.resize(count);
    parallel_for(count, threads, [&](std::size_t v) { out.vertices_[v] = resolve(t, Resolution(ell, v)); });

    out.offsets_.assign(count, npos);
    std::size_t total = 0;
    for (std::size_t v = 0; v < count; ++v) {
        if (out.vertices_[v].backtracking) {
            ++out.backtracking_;
            continue;
        }
        if (out.vertices_[v].closed.size() > 31) throw std::invalid_argument("too many closed components");
        out.offsets_[v] = total;
        total += std::size_t{1} << out.vertices_[v].closed.size();
    }

    const int n_plus = static_cast<int>(t.parent().positive_crossings());
    const int n_minus = static_cast<int>(t.parent().negative_crossings());
    const int n = static_cast<int>(t.n());
    std::vector<Degree> degrees(total);
    std::vector<std::vector<std::uint32_t>> columns(total);
    parallel_for(count, threads, [&](std::size_t v) {
        if (out.offsets_[v] == npos) return;
        const TangleResolution& src = out.vertices_[v];
        const int weight = std::popcount(v);
        std::vector<std::pair<std::size_t, Move>> moves;
        for (std::size_t x = 0; x < ell; ++x) {
            if ((v >> x) & 1u) continue;
            const std::size_t w = v | (std::size_t{1} << x);
            if (out.offsets_[w] != npos) moves.emplace_back(out.offsets_[w], Move(t, src, out.vertices_[w], x));
        }
        const int closed = static_cast<int>(src.closed.size());
        const std::uint32_t size = 1u << src.closed.size();
        for (std::uint32_t mask = 0; mask < size; ++mask) {
            const std::size_t g = out.offsets_[v] + mask;
            degrees[g] = {weight - n_plus, closed - 2 * std::popcount(mask) + n + weight + n_minus - 2 * n_plus, n};
            for (const auto& [offset, move] : moves) {
                std::uint32_t image[2];
                const int k = move.apply(mask, image);
                for (int m = 0; m < k; ++m) columns[g].push_back(static_cast<std::uint32_t>(offset + image[m]));
            }
        }
    });
    out.complex_ = GradedComplex(std::move(degrees), gf2::SparseMatrixF2::from_columns(total, columns));
    out.complex_.validate({0});
    return out;
}

BigradedDims tangle_homology(const TangleComplex& c, std::size_t threads) { return homology_dims_ij(c.complex(), threads); }

BigradedDims tangle_homology(const TangleDiagram& t, std::size_t threads) {
    return tangle_homology(build_complex(t, threads), threads);
}

}  // namespace annularkh::tangle
