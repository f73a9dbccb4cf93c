#include "annularkh/tangle.hpp"

#include <cstdlib>
#include <map>

namespace annularkh::tangle {
namespace {

SegmentEnd slot_end(SlotRef s) {
    SegmentEnd e;
    e.kind = SegmentEnd::Kind::slot;
    e.slot = s;
    return e;
}

SegmentEnd boundary_end(Side side, std::size_t index) {
    SegmentEnd e;
    e.kind = SegmentEnd::Kind::boundary;
    e.point = {side, index};
    return e;
}

// A strand crossing point `index` with sign s ends on the side it leaves
// through and the next piece starts on the opposite disk.
SegmentEnd arriving(int sign, std::size_t index) { return boundary_end(sign > 0 ? Side::top : Side::bottom, index); }
SegmentEnd leaving(int sign, std::size_t index) { return boundary_end(sign > 0 ? Side::bottom : Side::top, index); }

}  // namespace

TangleDiagram cut(const AnnularDiagram& d) {
    for (std::size_t c = 0; c < d.crossings().size(); ++c)
        if (d.crossings()[c].on_lambda)
            throw DiagramError(DiagramError::Kind::unsupported, "crossings[" + d.crossings()[c].id + "]",
                               "crossing lies on the ray; cutting needs the ray to miss every crossing");
    TangleDiagram t;
    t.parent_ = d;
    std::size_t next = 1;
    for (std::size_t e = 0; e < d.edges().size(); ++e) {
        const Edge& edge = d.edges()[e];
        SegmentEnd from = slot_end(edge.from);
        std::size_t part = 0;
        for (int s : edge.lambda) {
            const std::size_t index = next++;
            t.segments_.push_back({e, false, part++, from, arriving(s, index)});
            from = leaving(s, index);
        }
        t.segments_.push_back({e, false, part, from, slot_end(edge.to)});
    }
    for (std::size_t l = 0; l < d.free_loops().size(); ++l) {
        const FreeLoop& loop = d.free_loops()[l];
        if (loop.lambda.empty()) {
            t.segments_.push_back({l, true, 0, SegmentEnd{}, SegmentEnd{}});
            continue;
        }
        const std::size_t first = next;
        const std::size_t m = loop.lambda.size();
        next += m;
        // Piece p runs from point p-1 to point p, the first one wrapping around.
        for (std::size_t p = 0; p < m; ++p) {
            const std::size_t prev = (p + m - 1) % m;
            t.segments_.push_back({l, true, p, leaving(loop.lambda[prev], first + prev), arriving(loop.lambda[p], first + p)});
        }
    }
    t.n_ = next - 1;
    return t;
}

AnnularDiagram glue(const TangleDiagram& t) {
    const AnnularDiagram& p = t.parent();
    std::vector<Edge> edges = p.edges();
    std::vector<FreeLoop> loops = p.free_loops();
    for (auto& e : edges) e.lambda.clear();
    for (auto& l : loops) l.lambda.clear();

    auto sign_of = [](const SegmentEnd& end) {
        if (end.kind != SegmentEnd::Kind::boundary) throw std::logic_error("glue: segment does not end on the boundary");
        return end.point.side == Side::top ? 1 : -1;
    };
    for (const Segment& s : t.segments()) {
        if (s.to.kind != SegmentEnd::Kind::boundary) continue;
        auto& lambda = s.from_loop ? loops[s.parent].lambda : edges[s.parent].lambda;
        lambda.push_back(sign_of(s.to));
    }
    for (auto& e : edges) {
        int w = 0;
        for (int s : e.lambda) w += s;
        e.winding = w;
    }
    for (auto& l : loops) {
        int w = 0;
        for (int s : l.lambda) w += s;
        l.winding = w;
    }
    // Crossing signs are derived again by the constructor.
    std::vector<Crossing> crossings = p.crossings();
    for (auto& c : crossings) c.sign = 0;
    AnnularDiagram out(p.name(), std::move(crossings), std::move(edges), std::move(loops));
    out.set_isotopic_to(p.isotopic_to());
    return out;
}

TangleResolution resolve(const TangleDiagram& t, const Resolution& r) {
    if (r.size() != t.crossing_count())
        throw std::invalid_argument("resolution has " + std::to_string(r.size()) + " bits for " +
                                    std::to_string(t.crossing_count()) + " crossings");
    const auto& segs = t.segments();
    const auto& crossings = t.parent().crossings();
    // (segment, end) attached to each crossing slot and boundary point; end 0 is `from`.
    std::vector<std::array<std::pair<std::size_t, int>, 4>> at_slot(crossings.size());
    std::map<std::pair<int, std::size_t>, std::pair<std::size_t, int>> at_point;
    for (std::size_t s = 0; s < segs.size(); ++s)
        for (int end = 0; end < 2; ++end) {
            const SegmentEnd& e = end == 0 ? segs[s].from : segs[s].to;
            if (e.kind == SegmentEnd::Kind::slot)
                at_slot[e.slot.crossing][static_cast<std::size_t>(e.slot.slot)] = {s, end};
            else if (e.kind == SegmentEnd::Kind::boundary)
                at_point[{static_cast<int>(e.point.side), e.point.index}] = {s, end};
        }

    TangleResolution out;
    out.resolution = r;
    std::vector<char> seen(segs.size(), 0);
    // Walks from the given end of `s` through the opposite end, across
    // smoothings, until a boundary point or the start is reached.
    auto walk = [&](std::size_t s, int end, std::vector<std::size_t>& path) -> const SegmentEnd* {
        const std::size_t start = s;
        for (;;) {
            seen[s] = 1;
            path.push_back(s);
            const SegmentEnd& exit = end == 0 ? segs[s].to : segs[s].from;
            if (exit.kind != SegmentEnd::Kind::slot) return &exit;
            const int partner = smoothing_partner(exit.slot.slot, r[exit.slot.crossing]);
            const auto [next, next_end] = at_slot[exit.slot.crossing][static_cast<std::size_t>(partner)];
            s = next;
            end = next_end;
            if (s == start) return nullptr;
        }
    };

    for (const auto& [key, where] : at_point) {
        if (seen[where.first]) continue;
        const SegmentEnd& entry = where.second == 0 ? segs[where.first].from : segs[where.first].to;
        Arc arc;
        arc.first = entry.point;
        const SegmentEnd* exit = walk(where.first, where.second, arc.segments);
        if (!exit || exit->kind != SegmentEnd::Kind::boundary) throw std::logic_error("tangle arc does not end on the boundary");
        arc.last = exit->point;
        out.backtracking = out.backtracking || arc.first.side == arc.last.side;
        out.arcs.push_back(std::move(arc));
    }
    for (std::size_t s = 0; s < segs.size(); ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> path;
        if (walk(s, 0, path) && segs[s].from.kind != SegmentEnd::Kind::closed)
            throw std::logic_error("closed tangle component reached the boundary");
        out.closed.push_back(std::move(path));
    }
    return out;
}

bool parent_backtracks(const ResolvedDiagram& r) {
    for (const Circle& c : r.circles)
        if (c.lambda_points > static_cast<std::size_t>(std::abs(c.winding))) return true;
    return false;
}

}  // namespace annularkh::tangle
