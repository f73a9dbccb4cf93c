#include "annularkh/diagram.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <unordered_set>

namespace annularkh {
namespace {

using Kind = DiagramError::Kind;

AnnularDiagram rebuild(const AnnularDiagram& d, std::vector<Crossing> crossings, std::vector<Edge> edges,
                       std::vector<FreeLoop> loops) {
    AnnularDiagram out(d.name(), std::move(crossings), std::move(edges), std::move(loops));
    out.set_isotopic_to(d.isotopic_to());
    return out;
}

std::string fresh_id(const std::unordered_set<std::string>& used, const std::string& base) {
    for (int n = 1;; ++n) {
        std::string id = base + std::to_string(n);
        if (!used.count(id)) return id;
    }
}

}  // namespace

AnnularDiagram mirror(const AnnularDiagram& d) {
    std::vector<Crossing> crossings = d.crossings();
    std::vector<Edge> edges = d.edges();
    // Positive: (a,b,c,d) -> (d,a,b,c). Negative: (a,b,c,d) -> (b,c,d,a).
    for (auto& c : crossings) {
        const auto old = c.edges;
        const int shift = c.sign > 0 ? 1 : 3;
        for (int s = 0; s < 4; ++s) c.edges[static_cast<std::size_t>((s + shift) % 4)] = old[static_cast<std::size_t>(s)];
    }
    for (auto& e : edges)
        for (SlotRef* end : {&e.from, &e.to}) end->slot = (end->slot + (d.crossings()[end->crossing].sign > 0 ? 1 : 3)) % 4;
    return rebuild(d, std::move(crossings), std::move(edges), d.free_loops());
}

AnnularDiagram negate_windings(const AnnularDiagram& d) {
    std::vector<Edge> edges = d.edges();
    std::vector<FreeLoop> loops = d.free_loops();
    for (auto& e : edges) {
        e.winding = -e.winding;
        for (int& s : e.lambda) s = -s;
    }
    for (auto& l : loops) {
        l.winding = -l.winding;
        for (int& s : l.lambda) s = -s;
    }
    return rebuild(d, d.crossings(), std::move(edges), std::move(loops));
}

AnnularDiagram relabel(const AnnularDiagram& d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto permutation = [&](std::size_t n) {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    };
    const auto cp = permutation(d.crossings().size());  // new index of old crossing
    const auto ep = permutation(d.edges().size());
    const auto lp = permutation(d.free_loops().size());

    std::vector<Crossing> crossings(d.crossings().size());
    for (std::size_t x = 0; x < cp.size(); ++x) {
        Crossing c = d.crossings()[x];
        c.id = "x" + std::to_string(cp[x]);
        for (auto& e : c.edges) e = ep[e];
        crossings[cp[x]] = std::move(c);
    }
    std::vector<Edge> edges(d.edges().size());
    for (std::size_t e = 0; e < ep.size(); ++e) {
        Edge edge = d.edges()[e];
        edge.id = "s" + std::to_string(ep[e]);
        edge.from.crossing = cp[edge.from.crossing];
        edge.to.crossing = cp[edge.to.crossing];
        edges[ep[e]] = std::move(edge);
    }
    std::vector<FreeLoop> loops(d.free_loops().size());
    for (std::size_t l = 0; l < lp.size(); ++l) {
        FreeLoop loop = d.free_loops()[l];
        loop.id = "o" + std::to_string(lp[l]);
        loops[lp[l]] = std::move(loop);
    }
    return rebuild(d, std::move(crossings), std::move(edges), std::move(loops));
}

AnnularDiagram braid_closure(std::size_t strands, const std::vector<int>& word, std::string name) {
    if (strands == 0) throw std::invalid_argument("braid_closure: need at least one strand");
    struct Event {
        std::size_t crossing;
        int in_slot;
        int out_slot;
    };
    std::vector<std::vector<Event>> events(strands);
    std::vector<Crossing> crossings;
    for (std::size_t g = 0; g < word.size(); ++g) {
        const int gen = word[g];
        const std::size_t i = static_cast<std::size_t>(std::abs(gen));
        if (gen == 0 || i >= strands) throw std::invalid_argument("braid_closure: generator out of range");
        const std::size_t left = i - 1, right = i;
        const std::size_t x = crossings.size();
        Crossing c;
        c.id = "c" + std::to_string(x + 1);
        crossings.push_back(c);
        if (gen > 0) {
            // a = right in, b = right out, c = left out, d = left in
            events[right].push_back({x, 0, 1});
            events[left].push_back({x, 3, 2});
        } else {
            // a = left in, b = right in, c = right out, d = left out
            events[left].push_back({x, 0, 3});
            events[right].push_back({x, 1, 2});
        }
    }

    std::vector<Edge> edges;
    std::vector<FreeLoop> loops;
    for (std::size_t p = 0; p < strands; ++p) {
        const auto& ev = events[p];
        if (ev.empty()) {
            loops.push_back(FreeLoop{"u" + std::to_string(p + 1), 1, {}});
            continue;
        }
        for (std::size_t k = 0; k < ev.size(); ++k) {
            const Event& from = ev[k];
            const Event& to = ev[(k + 1) % ev.size()];
            const bool wraps = k + 1 == ev.size();
            Edge e;
            e.from = {from.crossing, from.out_slot};
            e.to = {to.crossing, to.in_slot};
            e.winding = wraps ? 1 : 0;
            edges.push_back(std::move(e));
        }
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        edges[e].id = "e" + std::to_string(e + 1);
        crossings[edges[e].from.crossing].edges[static_cast<std::size_t>(edges[e].from.slot)] = e;
        crossings[edges[e].to.crossing].edges[static_cast<std::size_t>(edges[e].to.slot)] = e;
    }
    return AnnularDiagram(std::move(name), std::move(crossings), std::move(edges), std::move(loops));
}

std::vector<std::vector<SlotRef>> faces(const AnnularDiagram& d) {
    if (d.crossing_count() == 0 || !d.free_loops().empty())
        throw DiagramError(Kind::unsupported, d.name(), "faces need a connected diagram with crossings and no free loops");
    const std::size_t n = d.crossing_count();
    std::vector<std::vector<int>> seen(n, std::vector<int>(4, -1));
    std::vector<std::vector<SlotRef>> out;
    for (std::size_t x = 0; x < n; ++x)
        for (int s = 0; s < 4; ++s) {
            if (seen[x][static_cast<std::size_t>(s)] >= 0) continue;
            std::vector<SlotRef> face;
            SlotRef dart{x, s};
            while (seen[dart.crossing][static_cast<std::size_t>(dart.slot)] < 0) {
                seen[dart.crossing][static_cast<std::size_t>(dart.slot)] = static_cast<int>(out.size());
                face.push_back(dart);
                const Edge& e = d.edges()[d.crossings()[dart.crossing].edges[static_cast<std::size_t>(dart.slot)]];
                const SlotRef other = e.from == dart ? e.to : e.from;
                dart = SlotRef{other.crossing, (other.slot + 3) % 4};
            }
            out.push_back(std::move(face));
        }
    if (out.size() != n + 2)
        throw DiagramError(Kind::unsupported, d.name(),
                           "diagram is not a connected planar projection (" + std::to_string(out.size()) + " faces for " +
                               std::to_string(n) + " crossings)");
    return out;
}

AnnularDiagram place_axis(const AnnularDiagram& d, std::size_t axis_face, std::size_t outer_face) {
    const auto fs = faces(d);
    if (axis_face >= fs.size() || outer_face >= fs.size()) throw std::invalid_argument("place_axis: face out of range");
    std::vector<std::vector<std::size_t>> face_of(d.crossing_count(), std::vector<std::size_t>(4));
    for (std::size_t f = 0; f < fs.size(); ++f)
        for (const SlotRef& dart : fs[f]) face_of[dart.crossing][static_cast<std::size_t>(dart.slot)] = f;

    std::vector<Edge> edges = d.edges();
    std::vector<std::size_t> left(edges.size()), right(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        left[e] = face_of[edges[e].from.crossing][static_cast<std::size_t>(edges[e].from.slot)];
        right[e] = face_of[edges[e].to.crossing][static_cast<std::size_t>(edges[e].to.slot)];
        edges[e].winding = 0;
        edges[e].lambda.clear();
    }

    // Breadth-first search over the dual graph; parent records the edge crossed.
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent_face(fs.size(), none), parent_edge(fs.size(), none);
    std::deque<std::size_t> queue{axis_face};
    parent_face[axis_face] = axis_face;
    while (!queue.empty()) {
        const std::size_t f = queue.front();
        queue.pop_front();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (left[e] == right[e]) continue;
            std::size_t g = none;
            if (left[e] == f) g = right[e];
            if (right[e] == f) g = left[e];
            if (g == none || parent_face[g] != none) continue;
            parent_face[g] = f;
            parent_edge[g] = e;
            queue.push_back(g);
        }
    }
    for (std::size_t f = outer_face; f != axis_face; f = parent_face[f]) {
        const std::size_t e = parent_edge[f];
        const int sign = parent_face[f] == left[e] ? 1 : -1;
        edges[e].winding += sign;
        edges[e].lambda.push_back(sign);
    }
    std::vector<Crossing> crossings = d.crossings();
    for (auto& c : crossings) c.on_lambda = false;
    return rebuild(d, std::move(crossings), std::move(edges), d.free_loops());
}

AnnularDiagram add_kink(const AnnularDiagram& d, std::size_t edge, KinkType type) {
    if (edge >= d.edges().size()) throw std::invalid_argument("add_kink: edge out of range");
    std::vector<Crossing> crossings = d.crossings();
    std::vector<Edge> edges = d.edges();
    std::unordered_set<std::string> used;
    for (const auto& c : crossings) used.insert(c.id);
    for (const auto& e : edges) used.insert(e.id);
    for (const auto& l : d.free_loops()) used.insert(l.id);

    const std::size_t x = crossings.size();
    const std::size_t e1 = edge, e2 = edges.size(), e3 = edges.size() + 1;
    const SlotRef end = edges[edge].to;

    Crossing c;
    c.id = fresh_id(used, "k");
    Edge loop, tail;
    loop.id = fresh_id(used, edges[edge].id + "_loop");
    tail.id = fresh_id(used, edges[edge].id + "_tail");
    tail.to = end;
    switch (type) {
        case KinkType::first_under_positive:
            c.edges = {e1, e3, e2, e2};
            edges[e1].to = {x, 0};
            loop.from = {x, 2}, loop.to = {x, 3};
            tail.from = {x, 1};
            break;
        case KinkType::first_under_negative:
            c.edges = {e1, e2, e2, e3};
            edges[e1].to = {x, 0};
            loop.from = {x, 2}, loop.to = {x, 1};
            tail.from = {x, 3};
            break;
        case KinkType::second_under_positive:
            c.edges = {e2, e2, e3, e1};
            edges[e1].to = {x, 3};
            loop.from = {x, 1}, loop.to = {x, 0};
            tail.from = {x, 2};
            break;
        case KinkType::second_under_negative:
            c.edges = {e2, e1, e3, e2};
            edges[e1].to = {x, 1};
            loop.from = {x, 3}, loop.to = {x, 0};
            tail.from = {x, 2};
            break;
    }
    crossings[end.crossing].edges[static_cast<std::size_t>(end.slot)] = e3;
    crossings.push_back(std::move(c));
    edges.push_back(std::move(loop));
    edges.push_back(std::move(tail));
    return rebuild(d, std::move(crossings), std::move(edges), d.free_loops());
}

AnnularDiagram finger_move(const AnnularDiagram& d, std::size_t edge, int sign) {
    if (edge >= d.edges().size() + d.free_loops().size()) throw std::invalid_argument("finger_move: edge out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("finger_move: sign must be +1 or -1");
    std::vector<Edge> edges = d.edges();
    std::vector<FreeLoop> loops = d.free_loops();
    auto& lambda = edge < edges.size() ? edges[edge].lambda : loops[edge - edges.size()].lambda;
    lambda.insert(lambda.begin(), {sign, -sign});
    return rebuild(d, d.crossings(), std::move(edges), std::move(loops));
}

}  // namespace annularkh
