#include "annularkh/diagram.hpp"

namespace annularkh {

ResolvedDiagram resolve(const AnnularDiagram& d, const Resolution& r) {
    if (r.size() != d.crossing_count())
        throw std::invalid_argument("resolution has " + std::to_string(r.size()) + " bits for " +
                                    std::to_string(d.crossing_count()) + " crossings");
    const auto& edges = d.edges();
    const auto& crossings = d.crossings();
    constexpr std::size_t none = static_cast<std::size_t>(-1);

    ResolvedDiagram out;
    out.resolution = r;
    out.circle_of_edge.assign(edges.size(), none);

    for (std::size_t start = 0; start < edges.size(); ++start) {
        if (out.circle_of_edge[start] != none) continue;
        Circle circle;
        circle.label = edges[start].id;
        const std::size_t index = out.circles.size();
        std::vector<int> signs;

        std::size_t e = start;
        bool forward = true;
        do {
            const Edge& edge = edges[e];
            out.circle_of_edge[e] = index;
            circle.edges.push_back(e);
            if (forward) {
                circle.winding += edge.winding;
                signs.insert(signs.end(), edge.lambda.begin(), edge.lambda.end());
            } else {
                circle.winding -= edge.winding;
                for (auto it = edge.lambda.rbegin(); it != edge.lambda.rend(); ++it) signs.push_back(-*it);
            }
            const SlotRef at = forward ? edge.to : edge.from;
            const int partner = smoothing_partner(at.slot, r[at.crossing]);
            e = crossings[at.crossing].edges[static_cast<std::size_t>(partner)];
            forward = edges[e].from == SlotRef{at.crossing, partner};
        } while (!(e == start && forward));

        circle.lambda_points = signs.size();
        for (int s : signs) circle.monotone = circle.monotone && s == signs.front();
        if (circle.winding < -1 || circle.winding > 1)
            throw DiagramError(DiagramError::Kind::winding, "resolution " + r.to_string(),
                               "circle through edge '" + circle.label + "' has winding " +
                                   std::to_string(circle.winding) + "; winding data is not realizable");
        circle.cls = circle.winding == 0 ? CircleClass::trivial : CircleClass::nontrivial;
        out.circles.push_back(std::move(circle));
    }

    for (std::size_t l = 0; l < d.free_loops().size(); ++l) {
        const FreeLoop& loop = d.free_loops()[l];
        Circle circle;
        circle.label = loop.id;
        circle.free_loop = l;
        circle.winding = loop.winding;
        circle.lambda_points = loop.lambda.size();
        for (int s : loop.lambda) circle.monotone = circle.monotone && s == loop.lambda.front();
        circle.cls = loop.winding == 0 ? CircleClass::trivial : CircleClass::nontrivial;
        out.circle_of_loop.push_back(out.circles.size());
        out.circles.push_back(std::move(circle));
    }
    return out;
}

}  // namespace annularkh
