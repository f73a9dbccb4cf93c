#include "annularkh/diagram.hpp"

#include <bit>
#include <cstdlib>
#include <numeric>
#include <unordered_set>

namespace annularkh {
namespace {

using Kind = DiagramError::Kind;

std::string crossing_loc(const Crossing& c) { return "crossing '" + c.id + "'"; }
std::string edge_loc(const std::string& id) { return "edge '" + id + "'"; }

void check_lambda(const std::string& loc, int winding, std::vector<int>& lambda) {
    for (int s : lambda)
        if (s != 1 && s != -1) throw DiagramError(Kind::syntax, loc, "ray intersections must be +1 or -1");
    if (lambda.empty()) {
        lambda.assign(static_cast<std::size_t>(std::abs(winding)), winding > 0 ? 1 : -1);
        return;
    }
    if (std::accumulate(lambda.begin(), lambda.end(), 0) != winding)
        throw DiagramError(Kind::winding, loc, "ray intersections do not sum to the winding " + std::to_string(winding));
}

}  // namespace

std::string_view kind_name(DiagramError::Kind kind) {
    switch (kind) {
        case Kind::syntax: return "malformed";
        case Kind::reference: return "unknown reference";
        case Kind::duplicate: return "duplicate id";
        case Kind::multiplicity: return "edge multiplicity";
        case Kind::orientation: return "orientation";
        case Kind::winding: return "winding";
        case Kind::unsupported: return "unsupported";
    }
    return "error";
}

AnnularDiagram::AnnularDiagram(std::string name, std::vector<Crossing> crossings, std::vector<Edge> edges,
                               std::vector<FreeLoop> loops)
    : name_(std::move(name)), crossings_(std::move(crossings)), edges_(std::move(edges)), loops_(std::move(loops)) {
    std::unordered_set<std::string> ids;
    for (const auto& c : crossings_)
        if (!ids.insert(c.id).second) throw DiagramError(Kind::duplicate, crossing_loc(c), "id used twice");
    ids.clear();
    for (const auto& e : edges_)
        if (!ids.insert(e.id).second) throw DiagramError(Kind::duplicate, edge_loc(e.id), "id used twice");
    for (const auto& l : loops_)
        if (!ids.insert(l.id).second) throw DiagramError(Kind::duplicate, edge_loc(l.id), "id used twice");
    if (crossings_.size() > 62) throw DiagramError(Kind::unsupported, "", "more than 62 crossings");

    std::vector<std::size_t> occurrences(edges_.size(), 0);
    for (const auto& c : crossings_)
        for (std::size_t e : c.edges) {
            if (e >= edges_.size()) throw DiagramError(Kind::reference, crossing_loc(c), "slot names a missing edge");
            ++occurrences[e];
        }
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (occurrences[e] != 2)
            throw DiagramError(Kind::multiplicity, edge_loc(edges_[e].id),
                               "appears " + std::to_string(occurrences[e]) + " times among crossing slots");

    // Each slot is the end of exactly one edge, and that edge sits in the slot.
    std::vector<std::array<int, 4>> ends(crossings_.size(), {0, 0, 0, 0});
    std::vector<std::array<int, 4>> incoming(crossings_.size(), {0, 0, 0, 0});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        Edge& edge = edges_[e];
        for (const SlotRef* end : {&edge.from, &edge.to}) {
            if (end->crossing >= crossings_.size() || end->slot < 0 || end->slot > 3)
                throw DiagramError(Kind::reference, edge_loc(edge.id), "endpoint names a missing crossing slot");
            if (crossings_[end->crossing].edges[static_cast<std::size_t>(end->slot)] != e)
                throw DiagramError(Kind::reference, edge_loc(edge.id),
                                   "endpoint slot " + std::to_string(end->slot) + " of " +
                                       crossing_loc(crossings_[end->crossing]) + " holds a different edge");
            ++ends[end->crossing][static_cast<std::size_t>(end->slot)];
        }
        incoming[edge.to.crossing][static_cast<std::size_t>(edge.to.slot)] = 1;
        if (edge.from == edge.to) throw DiagramError(Kind::reference, edge_loc(edge.id), "starts and ends at one slot");
        check_lambda(edge_loc(edge.id), edge.winding, edge.lambda);
    }

    for (std::size_t x = 0; x < crossings_.size(); ++x) {
        Crossing& c = crossings_[x];
        for (int s = 0; s < 4; ++s)
            if (ends[x][static_cast<std::size_t>(s)] != 1)
                throw DiagramError(Kind::multiplicity, crossing_loc(c) + " slot " + std::to_string(s),
                                   "is the endpoint of " + std::to_string(ends[x][static_cast<std::size_t>(s)]) +
                                       " edge ends");
        if (!incoming[x][0]) throw DiagramError(Kind::orientation, crossing_loc(c), "slot a must be incoming");
        if (incoming[x][2]) throw DiagramError(Kind::orientation, crossing_loc(c), "slot c must be outgoing");
        if (incoming[x][1] == incoming[x][3])
            throw DiagramError(Kind::orientation, crossing_loc(c), "slots b and d must be one incoming, one outgoing");
        c.sign = incoming[x][3] ? 1 : -1;
        (c.sign > 0 ? n_plus_ : n_minus_)++;
    }

    for (auto& l : loops_) {
        if (l.winding < -1 || l.winding > 1)
            throw DiagramError(Kind::winding, edge_loc(l.id), "free loop winding must be -1, 0 or 1");
        check_lambda(edge_loc(l.id), l.winding, l.lambda);
    }
}

int AnnularDiagram::winding_parity() const {
    int total = 0;
    for (const auto& e : edges_) total += e.winding;
    for (const auto& l : loops_) total += l.winding;
    return ((total % 2) + 2) % 2;
}

std::size_t AnnularDiagram::lambda_points() const {
    std::size_t total = 0;
    for (const auto& e : edges_) total += e.lambda.size();
    for (const auto& l : loops_) total += l.lambda.size();
    return total;
}

Resolution::Resolution(std::size_t length, std::uint64_t bits) : length_(length), bits_(bits) {
    if (length > 63) throw std::invalid_argument("Resolution: too many crossings");
    if (length < 64 && (bits >> length) != 0) throw std::invalid_argument("Resolution: bits beyond the length");
}

Resolution Resolution::parse(std::string_view text) {
    if (text.size() > 63) throw std::invalid_argument("Resolution: too many crossings");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            bits |= std::uint64_t{1} << i;
        else if (text[i] != '0')
            throw std::invalid_argument("Resolution: expected a string of 0 and 1");
    }
    return Resolution(text.size(), bits);
}

std::size_t Resolution::weight() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::string Resolution::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if ((*this)[i]) s[i] = '1';
    return s;
}

std::size_t ResolvedDiagram::trivial_count() const {
    std::size_t t = 0;
    for (const auto& c : circles) t += c.cls == CircleClass::trivial ? 1 : 0;
    return t;
}

std::size_t ResolvedDiagram::nontrivial_count() const { return circles.size() - trivial_count(); }

}  // namespace annularkh
