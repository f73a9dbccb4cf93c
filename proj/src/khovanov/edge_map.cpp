#include "annularkh/khovanov.hpp"

#include <string>

namespace annularkh::khovanov {
namespace {

int parity(CircleClass c) { return c == CircleClass::nontrivial ? 1 : 0; }

// Checks that `map` (from the larger circle set onto the smaller) is a single
// join compatible with circle classes; returns the two joined circles and
// their image.
void check_join(const VertexSpace& many, const VertexSpace& few, const std::vector<std::size_t>& map,
                std::pair<std::size_t, std::size_t>& pair, std::size_t& joined, const char* what) {
    if (many.circles() != few.circles() + 1)
        throw MapError(std::string(what) + ": circle counts differ by " +
                       std::to_string(static_cast<long>(many.circles()) - static_cast<long>(few.circles())));
    if (map.size() != many.circles()) throw MapError(std::string(what) + ": correspondence has the wrong length");
    std::vector<std::vector<std::size_t>> pre(few.circles());
    for (std::size_t c = 0; c < map.size(); ++c) {
        if (map[c] >= few.circles()) throw MapError(std::string(what) + ": correspondence out of range");
        pre[map[c]].push_back(c);
    }
    bool found = false;
    for (std::size_t t = 0; t < pre.size(); ++t) {
        if (pre[t].size() == 1) {
            if (many.circle_class(pre[t][0]) != few.circle_class(t))
                throw MapError(std::string(what) + ": an untouched circle changes class");
        } else if (pre[t].size() == 2 && !found) {
            found = true;
            pair = {pre[t][0], pre[t][1]};
            joined = t;
            if ((parity(many.circle_class(pre[t][0])) ^ parity(many.circle_class(pre[t][1]))) !=
                parity(few.circle_class(t)))
                throw MapError(std::string(what) + ": classes of the joined circles are inconsistent");
        } else {
            throw MapError(std::string(what) + ": correspondence is not a single saddle");
        }
    }
    if (!found) throw MapError(std::string(what) + ": no circles are joined");
}

}  // namespace

Saddle merge_saddle(const VertexSpace& src, const VertexSpace& dst, std::vector<std::size_t> src_to_dst) {
    Saddle s;
    s.kind = SaddleKind::merge;
    check_join(src, dst, src_to_dst, s.pair, s.joined, "merge");
    s.map = std::move(src_to_dst);
    for (std::size_t c : s.map) s.bit_image.push_back(std::uint32_t{1} << c);
    return s;
}

Saddle split_saddle(const VertexSpace& src, const VertexSpace& dst, std::vector<std::size_t> dst_to_src) {
    Saddle s;
    s.kind = SaddleKind::split;
    std::size_t joined = 0;
    check_join(dst, src, dst_to_src, s.pair, joined, "split");
    s.joined = joined;
    s.map = std::move(dst_to_src);
    s.bit_image.assign(src.circles(), 0);
    for (std::size_t t = 0; t < s.map.size(); ++t)
        if (t != s.pair.second) s.bit_image[s.map[t]] = std::uint32_t{1} << t;
    return s;
}

Saddle saddle_between(const ResolvedDiagram& src, const ResolvedDiagram& dst) {
    const VertexSpace a(src), b(dst);
    auto image = [](const ResolvedDiagram& from, const ResolvedDiagram& to) {
        std::vector<std::size_t> map;
        for (const Circle& c : from.circles)
            map.push_back(c.free_loop ? to.circle_of_loop[*c.free_loop] : to.circle_of_edge[c.edges.front()]);
        return map;
    };
    if (dst.circles.size() + 1 == src.circles.size()) return merge_saddle(a, b, image(src, dst));
    if (src.circles.size() + 1 == dst.circles.size()) return split_saddle(a, b, image(dst, src));
    throw MapError("resolutions " + src.resolution.to_string() + " and " + dst.resolution.to_string() +
                   " are not related by a single saddle");
}

int saddle_image(const Saddle& s, std::uint32_t mask, std::uint32_t out[2]) {
    std::uint32_t lift = 0;
    for (std::uint32_t m = mask; m; m &= m - 1) lift |= s.bit_image[static_cast<std::size_t>(std::countr_zero(m))];
    if (s.kind == SaddleKind::merge) {
        const std::uint32_t both = (std::uint32_t{1} << s.pair.first) | (std::uint32_t{1} << s.pair.second);
        if ((mask & both) == both) return 0;
        out[0] = lift;
        return 1;
    }
    const std::uint32_t a = std::uint32_t{1} << s.pair.first;
    const std::uint32_t b = std::uint32_t{1} << s.pair.second;
    if (mask & (std::uint32_t{1} << s.joined)) {
        out[0] = lift | b;
        return 1;
    }
    out[0] = lift | a;
    out[1] = lift | b;
    return 2;
}

EdgeMap edge_map(const VertexSpace& src, const VertexSpace& dst, const Saddle& s) {
    EdgeMap m;
    m.kind = s.kind;
    m.matrix = gf2::MatrixF2(dst.size(), src.size());
    m.graded = gf2::MatrixF2(dst.size(), src.size());
    std::uint32_t out[2];
    for (std::uint32_t x = 0; x < src.size(); ++x) {
        const int count = saddle_image(s, x, out);
        for (int i = 0; i < count; ++i) {
            m.matrix.flip(out[i], x);
            if (dst.f(out[i]) == src.f(x)) m.graded.flip(out[i], x);
        }
    }
    return m;
}

EdgeMap merge_map(const VertexSpace& src, const VertexSpace& dst, const std::vector<std::size_t>& src_to_dst) {
    return edge_map(src, dst, merge_saddle(src, dst, src_to_dst));
}

EdgeMap split_map(const VertexSpace& src, const VertexSpace& dst, const std::vector<std::size_t>& dst_to_src) {
    return edge_map(src, dst, split_saddle(src, dst, dst_to_src));
}

}  // namespace annularkh::khovanov
