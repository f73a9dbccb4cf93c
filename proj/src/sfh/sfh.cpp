#include "annularkh/sfh.hpp"

#include <bit>
#include <sstream>

namespace annularkh::sfh {

std::string HalfInt::to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

VHSpace::VHSpace(int trivial, int nontrivial, std::vector<CircleClass> classes)
    : t_(trivial), n_(nontrivial), classes_(std::move(classes)) {
    int t = 0, n = 0;
    for (CircleClass c : classes_) (c == CircleClass::trivial ? t : n)++;
    if (t != t_ || n != n_ || classes_.size() > 31) throw std::invalid_argument("circle counts do not match classes");
}

AMDegree VHSpace::top() const {
    return {HalfInt::from_twice(n_ - p()), HalfInt::from_twice(t_ + n_ - p())};
}

AMDegree VHSpace::degree(std::uint32_t mask) const {
    int a = 0;
    int m = 0;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        if (!((mask >> c) & 1u)) continue;
        if (classes_[c] == CircleClass::nontrivial) --a;
        --m;
    }
    const AMDegree shift = top();
    return {shift.a + a, shift.m + m};
}

AMDims VHSpace::dims() const {
    AMDims out;
    for (std::uint32_t mask = 0; mask < size(); ++mask) out[degree(mask)]++;
    return out;
}

AMDims theta() { return {{{0, 0}, 1}, {{-1, -1}, 1}}; }

VHSpace v_h(const ResolvedDiagram& r) {
    std::vector<CircleClass> classes;
    for (const Circle& c : r.circles) classes.push_back(c.cls);
    return VHSpace(static_cast<int>(r.trivial_count()), static_cast<int>(r.nontrivial_count()), std::move(classes));
}

namespace {

std::string describe(const AMDegree& d) { return "(" + d.a.to_string() + "," + d.m.to_string() + ")"; }

}  // namespace

EquivalenceReport check_equivalence(const ResolvedDiagram& r) {
    const khovanov::VertexSpace kh(r);
    const VHSpace vh = v_h(r);
    EquivalenceReport rep;
    rep.t = vh.t();
    rep.n = vh.n();
    rep.p = vh.p();
    rep.generators = kh.size();
    if (kh.size() != vh.size()) {
        rep.pass = false;
        rep.mismatch = "generator counts differ";
        return rep;
    }
    AMDims from_kh;
    for (std::uint32_t mask = 0; mask < kh.size(); ++mask) {
        const int f = kh.f(mask);
        const int q = kh.q(mask);
        const AMDegree mapped{HalfInt::from_twice(f - rep.p), HalfInt::from_twice(q - rep.p)};
        const AMDegree expected = vh.degree(mask);
        if (rep.pass && !(mapped == expected)) {
            rep.pass = false;
            std::ostringstream os;
            os << "mask " << mask << ": (f,q)=(" << f << "," << q << ") maps to " << describe(mapped)
               << " but V_H has " << describe(expected);
            rep.mismatch = os.str();
        }
        from_kh[mapped]++;
    }
    if (rep.pass && from_kh != vh.dims()) {
        rep.pass = false;
        rep.mismatch = "dimension tables differ";
    }
    return rep;
}

bool symmetric(const VHSpace& v) {
    const AMDims dims = v.dims();
    const HalfInt p = v.p();
    for (const auto& [deg, dim] : dims) {
        const AMDegree image{-deg.a - p, deg.m - deg.a - deg.a - p};
        auto it = dims.find(image);
        if (it == dims.end() || it->second != dim) return false;
    }
    return true;
}

RankPrediction predicted_ranks(int trivial, int nontrivial) {
    RankPrediction out;
    out.t = trivial;
    out.n = nontrivial;
    out.p = nontrivial % 2;
    const int components = trivial + nontrivial;
    out.cover_rank = std::size_t{1} << components;
    out.theta_factor = out.p == 1;
    if (components == 0) {
        // Empty link: the cover of S^3 is S^3 itself; no Theta factor arises.
        out.hf_rank = 1;
        out.hfk_rank = 1;
        out.cover_rank = 1;
        out.hf_maslov[0] = 1;
        out.associated_graded = "HFK(S^3, B)";
        out.limit_shape = "HF(S^3)";
        out.limit_shape_alternate = out.limit_shape;
        return out;
    }
    out.hf_rank = out.cover_rank / 2;
    out.hfk_rank = out.theta_factor ? out.cover_rank / 2 : out.cover_rank;
    const int summands = components - 1;
    for (int minus = 0; minus <= summands; ++minus) {
        std::size_t binom = 1;
        for (int x = 0; x < minus; ++x) binom = binom * static_cast<std::size_t>(summands - x) / static_cast<std::size_t>(x + 1);
        out.hf_maslov[HalfInt::from_twice(summands - 2 * minus)] += binom;
    }
    if (out.theta_factor) {
        out.associated_graded = "HFK(Sigma(S^3,L), B~) (x) Theta";
        out.limit_shape = "HF(Sigma(S^3,L)) (x) Theta^";
        out.limit_shape_alternate = out.limit_shape;
    } else {
        out.associated_graded = "HFK(Sigma(S^3,L), B~)";
        out.limit_shape = "HF(Sigma(S^3,L)){1/2} (x) Theta^";
        out.limit_shape_alternate = "HF(Sigma(S^3,L)){1/2,1/2} (x) Theta^";
        out.shift_ambiguous = true;
    }
    return out;
}

RankPrediction predicted_ranks(const ResolvedDiagram& r) {
    return predicted_ranks(static_cast<int>(r.trivial_count()), static_cast<int>(r.nontrivial_count()));
}

}  // namespace annularkh::sfh
