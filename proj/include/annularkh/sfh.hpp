#pragma once

#include "annularkh/diagram.hpp"
#include "annularkh/khovanov.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace annularkh::sfh {

/// Element of (1/2)Z, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int whole) : twice_(2 * whole) {}
    static constexpr HalfInt from_twice(int twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr auto operator<=>(const HalfInt&) const = default;

    /// "3", "-1", "1/2", "-3/2".
    std::string to_string() const;

private:
    int twice_ = 0;
};

struct AMDegree {
    HalfInt a;
    HalfInt m;
    auto operator<=>(const AMDegree&) const = default;
};

using AMDims = std::map<AMDegree, std::size_t>;

/// Exterior algebra on the circles of a resolved diagram with the (A, M)
/// bigrading: trivial factors (0,-1), nontrivial factors (-1,-1), all shifted
/// by ((n-p)/2, (t+n-p)/2).
class VHSpace {
public:
    VHSpace(int trivial, int nontrivial, std::vector<CircleClass> classes);

    int t() const { return t_; }
    int n() const { return n_; }
    int p() const { return n_ % 2; }
    std::size_t size() const { return std::size_t{1} << classes_.size(); }

    /// Degree of the monomial on the circles in `mask`.
    AMDegree degree(std::uint32_t mask) const;
    AMDims dims() const;
    AMDegree top() const;

private:
    int t_ = 0;
    int n_ = 0;
    std::vector<CircleClass> classes_;
};

/// The two-dimensional space with theta+ at (0,0) and theta- at (-1,-1).
AMDims theta();

VHSpace v_h(const ResolvedDiagram& r);

struct EquivalenceReport {
    bool pass = true;
    std::size_t generators = 0;
    int t = 0;
    int n = 0;
    int p = 0;
    /// First disagreement, empty on success.
    std::string mismatch;
};

/// Matches the Khovanov generators of the resolved diagram with the V_H
/// monomials on the same circles, under A = (f - p)/2 and M = (q - p)/2, and
/// compares the resulting dimension tables.
EquivalenceReport check_equivalence(const ResolvedDiagram& r);

/// dim at (A, M) equals dim at (-A-p, M-2A-p).
bool symmetric(const VHSpace& v);

struct RankPrediction {
    int t = 0;
    int n = 0;
    int p = 0;
    /// SFH of the branched cover of the capped-off annulus.
    std::size_t cover_rank = 0;
    /// HF-hat of the branched cover of S^3, a connected sum of t+n-1 copies of S^1 x S^2.
    std::size_t hf_rank = 0;
    std::size_t hfk_rank = 0;
    bool theta_factor = false;
    std::string associated_graded;
    /// Shape of the limit; for p = 0 the two grading shifts below are both
    /// given because they differ.
    std::string limit_shape;
    std::string limit_shape_alternate;
    bool shift_ambiguous = false;
    /// M-dims of HF-hat of the cover; each S^1 x S^2 summand contributes +-1/2.
    std::map<HalfInt, std::size_t> hf_maslov;
};

RankPrediction predicted_ranks(int trivial, int nontrivial);
RankPrediction predicted_ranks(const ResolvedDiagram& r);

}  // namespace annularkh::sfh
