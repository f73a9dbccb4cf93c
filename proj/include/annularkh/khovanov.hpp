#pragma once

#include "annularkh/diagram.hpp"
#include "annularkh/gf2.hpp"
#include "annularkh/graded.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace annularkh::khovanov {

/// Exterior algebra on the circles of a resolved diagram. A basis element is a
/// set of circles, stored as a bitmask; the empty set is the unit.
class VertexSpace {
public:
    VertexSpace() = default;
    explicit VertexSpace(std::vector<CircleClass> classes);
    explicit VertexSpace(const ResolvedDiagram& r);

    std::size_t circles() const { return classes_.size(); }
    std::size_t size() const { return std::size_t{1} << classes_.size(); }
    int trivial() const { return static_cast<int>(classes_.size()) - nontrivial(); }
    int nontrivial() const { return std::popcount(nontrivial_mask_); }
    CircleClass circle_class(std::size_t c) const { return classes_[c]; }
    std::uint32_t nontrivial_mask() const { return nontrivial_mask_; }

    /// Annular degree: n - 2 * (nontrivial factors).
    int f(std::uint32_t mask) const { return nontrivial() - 2 * std::popcount(mask & nontrivial_mask_); }
    /// Quantum degree: t + n - 2 * (factors).
    int q(std::uint32_t mask) const { return static_cast<int>(circles()) - 2 * std::popcount(mask); }

private:
    std::vector<CircleClass> classes_;
    std::uint32_t nontrivial_mask_ = 0;
};

enum class SaddleKind { merge, split };

/// Circle bookkeeping for one cube edge. For a merge, `map` sends source
/// circles to target circles and `pair` are the two merged source circles.
/// For a split, `map` sends target circles to source circles and `pair` are
/// the two target circles of the split one.
struct Saddle {
    SaddleKind kind = SaddleKind::merge;
    std::vector<std::size_t> map;
    std::pair<std::size_t, std::size_t> pair{0, 0};
    std::size_t joined = 0;  // merged target circle, or split source circle
    /// Target bit of each source circle; a split circle goes to pair.first.
    std::vector<std::uint32_t> bit_image;
};

class MapError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Validates a merge correspondence (source -> target circles) and returns
/// the saddle. Throws MapError when it is not a single merge compatible with
/// the circle classes.
Saddle merge_saddle(const VertexSpace& src, const VertexSpace& dst, std::vector<std::size_t> src_to_dst);
Saddle split_saddle(const VertexSpace& src, const VertexSpace& dst, std::vector<std::size_t> dst_to_src);

/// Reads the saddle between two resolutions differing at one crossing by
/// following the edges shared by both.
Saddle saddle_between(const ResolvedDiagram& src, const ResolvedDiagram& dst);

/// Images of a basis element (at most two); returns how many were written.
int saddle_image(const Saddle& s, std::uint32_t mask, std::uint32_t out[2]);

struct EdgeMap {
    SaddleKind kind = SaddleKind::merge;
    gf2::MatrixF2 matrix;  // rows: target basis, columns: source basis
    gf2::MatrixF2 graded;  // entries that keep the annular degree
};

EdgeMap edge_map(const VertexSpace& src, const VertexSpace& dst, const Saddle& s);
EdgeMap merge_map(const VertexSpace& src, const VertexSpace& dst, const std::vector<std::size_t>& src_to_dst);
EdgeMap split_map(const VertexSpace& src, const VertexSpace& dst, const std::vector<std::size_t>& dst_to_src);

struct Vertex {
    ResolvedDiagram resolved;
    VertexSpace space;
    std::size_t offset = 0;
};

struct BuildOptions {
    std::size_t threads = 0;
    bool verify = true;
};

/// Cube-of-resolutions complex with the full differential D and its annular
/// graded part. Generator g has degree (i, j, k) as listed in complex().
class FilteredComplex {
public:
    const AnnularDiagram& diagram() const { return diagram_; }
    const GradedComplex& complex() const { return total_; }
    /// Same basis, differential restricted to k-preserving entries.
    const GradedComplex& graded() const { return graded_; }

    std::size_t size() const { return total_.size(); }
    std::size_t vertex_count() const { return vertices_.size(); }
    const Vertex& vertex(std::size_t v) const { return vertices_[v]; }
    std::size_t merge_count() const { return merges_; }
    std::size_t split_count() const { return splits_; }

    std::pair<std::size_t, std::uint32_t> locate(std::size_t g) const;
    std::size_t index_of(std::uint64_t resolution, std::uint32_t mask) const { return vertices_[resolution].offset + mask; }

    /// "<resolution bits>:{<circle labels>}", e.g. "01:{e1,e4}".
    std::string generator_id(std::size_t g) const;

private:
    friend FilteredComplex build_complex(const AnnularDiagram& d, const BuildOptions& options);
    AnnularDiagram diagram_;
    std::vector<Vertex> vertices_;
    GradedComplex total_;
    GradedComplex graded_;
    std::size_t merges_ = 0;
    std::size_t splits_ = 0;
};

/// Degree of basis element `mask` at a vertex with |I| = weight.
Degree generator_degree(const VertexSpace& space, std::uint32_t mask, std::size_t weight, std::size_t n_plus,
                        std::size_t n_minus);

FilteredComplex build_complex(const AnnularDiagram& d, const BuildOptions& options = {});

/// Homology of the graded part, per (i, j, k).
TrigradedDims annular_homology(const FilteredComplex& c, std::size_t threads = 0);
TrigradedDims annular_homology(const AnnularDiagram& d, std::size_t threads = 0);

/// Homology of the full differential, per (i, j).
BigradedDims total_homology(const FilteredComplex& c, std::size_t threads = 0);
BigradedDims total_homology(const AnnularDiagram& d, std::size_t threads = 0);

/// Laurent polynomial in t and q with integer coefficients.
class Polynomial {
public:
    void add(int t_exp, int q_exp, long long coeff);
    long long coefficient(int t_exp, int q_exp) const;
    bool operator==(const Polynomial&) const = default;
    const std::map<std::pair<int, int>, long long>& terms() const { return terms_; }
    /// Terms by descending t then q, e.g. "tq + t^-1q^-1".
    std::string to_string() const;

private:
    std::map<std::pair<int, int>, long long> terms_;
};

/// Sum of (-1)^i t^k q^j over the table.
Polynomial euler_characteristic(const TrigradedDims& dims);

}  // namespace annularkh::khovanov
