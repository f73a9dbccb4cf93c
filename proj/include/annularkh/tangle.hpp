#pragma once

#include "annularkh/diagram.hpp"
#include "annularkh/graded.hpp"
#include "annularkh/khovanov.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace annularkh::tangle {

// Cutting A x I along the ray turns the angular direction into the vertical
// one. A strand crossing the ray positively leaves through the top disk and
// re-enters through the bottom disk; a negative crossing does the opposite.

enum class Side { bottom, top };

/// Boundary point on one of the two disks; both disks index the ray points 1..n.
struct Endpoint {
    Side side = Side::bottom;
    std::size_t index = 0;
    bool operator==(const Endpoint&) const = default;
};

struct SegmentEnd {
    enum class Kind { slot, boundary, closed } kind = Kind::closed;
    SlotRef slot;
    Endpoint point;
};

/// Piece of a parent edge or free loop between consecutive ray points.
struct Segment {
    std::size_t parent = 0;
    bool from_loop = false;
    std::size_t part = 0;
    SegmentEnd from;
    SegmentEnd to;
};

class TangleDiagram {
public:
    const AnnularDiagram& parent() const { return parent_; }
    std::size_t n() const { return n_; }
    const std::vector<Segment>& segments() const { return segments_; }
    std::size_t crossing_count() const { return parent_.crossing_count(); }

private:
    friend TangleDiagram cut(const AnnularDiagram& d);
    AnnularDiagram parent_;
    std::size_t n_ = 0;
    std::vector<Segment> segments_;
};

/// Throws DiagramError (unsupported) when a crossing is marked as lying on the ray.
TangleDiagram cut(const AnnularDiagram& d);

/// Reassembles the parent edges and their signed ray sequences from the segments alone.
AnnularDiagram glue(const TangleDiagram& t);

struct Arc {
    Endpoint first;
    Endpoint last;
    std::vector<std::size_t> segments;
};

struct TangleResolution {
    Resolution resolution;
    std::vector<Arc> arcs;
    /// Closed components as segment lists, ordered by smallest segment.
    std::vector<std::vector<std::size_t>> closed;
    /// Some arc has both endpoints on the same disk.
    bool backtracking = false;
};

TangleResolution resolve(const TangleDiagram& t, const Resolution& r);

/// Backtracking read off the parent annular resolution: some circle meets
/// the ray more often than its winding accounts for.
bool parent_backtracks(const ResolvedDiagram& r);

/// Cube complex with Lambda* of the closed components at non-backtracking
/// vertices and zero at backtracking ones. Every generator has k = n; arcs
/// count towards j like unmarked factors.
class TangleComplex {
public:
    const GradedComplex& complex() const { return complex_; }
    std::size_t size() const { return complex_.size(); }
    const TangleResolution& vertex(std::size_t v) const { return vertices_[v]; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t backtracking_count() const { return backtracking_; }
    std::size_t offset(std::size_t v) const { return offsets_[v]; }
    /// Generator g as (resolution, mask over closed components).
    std::pair<std::size_t, std::uint32_t> locate(std::size_t g) const;

private:
    friend TangleComplex build_complex(const TangleDiagram& t, std::size_t threads);
    std::vector<TangleResolution> vertices_;
    std::vector<std::size_t> offsets_;  // npos for backtracking vertices
    GradedComplex complex_;
    std::size_t backtracking_ = 0;
};

TangleComplex build_complex(const TangleDiagram& t, std::size_t threads = 0);

BigradedDims tangle_homology(const TangleComplex& c, std::size_t threads = 0);
BigradedDims tangle_homology(const TangleDiagram& t, std::size_t threads = 0);

enum class Verdict { summand, trivial };

struct SummandReport {
    Verdict verdict = Verdict::summand;
    std::size_t n = 0;
    std::size_t resolutions = 0;
    std::size_t backtracking = 0;
    /// Tangle generator g corresponds to annular generator bijection[g].
    std::vector<std::size_t> bijection;
    /// Differential entries compared.
    std::size_t entries_checked = 0;
    std::string certificate;
    BigradedDims tangle_dims;
    /// Annular homology in k = n with k dropped.
    BigradedDims annular_dims;
};

class SummandError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Matches the tangle complex of cut(d) with the k = n block of the graded
/// annular complex and checks that the matching intertwines the
/// differentials. Throws SummandError when it does not.
SummandReport summand_check(const AnnularDiagram& d, std::size_t threads = 0);
SummandReport summand_check(const khovanov::FilteredComplex& c, std::size_t threads = 0);

}  // namespace annularkh::tangle
