#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace annularkh {

class DiagramError : public std::runtime_error {
public:
    enum class Kind { syntax, reference, duplicate, multiplicity, orientation, winding, unsupported };

    DiagramError(Kind kind, std::string location, const std::string& message)
        : std::runtime_error(location.empty() ? message : location + ": " + message),
          kind_(kind),
          location_(std::move(location)),
          message_(message) {}

    Kind kind() const { return kind_; }
    const std::string& location() const { return location_; }
    const std::string& message() const { return message_; }

private:
    Kind kind_;
    std::string location_;
    std::string message_;
};

std::string_view kind_name(DiagramError::Kind kind);

struct SlotRef {
    std::size_t crossing = 0;
    int slot = 0;
    bool operator==(const SlotRef&) const = default;
};

/// Slots a, b, c, d run counterclockwise starting at the incoming under-strand.
/// The sign is derived from the strand directions when the diagram is built.
struct Crossing {
    std::string id;
    std::array<std::size_t, 4> edges{};
    int sign = 0;
    bool on_lambda = false;
};

/// Oriented arc between two crossing slots. `lambda` lists the signed
/// intersections with the ray in travel order; it always sums to `winding`.
struct Edge {
    std::string id;
    SlotRef from;
    SlotRef to;
    int winding = 0;
    std::vector<int> lambda;
};

struct FreeLoop {
    std::string id;
    int winding = 0;
    std::vector<int> lambda;
};

class AnnularDiagram {
public:
    AnnularDiagram() = default;

    /// Validates the combinatorics, derives crossing signs and fills in the
    /// default intersection sequences. Throws DiagramError.
    AnnularDiagram(std::string name, std::vector<Crossing> crossings, std::vector<Edge> edges,
                   std::vector<FreeLoop> loops = {});

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    const std::string& isotopic_to() const { return isotopic_to_; }
    void set_isotopic_to(std::string other) { isotopic_to_ = std::move(other); }

    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<FreeLoop>& free_loops() const { return loops_; }

    std::size_t crossing_count() const { return crossings_.size(); }
    std::size_t positive_crossings() const { return n_plus_; }
    std::size_t negative_crossings() const { return n_minus_; }

    /// Total algebraic intersection with the ray, mod 2.
    int winding_parity() const;
    /// Total number of ray intersections over all edges and loops.
    std::size_t lambda_points() const;

private:
    std::string name_;
    std::string isotopic_to_;
    std::vector<Crossing> crossings_;
    std::vector<Edge> edges_;
    std::vector<FreeLoop> loops_;
    std::size_t n_plus_ = 0;
    std::size_t n_minus_ = 0;
};

/// One smoothing choice per crossing, bit i for crossing i.
class Resolution {
public:
    Resolution() = default;
    Resolution(std::size_t length, std::uint64_t bits);
    static Resolution parse(std::string_view text);

    std::size_t size() const { return length_; }
    bool operator[](std::size_t i) const { return (bits_ >> i) & 1u; }
    std::uint64_t bits() const { return bits_; }
    std::size_t weight() const;
    std::string to_string() const;
    bool operator==(const Resolution&) const = default;

private:
    std::size_t length_ = 0;
    std::uint64_t bits_ = 0;
};

/// Slot joined to `slot` by the given smoothing. The 0-smoothing joins a-d and
/// b-c; the 1-smoothing joins a-b and c-d.
constexpr int smoothing_partner(int slot, bool one) {
    if (one) return slot ^ 1;
    return 3 - slot;
}

enum class CircleClass { trivial, nontrivial };

struct Circle {
    std::string label;
    std::vector<std::size_t> edges;
    std::optional<std::size_t> free_loop;
    int winding = 0;
    std::size_t lambda_points = 0;
    bool monotone = true;
    CircleClass cls = CircleClass::trivial;
};

struct ResolvedDiagram {
    Resolution resolution;
    std::vector<Circle> circles;
    std::vector<std::size_t> circle_of_edge;
    std::vector<std::size_t> circle_of_loop;

    std::size_t trivial_count() const;
    std::size_t nontrivial_count() const;
};

/// Crossingless diagram obtained by smoothing every crossing. Circles are
/// ordered by their smallest member edge, free loops last. Throws
/// DiagramError if a circle winds more than once around the axis.
ResolvedDiagram resolve(const AnnularDiagram& d, const Resolution& r);

// Serialization

AnnularDiagram parse_diagram(std::string_view json_text, std::string_view fallback_name = "");
AnnularDiagram load_diagram(const std::string& path);
std::string to_json(const AnnularDiagram& d, int indent = 2);

// Derived diagrams

AnnularDiagram mirror(const AnnularDiagram& d);
/// Reverses the ray direction.
AnnularDiagram negate_windings(const AnnularDiagram& d);
/// Permutes crossings, edges and loops and renames every id.
AnnularDiagram relabel(const AnnularDiagram& d, std::uint64_t seed);

/// Closure of a braid word on `strands` strands around the axis. Generator
/// +i crosses strand i over i+1 positively, -i negatively (1-based).
AnnularDiagram braid_closure(std::size_t strands, const std::vector<int>& word, std::string name = "");

/// Faces of a connected diagram as cycles of darts; a dart (c, s) leaves
/// crossing c along the edge at slot s and has its face on the left.
std::vector<std::vector<SlotRef>> faces(const AnnularDiagram& d);

/// Same planar diagram with the axis in `axis_face` and infinity in
/// `outer_face`; the ray follows a shortest dual path between them.
AnnularDiagram place_axis(const AnnularDiagram& d, std::size_t axis_face, std::size_t outer_face);

/// Which pass through the new crossing is the under-strand, and the sign.
enum class KinkType { first_under_positive, first_under_negative, second_under_positive, second_under_negative };

/// Reidemeister I kink inserted at the end of edge `edge`; its ray
/// intersections stay on the first part.
AnnularDiagram add_kink(const AnnularDiagram& d, std::size_t edge, KinkType type);

/// Pushes edge `edge` across the ray, adding the pair (sign, -sign). Indices
/// past the last edge select free loops.
AnnularDiagram finger_move(const AnnularDiagram& d, std::size_t edge, int sign = 1);

}  // namespace annularkh
