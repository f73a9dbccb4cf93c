#include "annularkh/khovanov.hpp"

namespace annularkh::khovanov {

VertexSpace::VertexSpace(std::vector<CircleClass> classes) : classes_(std::move(classes)) {
    if (classes_.size() > 31) throw std::length_error("VertexSpace: more than 31 circles");
    for (std::size_t c = 0; c < classes_.size(); ++c)
        if (classes_[c] == CircleClass::nontrivial) nontrivial_mask_ |= std::uint32_t{1} << c;
}

VertexSpace::VertexSpace(const ResolvedDiagram& r)
    : VertexSpace([&] {
          std::vector<CircleClass> classes;
          for (const auto& c : r.circles) classes.push_back(c.cls);
          return classes;
      }()) {}

Degree generator_degree(const VertexSpace& space, std::uint32_t mask, std::size_t weight, std::size_t n_plus,
                        std::size_t n_minus) {
    const int w = static_cast<int>(weight);
    const int np = static_cast<int>(n_plus);
    const int nm = static_cast<int>(n_minus);
    return Degree{w - np, space.q(mask) + w + nm - 2 * np, space.f(mask)};
}

}  // namespace annularkh::khovanov
