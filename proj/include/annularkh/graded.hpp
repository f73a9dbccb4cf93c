#pragma once

#include "annularkh/gf2.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace annularkh {

/// Homological degree i, quantum degree j, annular degree k.
struct Degree {
    int i = 0;
    int j = 0;
    int k = 0;
    auto operator<=>(const Degree&) const = default;
};

struct BiDegree {
    int i = 0;
    int j = 0;
    auto operator<=>(const BiDegree&) const = default;
};

/// Sparse table of dimensions keyed by degree; zero entries are never stored.
template <class Key>
class DimTable {
public:
    using map_type = std::map<Key, std::size_t>;

    void add(const Key& key, std::size_t dim) {
        if (dim == 0) return;
        dims_[key] += dim;
    }
    std::size_t at(const Key& key) const {
        auto it = dims_.find(key);
        return it == dims_.end() ? 0 : it->second;
    }
    std::size_t total() const {
        std::size_t t = 0;
        for (const auto& [key, d] : dims_) t += d;
        return t;
    }
    bool empty() const { return dims_.empty(); }
    std::size_t size() const { return dims_.size(); }
    const map_type& entries() const { return dims_; }
    auto begin() const { return dims_.begin(); }
    auto end() const { return dims_.end(); }
    bool operator==(const DimTable& other) const = default;

private:
    map_type dims_;
};

using TrigradedDims = DimTable<Degree>;
using BigradedDims = DimTable<BiDegree>;

BigradedDims forget_k(const TrigradedDims& dims);

/// Raised when a differential violates d^2 = 0 or the degree rules.
class ComplexError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Finite complex over GF(2) with a degree per basis element. Entry (r, c) of
/// the differential is the coefficient of basis element r in d(c).
class GradedComplex {
public:
    GradedComplex() = default;
    GradedComplex(std::vector<Degree> degrees, gf2::SparseMatrixF2 differential);

    std::size_t size() const { return degrees_.size(); }
    const std::vector<Degree>& degrees() const { return degrees_; }
    const gf2::SparseMatrixF2& differential() const { return d_; }

    /// Throws ComplexError unless d^2 = 0, every entry raises i by one, keeps j
    /// and lowers k by an amount in `allowed_k_drops`.
    void validate(const std::vector<int>& allowed_k_drops = {0, 2}) const;

    TrigradedDims chain_dims() const;

private:
    std::vector<Degree> degrees_;
    gf2::SparseMatrixF2 d_;
};

/// True when d(d(x)) = 0 for every basis element.
bool squares_to_zero(const gf2::SparseMatrixF2& d);

/// Homology dimensions per (i, j, k). The differential must preserve k;
/// otherwise ComplexError is thrown.
TrigradedDims homology_dims(const GradedComplex& c, std::size_t threads = 0);

/// Homology per (i, j), ignoring k. Valid for any differential that keeps j.
BigradedDims homology_dims_ij(const GradedComplex& c, std::size_t threads = 0);

}  // namespace annularkh
