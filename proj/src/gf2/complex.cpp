#include "annularkh/graded.hpp"
#include "annularkh/parallel.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

namespace annularkh {
namespace {

std::string describe(const Degree& d) {
    return "(" + std::to_string(d.i) + "," + std::to_string(d.j) + "," + std::to_string(d.k) + ")";
}

// Generators grouped into blocks by `block_of`; the differential must map
// group (b, i) into group (b, i + 1). Returns homology dims per (b, i).
template <class BlockKey, class BlockOf>
std::map<std::pair<BlockKey, int>, std::size_t> blocked_homology(const GradedComplex& c, BlockOf block_of,
                                                                std::size_t threads) {
    using GroupKey = std::pair<BlockKey, int>;
    std::map<GroupKey, std::vector<std::uint32_t>> groups;
    for (std::size_t g = 0; g < c.size(); ++g) {
        const Degree& d = c.degrees()[g];
        groups[{block_of(d), d.i}].push_back(static_cast<std::uint32_t>(g));
    }

    std::vector<std::uint32_t> local(c.size());
    std::vector<const GroupKey*> keys;
    std::vector<const std::vector<std::uint32_t>*> members;
    for (const auto& [key, gens] : groups) {
        for (std::size_t p = 0; p < gens.size(); ++p) local[gens[p]] = static_cast<std::uint32_t>(p);
        keys.push_back(&key);
        members.push_back(&gens);
    }

    const auto& d = c.differential();
    // rank_out[g] = rank of d restricted to group g
    std::vector<std::size_t> rank_out(keys.size(), 0);
    parallel_for(keys.size(), threads, [&](std::size_t gi) {
        const GroupKey target{keys[gi]->first, keys[gi]->second + 1};
        auto it = groups.find(target);
        const auto& gens = *members[gi];
        std::vector<std::vector<std::uint32_t>> cols(gens.size());
        bool any = false;
        for (std::size_t p = 0; p < gens.size(); ++p) {
            for (std::uint32_t r : d.column(gens[p])) {
                const Degree& src = c.degrees()[gens[p]];
                const Degree& dst = c.degrees()[r];
                if (it == groups.end() || block_of(dst) != target.first || dst.i != target.second)
                    throw ComplexError("differential leaves its block: " + describe(src) + " -> " + describe(dst));
                cols[p].push_back(local[r]);
                any = true;
            }
        }
        if (!any) return;
        rank_out[gi] = gf2::rank(gf2::SparseMatrixF2::from_columns(it->second.size(), cols));
    });

    std::map<GroupKey, std::size_t> ranks;
    for (std::size_t gi = 0; gi < keys.size(); ++gi) ranks[*keys[gi]] = rank_out[gi];

    std::map<GroupKey, std::size_t> result;
    for (std::size_t gi = 0; gi < keys.size(); ++gi) {
        const GroupKey& key = *keys[gi];
        std::size_t in_rank = 0;
        if (auto prev = ranks.find({key.first, key.second - 1}); prev != ranks.end()) in_rank = prev->second;
        const std::size_t dim = members[gi]->size() - rank_out[gi] - in_rank;
        if (dim) result[key] = dim;
    }
    return result;
}

}  // namespace

BigradedDims forget_k(const TrigradedDims& dims) {
    BigradedDims out;
    for (const auto& [deg, d] : dims) out.add({deg.i, deg.j}, d);
    return out;
}

GradedComplex::GradedComplex(std::vector<Degree> degrees, gf2::SparseMatrixF2 differential)
    : degrees_(std::move(degrees)), d_(std::move(differential)) {
    if (d_.rows() != degrees_.size() || d_.cols() != degrees_.size())
        throw std::invalid_argument("GradedComplex: differential shape does not match the basis");
}

void GradedComplex::validate(const std::vector<int>& allowed_k_drops) const {
    for (std::size_t c = 0; c < size(); ++c) {
        for (std::uint32_t r : d_.column(c)) {
            const Degree& s = degrees_[c];
            const Degree& t = degrees_[r];
            const bool k_ok = std::find(allowed_k_drops.begin(), allowed_k_drops.end(), s.k - t.k) != allowed_k_drops.end();
            if (t.i != s.i + 1 || t.j != s.j || !k_ok)
                throw ComplexError("differential breaks the degree rules: " + describe(s) + " -> " + describe(t));
        }
    }
    if (!squares_to_zero(d_)) throw ComplexError("differential does not square to zero");
}

TrigradedDims GradedComplex::chain_dims() const {
    TrigradedDims out;
    for (const Degree& d : degrees_) out.add(d, 1);
    return out;
}

bool squares_to_zero(const gf2::SparseMatrixF2& d) {
    std::vector<std::uint8_t> odd(d.rows(), 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t c = 0; c < d.cols(); ++c) {
        touched.clear();
        for (std::uint32_t m : d.column(c))
            for (std::uint32_t r : d.column(m)) {
                odd[r] ^= 1;
                touched.push_back(r);
            }
        bool bad = false;
        for (std::uint32_t r : touched) {
            bad = bad || odd[r];
            odd[r] = 0;
        }
        if (bad) return false;
    }
    return true;
}

TrigradedDims homology_dims(const GradedComplex& c, std::size_t threads) {
    for (std::size_t col = 0; col < c.size(); ++col)
        for (std::uint32_t r : c.differential().column(col))
            if (c.degrees()[r].k != c.degrees()[col].k)
                throw ComplexError("differential does not preserve k: " + describe(c.degrees()[col]) + " -> " +
                                   describe(c.degrees()[r]));
    auto raw = blocked_homology<std::pair<int, int>>(
        c, [](const Degree& d) { return std::pair<int, int>{d.j, d.k}; }, threads);
    TrigradedDims out;
    for (const auto& [key, dim] : raw) out.add({key.second, key.first.first, key.first.second}, dim);
    return out;
}

BigradedDims homology_dims_ij(const GradedComplex& c, std::size_t threads) {
    auto raw = blocked_homology<int>(c, [](const Degree& d) { return d.j; }, threads);
    BigradedDims out;
    for (const auto& [key, dim] : raw) out.add({key.second, key.first}, dim);
    return out;
}

}  // namespace annularkh
