#include "annularkh/spectral.hpp"
#include "annularkh/parallel.hpp"

#include <algorithm>
#include <climits>
#include <map>

namespace annularkh::spectral {
namespace {

// Everything needed to evaluate pages for one j: chain sizes per (i, k) and,
// for each i, the (column k, low row k) pairs of d: C^i -> C^{i+1} after an
// ordered reduction with both bases sorted by k. The number of such pairs
// with column k <= b and row k > a is the rank of the block of d from
// filtration <= b to the quotient by filtration <= a.
struct Block {
    std::map<int, std::map<int, std::size_t>> sizes;             // i -> k -> count
    std::map<int, std::vector<std::pair<int, int>>> pairs;        // i -> pairs
};

std::size_t rho(const std::vector<std::pair<int, int>>* pairs, int a, int b) {
    if (!pairs) return 0;
    std::size_t n = 0;
    for (const auto& [kc, kr] : *pairs) n += (kc <= b && kr > a) ? 1 : 0;
    return n;
}

class Evaluator {
public:
    Evaluator(const GradedComplex& c, std::size_t threads) {
        const auto& degrees = c.degrees();
        const auto& d = c.differential();
        for (std::size_t col = 0; col < c.size(); ++col)
            for (std::uint32_t row : d.column(col)) {
                const Degree& s = degrees[col];
                const Degree& t = degrees[row];
                if (t.k > s.k || t.i != s.i + 1 || t.j != s.j)
                    throw ComplexError("differential does not respect the filtration");
            }

        // Basis per (j, i), sorted by k.
        std::map<std::pair<int, int>, std::vector<std::uint32_t>> groups;
        for (std::size_t g = 0; g < c.size(); ++g) groups[{degrees[g].j, degrees[g].i}].push_back(static_cast<std::uint32_t>(g));
        std::vector<std::uint32_t> local(c.size());
        for (auto& [key, gens] : groups) {
            std::stable_sort(gens.begin(), gens.end(), [&](std::uint32_t x, std::uint32_t y) { return degrees[x].k < degrees[y].k; });
            for (std::size_t p = 0; p < gens.size(); ++p) local[gens[p]] = static_cast<std::uint32_t>(p);
            for (std::uint32_t g : gens) blocks_[key.first].sizes[key.second][degrees[g].k]++;
            k_min_ = std::min(k_min_, degrees[gens.front()].k);
            k_max_ = std::max(k_max_, degrees[gens.back()].k);
        }

        std::vector<std::pair<const std::pair<int, int>*, const std::vector<std::uint32_t>*>> work;
        for (const auto& [key, gens] : groups) work.emplace_back(&key, &gens);
        std::vector<std::vector<std::pair<int, int>>> results(work.size());
        parallel_for(work.size(), threads, [&](std::size_t w) {
            const auto [j, i] = *work[w].first;
            auto target = groups.find({j, i + 1});
            if (target == groups.end()) return;
            const auto& gens = *work[w].second;
            std::vector<std::vector<std::uint32_t>> cols(gens.size());
            for (std::size_t p = 0; p < gens.size(); ++p)
                for (std::uint32_t row : d.column(gens[p])) cols[p].push_back(local[row]);
            const auto m = gf2::SparseMatrixF2::from_columns(target->second.size(), cols);
            const auto low = gf2::reduce_ordered(m);
            for (std::size_t p = 0; p < gens.size(); ++p)
                if (low[p] >= 0)
                    results[w].emplace_back(degrees[gens[p]].k,
                                            degrees[target->second[static_cast<std::size_t>(low[p])]].k);
        });
        for (std::size_t w = 0; w < work.size(); ++w) {
            const auto [j, i] = *work[w].first;
            blocks_[j].pairs[i] = std::move(results[w]);
        }
        if (c.size() == 0) k_min_ = k_max_ = 0;
        for (const Degree& deg : degrees)
            if ((deg.k - k_min_) % 2 != 0) throw ComplexError("annular degrees of mixed parity");
    }

    int spread() const { return k_max_ - k_min_; }

    TrigradedDims page(int r) const {
        TrigradedDims out;
        for (const auto& [j, block] : blocks_)
            for (const auto& [i, by_k] : block.sizes) {
                const auto* here = find(block.pairs, i);
                const auto* before = find(block.pairs, i - 1);
                for (int k = k_min_; k <= k_max_; k += 2) {
                    const long long dim = r == 0 ? static_cast<long long>(at(by_k, k))
                                                 : static_cast<long long>(z(by_k, here, r, k)) -
                                                       static_cast<long long>(z(by_k, here, r - 1, k - 2)) -
                                                       static_cast<long long>(b(before, r - 1, k)) +
                                                       static_cast<long long>(b(before, r, k - 2));
                    if (dim < 0) throw std::logic_error("negative page dimension");
                    out.add({i, j, k}, static_cast<std::size_t>(dim));
                }
            }
        return out;
    }

private:
    static const std::vector<std::pair<int, int>>* find(const std::map<int, std::vector<std::pair<int, int>>>& m, int i) {
        auto it = m.find(i);
        return it == m.end() ? nullptr : &it->second;
    }
    static std::size_t at(const std::map<int, std::size_t>& by_k, int k) {
        auto it = by_k.find(k);
        return it == by_k.end() ? 0 : it->second;
    }
    static std::size_t filtered(const std::map<int, std::size_t>& by_k, int k) {
        std::size_t n = 0;
        for (const auto& [kk, c] : by_k)
            if (kk <= k) n += c;
        return n;
    }
    // dim of F_k cap d^{-1}(F_{k-2r})
    static std::size_t z(const std::map<int, std::size_t>& by_k, const std::vector<std::pair<int, int>>* pairs, int r,
                         int k) {
        return filtered(by_k, k) - rho(pairs, k - 2 * r, k);
    }
    // dim of F_k cap d(F_{k+2r})
    static std::size_t b(const std::vector<std::pair<int, int>>* pairs, int r, int k) {
        return rho(pairs, INT_MIN, k + 2 * r) - rho(pairs, k, k + 2 * r);
    }

    std::map<int, Block> blocks_;
    int k_min_ = INT_MAX;
    int k_max_ = INT_MIN;
};

}  // namespace

TrigradedDims page(const GradedComplex& c, int r, std::size_t threads) {
    if (r < 0) throw std::invalid_argument("page index must be non-negative");
    return Evaluator(c, threads).page(r);
}

SpectralSequence compute(const GradedComplex& c, int r_max, std::size_t threads) {
    const Evaluator ev(c, threads);
    SpectralSequence ss;
    const int last = ev.spread() / 2 + 1;
    ss.infinity = ev.page(last);
    for (int r = 1;; ++r) {
        if (r_max > 0 && r > r_max) break;
        Page p{r, ev.page(r), false};
        const bool stable = p.dims == ss.infinity;
        ss.pages.push_back(std::move(p));
        if (stable) {
            ss.stable_at = r;
            break;
        }
    }
    for (std::size_t n = 0; n + 1 < ss.pages.size(); ++n) ss.pages[n].differential_nonzero = !(ss.pages[n].dims == ss.pages[n + 1].dims);
    if (!ss.pages.empty() && ss.stable_at == 0)
        ss.pages.back().differential_nonzero = !(ev.page(ss.pages.back().r + 1) == ss.pages.back().dims);
    return ss;
}

SpectralSequence compute(const khovanov::FilteredComplex& c, int r_max, std::size_t threads) {
    return compute(c.complex(), r_max, threads);
}

}  // namespace annularkh::spectral
