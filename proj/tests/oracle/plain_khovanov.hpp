#pragma once

// Reference Khovanov homology over GF(2) for test comparisons. Written from
// the standard Bar-Natan description and sharing no code with the library.

#include <array>
#include <map>
#include <tuple>
#include <vector>

namespace oracle {

// X[a,b,c,d]: a is the incoming under-strand, labels run counterclockwise.
struct PD {
    std::vector<std::array<int, 4>> crossings;
    std::vector<int> signs;          // +1 / -1 per crossing
    std::map<int, int> windings;     // label -> winding (absent means 0)
    int free_loops_trivial = 0;      // extra crossingless components
    int free_loops_nontrivial = 0;
};

// Sign rule for PDs labelled consecutively along each component:
// positive iff j - l == 1 or l - j > 1.
std::vector<int> signs_from_consecutive_labels(const std::vector<std::array<int, 4>>& crossings);

using Bigraded = std::map<std::pair<int, int>, int>;
using Trigraded = std::map<std::tuple<int, int, int>, int>;

// Khovanov homology with the A-smoothing as 0-resolution,
// i = r - n_-, j = (#v+ - #v-) + r + n_+ - 2 n_-.
Bigraded khovanov(const PD& pd);

// Homology of the annular-grading-preserving part of the same complex; a
// circle is essential iff the windings of its labels sum to an odd number.
// The annular degree of v+ / v- on an essential circle is +1 / -1.
Trigraded annular_khovanov(const PD& pd);

int total(const Bigraded& h);
int total(const Trigraded& h);

}  // namespace oracle
