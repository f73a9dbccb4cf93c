#pragma once

#include "annularkh/graded.hpp"
#include "annularkh/khovanov.hpp"

#include <vector>

namespace annularkh::spectral {

struct Page {
    int r = 1;
    TrigradedDims dims;
    /// True when d_r is nonzero, i.e. E_{r+1} differs from E_r.
    bool differential_nonzero = false;
};

struct SpectralSequence {
    std::vector<Page> pages;
    TrigradedDims infinity;
    /// First r with E_r = E_infinity, or 0 when the requested pages stop earlier.
    int stable_at = 0;
};

/// Pages of the spectral sequence of the filtration {k <= p} on a complex
/// whose differential keeps j, raises i by one and never raises k. Pages run
/// from E_1 up to the first stable page, or to `r_max` when that is positive
/// and smaller. Filtration levels step by 2 in k, so all k must share a
/// parity. Throws ComplexError if the differential raises k.
SpectralSequence compute(const GradedComplex& c, int r_max = 0, std::size_t threads = 0);
SpectralSequence compute(const khovanov::FilteredComplex& c, int r_max = 0, std::size_t threads = 0);

/// A single page; r = 0 is the associated graded chain group.
TrigradedDims page(const GradedComplex& c, int r, std::size_t threads = 0);

}  // namespace annularkh::spectral
