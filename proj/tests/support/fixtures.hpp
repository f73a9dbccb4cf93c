#pragma once

#include "annularkh/diagram.hpp"
#include "annularkh/graded.hpp"
#include "oracle/plain_khovanov.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

std::string corpus_dir();
std::string fixture_dir();

/// Every top-level corpus diagram, sorted by file name.
const std::vector<annularkh::AnnularDiagram>& corpus();
const annularkh::AnnularDiagram& corpus_entry(const std::string& name);

annularkh::AnnularDiagram sigma1_closure();
/// Standard right-handed trefoil with the axis outside the diagram.
annularkh::AnnularDiagram right_trefoil();

/// 3_1 as listed in the knot tables: X[1,4,2,5], X[3,6,4,1], X[5,2,6,3].
oracle::PD left_trefoil_pd();

/// Oracle input for a diagram: labels are edge indices + 1.
oracle::PD to_pd(const annularkh::AnnularDiagram& d);

oracle::Bigraded to_map(const annularkh::BigradedDims& dims);
oracle::Trigraded to_map(const annularkh::TrigradedDims& dims);
oracle::Bigraded negated(const oracle::Bigraded& h);
oracle::Trigraded negated(const oracle::Trigraded& h);

}  // namespace fixtures
