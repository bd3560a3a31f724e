#pragma once

// Bounded semantic differencing of class diagrams.

#include <cstddef>
#include <limits>
#include <vector>

#include "semdiff/cd_lang.hpp"
#include "semdiff/cd_semantics.hpp"
#include "semdiff/verdict.hpp"

namespace semdiff::cd {

inline constexpr std::size_t kAllWitnesses = std::numeric_limits<std::size_t>::max();

struct CdDiffResult {
    /// Smallest first: total object count, then canonical text.
    std::vector<ObjectModel> witnesses;
    /// True when the list holds every witness within the bound.
    bool exhausted = true;
    std::size_t bound = 0;
    std::size_t requested = 0;
};

/// Object models with at most `k` instances per class that instantiate `cd1`
/// but not `cd2`. Witnesses are labeled exactly like enumerate_object_models
/// over the joint universe, so the result equals filtering that stream.
CdDiffResult cddiff(const ClassDiagram& cd1, const ClassDiagram& cd2, std::size_t k,
                    std::size_t max_witnesses = kAllWitnesses);

/// Bounded verdict; `bound` of the result is always set to k.
Verdict compare_cd(const ClassDiagram& cd1, const ClassDiagram& cd2, std::size_t k);

}  // namespace semdiff::cd
