#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "qloop/quiver.hpp"
#include "qloop/specialization.hpp"

namespace qloop {

/// Worker count from QLOOP_THREADS, else the hardware concurrency (at least 1).
unsigned thread_count();

/// Runs task(0..n-1) on `threads` workers. Each index runs exactly once.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& task);

struct FusionConfig {
    int window = 2;
    int d_min = -2;
    int d_max = 2;
    std::optional<std::size_t> pair;  // index into the minimal pair list
    unsigned threads = 1;
    bool keep_values = true;  // store residue and spec in every record
};

struct FusionRecord {
    std::size_t pair_index = 0;
    int degree = 0;
    Word word;
    FusionReport report;
};

struct FusionRun {
    std::vector<MinimalPair> pairs;
    std::vector<FusionRecord> records;  // ordered by (pair, degree, spanning set position)
    std::size_t failures = 0;
};

/// Checks the fusion identity for every minimal pair over all refinements of
/// the AR order and every spanning element of degree alpha + beta.
FusionRun verify_fusion(const QuiverOrientation& o, const FusionConfig& cfg);

}  // namespace qloop
