#include "qloop/exact_linalg.hpp"

#include <utility>

namespace qloop {

int exact_rank(RatMatrix m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index rank = 0;
    for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
        Eigen::Index pivot = rank;
        while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) m.row(pivot).swap(m.row(rank));
        const Rational inv = Rational(1) / m(rank, c);
        for (Eigen::Index r = rank + 1; r < rows; ++r) {
            if (m(r, c).is_zero()) continue;
            const Rational f = m(r, c) * inv;
            for (Eigen::Index k = c; k < cols; ++k) {
                if (!m(rank, k).is_zero()) m(r, k) -= f * m(rank, k);
            }
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace qloop
