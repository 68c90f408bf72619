#pragma once

#include <Eigen/Core>

#include "qloop/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<qloop::Rational> : GenericNumTraits<qloop::Rational> {
    typedef qloop::Rational Real;
    typedef qloop::Rational NonInteger;
    typedef qloop::Rational Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 16
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qloop {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Rank by fraction-exact Gaussian elimination.
int exact_rank(RatMatrix m);

}  // namespace qloop
