#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qloop/exact_linalg.hpp"
#include "qloop/root_system.hpp"

namespace qloop {

/// Orientation of a Dynkin diagram; edges are 0-based arrows i -> j.
struct QuiverOrientation {
    DynkinType type;
    std::vector<std::pair<int, int>> edges;

    /// Parses "1>2,3>2" (1-based). Throws ConfigError unless the arrows orient
    /// every Dynkin edge exactly once.
    static QuiverOrientation parse(const DynkinType& type, const std::string& text);
    /// Every Dynkin edge oriented from the smaller to the larger vertex.
    static QuiverOrientation standard(const DynkinType& type);
    std::string str() const;
    int rank() const { return type.rank; }
};

/// All 2^{#edges} orientations of the diagram.
std::vector<QuiverOrientation> all_orientations(const DynkinType& type);

/// E with <v,w> = v^T E w.
Eigen::MatrixXi euler_matrix(const QuiverOrientation& o);
int euler_form(const QuiverOrientation& o, const RootVec& v, const RootVec& w);

/// tau(i) = tau(j) + 1 along every arrow i -> j, min tau = 0.
std::vector<int> level_function(const QuiverOrientation& o);

class ARQuiver {
public:
    ARQuiver(const QuiverOrientation& o, const RootSystem& rs);

    const QuiverOrientation& orientation() const { return orientation_; }
    const RootSystem& roots() const { return roots_; }
    /// Arrows a -> b between root indices; a > b in the AR order.
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
    /// a < b in the AR order, i.e. there is a path b -> ... -> a.
    bool less(int a, int b) const { return less_(a, b) != 0; }
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
    int euler(int a, int b) const { return euler_(a, b); }

private:
    QuiverOrientation orientation_;
    RootSystem roots_;
    std::vector<std::pair<int, int>> arrows_;
    Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> less_;
    Eigen::MatrixXi euler_;  // euler_(a, b) = <root a, root b>
};

ARQuiver build_ar_quiver(const QuiverOrientation& o, const RootSystem& rs);

/// Linear extension that breaks AR ties by root index (height, then lexicographic).
TotalOrder default_refinement(const ARQuiver& ar);
bool refines(const ARQuiver& ar, const TotalOrder& order);
/// All linear extensions; throws std::length_error past `limit`.
std::vector<TotalOrder> all_refinements(const ARQuiver& ar, std::size_t limit = 100000);

struct MinimalPair {
    int alpha;
    int beta;
    friend auto operator<=>(const MinimalPair&, const MinimalPair&) = default;
};

/// Minimal pairs of a refinement. Throws std::invalid_argument if the order does not refine the AR order.
std::vector<MinimalPair> minimal_pairs(const ARQuiver& ar, const TotalOrder& refinement);

/// Union of minimal_pairs over every refinement of the AR order: a < b is
/// minimal in some refinement iff no decomposition of a + b lies inside the
/// AR interval (a, b).
std::vector<MinimalPair> minimal_pairs_all_refinements(const ARQuiver& ar);

struct QuiverRep {
    Eigen::VectorXi dims;
    std::vector<RatMatrix> maps;  // maps[e] : V_i -> V_j for edges[e] = (i, j), dims(j) x dims(i)
};

/// Representation of dimension alpha with dim End = 1; entries uniform in [-7, 7].
/// Throws RetryExhausted after 32 draws.
QuiverRep generic_indecomposable(const QuiverOrientation& o, const RootVec& alpha, std::uint64_t seed);

/// Random representation of the given dimension, entries uniform in [lo, hi].
QuiverRep random_rep(const QuiverOrientation& o, const Eigen::VectorXi& dims, std::uint64_t seed, int lo = -2,
                     int hi = 2);

struct HomExt {
    int hom;
    int ext;
};

/// Kernel and cokernel of  (f_i) -> (f_j phi_e - psi_e f_i)_e.
HomExt hom_ext_dims(const QuiverOrientation& o, const QuiverRep& v, const QuiverRep& w);

/// Zeroes the spaces outside `subset` and the maps on edges leaving it.
QuiverRep restrict(const QuiverOrientation& o, const QuiverRep& v, const std::vector<int>& subset);

/// max over v' in [0,v], w' in [0,w] of
///   -sum_i (v'_i w_i + v_i w'_i - v'_i w'_i) + sum_{a->b} v'_b w'_a.
int claim_ineq_max(const QuiverOrientation& o, const RootVec& v, const RootVec& w);

}  // namespace qloop
