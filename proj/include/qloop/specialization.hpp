#pragma once

#include <optional>
#include <vector>

#include "qloop/laurent.hpp"
#include "qloop/shuffle.hpp"

namespace qloop {

enum class SpecVar { X, Y };

/// gamma_v = q^{-sum_{i->j} tau(i) v_i v_j} [x q^{-1/2} (q - q^{-1})]^{-v.v}
RatFunc gamma(const ShuffleContext& ctx, const ColorDegree& v, SpecVar var = SpecVar::X);

/// gamma_v * r(z_ib -> x q^{tau(i)}), normalized.
RatFunc spec_map(const ShuffleContext& ctx, const ShuffleElement& r, SpecVar var = SpecVar::X);

/// For each color, which of its slots go to x (the rest go to y).
using Split = std::vector<std::vector<bool>>;

/// First v_i slots of each color to x.
Split default_split(const ColorDegree& v, const ColorDegree& w);

struct TwoPointFn {
    RatFunc value;  // normalized
    ColorDegree v;
    ColorDegree w;
    int order_diagonal;  // pole order at x = y
    int order_plus;      // at x = y q^2
    int order_minus;     // at x = y q^{-2}
};

/// Closed form of the two-point function:
///   gamma_v(x) gamma_w(y) r(x q^tau, y q^tau) /
///   [(x-y)^{-<v,w>} (yq^2-x)^{v.w-<w,v>} (x-yq^{-2})^{v.w} q^{sum_{i->j} tau(i) v_i w_j + tau(j) v_j w_i}]
TwoPointFn two_point(const ShuffleContext& ctx, const ShuffleElement& r, const ColorDegree& v, const ColorDegree& w,
                     const std::optional<Split>& split = std::nullopt);

/// The same function computed as spec_v(x) (x) spec_w(y) of R, divided by
/// prod_{i,j} zeta_ij(x q^{tau(i)} / y q^{tau(j)})^{v_i w_j}.
RatFunc two_point_direct(const ShuffleContext& ctx, const ShuffleElement& r, const ColorDegree& v,
                         const ColorDegree& w, const std::optional<Split>& split = std::nullopt);

struct PoleOrders {
    int plus;   // at x = y q^2
    int minus;  // at x = y q^{-2}
};

/// Orders at x = yq^{+-2}; throws BoundViolated past max(0,-<w,v>) and
/// max(0,<v,w>), or past 0 when v < w in the AR order (ar may be null).
PoleOrders pole_order_check(const ShuffleContext& ctx, const TwoPointFn& t, const ARQuiver* ar = nullptr);

/// prod_{i,j} [zeta_ji(y q^{tau(j)} / x q^{tau(i)}) / zeta_ij(x q^{tau(i)} / y q^{tau(j)})]^{a_i b_j}
RatFunc zeta_ratio(const ShuffleContext& ctx, const ColorDegree& a, const ColorDegree& b);

/// (x q - y q^{-1}) / (x - y)
RatFunc expected_zeta_ratio();

struct FusionReport {
    bool no_shifted_poles = false;  // orders at x = yq^{+-2} are 0
    bool simple_diagonal = false;   // order at x = y is <= 1
    bool residue_matches = false;   // residue == spec_{a+b}(R)
    bool zeta_ok = false;
    int order_diagonal = 0;
    int order_plus = 0;
    int order_minus = 0;
    RatFunc residue;
    RatFunc spec;
    bool pass() const { return no_shifted_poles && simple_diagonal && residue_matches && zeta_ok; }
};

FusionReport fusion_residue_check(const ShuffleContext& ctx, const ColorDegree& alpha, const ColorDegree& beta,
                                  const ShuffleElement& r);

}  // namespace qloop
