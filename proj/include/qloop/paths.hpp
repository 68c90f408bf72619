#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "qloop/rational.hpp"

namespace qloop {

struct Leg {
    int dx = 1;  // >= 1
    int dy = 0;
    Rational slope() const { return Rational(dy, dx); }
    friend bool operator==(const Leg&, const Leg&) = default;
};

using Legs = std::vector<Leg>;
using PathSize = std::pair<int, int>;

/// Legs of strictly increasing slope starting at the origin.
struct ConvexPath {
    Legs legs;
    PathSize size() const;
    friend bool operator==(const ConvexPath&, const ConvexPath&) = default;
};

PathSize path_size(const Legs& legs);
std::string to_string(const Legs& legs);
/// Parses "(1,0),(2,3)"; throws ConfigError.
Legs parse_legs(const std::string& text);

bool is_convex(const Legs& legs);
ConvexPath convexify(Legs legs);

/// Height of the path at x, for 0 <= x <= total dx.
Rational height_at(const Legs& legs, const Rational& x);

/// p lies weakly below p2 everywhere. Throws SizeMismatch.
bool lies_below(const Legs& p, const Legs& p2);

/// Area enclosed between p (below) and p2. Throws SizeMismatch, NotBelow.
Rational area_between(const Legs& p, const Legs& p2);

/// Every convex lattice path of the given size whose vertices have y >= y_min.
std::vector<ConvexPath> enumerate_convex(PathSize size, int y_min);

/// Lowest vertex height a convex path of this size can have without lying below `bound`.
int convex_window_floor(PathSize size, const Legs& bound);

/// Convex lattice paths of the given size that do not lie below `bound`,
/// together with `bound` itself when it is convex. Sorted by leg lists.
std::vector<ConvexPath> enumerate_convex_above(PathSize size, const Legs& bound);

}  // namespace qloop
