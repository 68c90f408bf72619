#include "qloop/paths.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

#include "qloop/errors.hpp"

namespace qloop {

namespace {

void check_legs(const Legs& legs) {
    for (const auto& l : legs) {
        if (l.dx < 1) throw std::invalid_argument("leg with dx < 1");
    }
}

int floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return static_cast<int>(q);
}

// Heights at every integer abscissa 0..X.
std::vector<Rational> integer_heights(const Legs& legs) {
    std::vector<Rational> h{Rational(0)};
    Rational y(0);
    for (const auto& l : legs) {
        for (int s = 1; s <= l.dx; ++s) h.push_back(y + Rational(static_cast<std::int64_t>(l.dy) * s, l.dx));
        y += l.dy;
    }
    return h;
}

bool legs_less(const ConvexPath& a, const ConvexPath& b) {
    return std::lexicographical_compare(a.legs.begin(), a.legs.end(), b.legs.begin(), b.legs.end(),
                                        [](const Leg& u, const Leg& v) {
                                            return std::pair(u.dx, u.dy) < std::pair(v.dx, v.dy);
                                        });
}

void extend(int x, int y, const Rational* last_slope, PathSize size, int y_min, int y_max, Legs& legs,
            std::vector<ConvexPath>& out) {
    if (x == size.first) {
        if (y == size.second) out.push_back({legs});
        return;
    }
    for (int nx = x + 1; nx <= size.first; ++nx) {
        for (int ny = y_min; ny <= y_max; ++ny) {
            Leg leg{nx - x, ny - y};
            Rational s = leg.slope();
            if (last_slope && !(*last_slope < s)) continue;
            // The remaining legs are steeper, so the endpoint must be reachable.
            if (nx < size.first && !(s * (size.first - nx) < Rational(size.second - ny))) continue;
            if (nx == size.first && ny != size.second) continue;
            legs.push_back(leg);
            extend(nx, ny, &s, size, y_min, y_max, legs, out);
            legs.pop_back();
        }
    }
}

}  // namespace

PathSize path_size(const Legs& legs) {
    PathSize s{0, 0};
    for (const auto& l : legs) {
        s.first += l.dx;
        s.second += l.dy;
    }
    return s;
}

PathSize ConvexPath::size() const { return path_size(legs); }

std::string to_string(const Legs& legs) {
    std::string s;
    for (const auto& l : legs) {
        if (!s.empty()) s += ",";
        s += "(" + std::to_string(l.dx) + "," + std::to_string(l.dy) + ")";
    }
    return s;
}

Legs parse_legs(const std::string& text) {
    static const std::regex leg(R"(\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*(,|$))");
    Legs legs;
    auto it = text.cbegin();
    std::smatch m;
    while (it != text.cend()) {
        if (!std::regex_search(it, text.cend(), m, leg, std::regex_constants::match_continuous)) {
            throw ConfigError("malformed leg list: " + text);
        }
        Leg l{std::stoi(m[1]), std::stoi(m[2])};
        if (l.dx < 1) throw ConfigError("leg with dx < 1: " + text);
        legs.push_back(l);
        it = m[0].second;
    }
    return legs;
}

bool is_convex(const Legs& legs) {
    check_legs(legs);
    for (std::size_t a = 1; a < legs.size(); ++a) {
        if (legs[a].slope() < legs[a - 1].slope()) return false;
    }
    return true;
}

ConvexPath convexify(Legs legs) {
    check_legs(legs);
    std::stable_sort(legs.begin(), legs.end(), [](const Leg& a, const Leg& b) { return a.slope() < b.slope(); });
    ConvexPath p;
    for (const auto& l : legs) {
        if (!p.legs.empty() && p.legs.back().slope() == l.slope()) {
            p.legs.back().dx += l.dx;
            p.legs.back().dy += l.dy;
        } else {
            p.legs.push_back(l);
        }
    }
    return p;
}

Rational height_at(const Legs& legs, const Rational& x) {
    check_legs(legs);
    Rational x0(0), y(0);
    for (const auto& l : legs) {
        Rational x1 = x0 + l.dx;
        if (x <= x1) return y + (x - x0) * l.slope();
        x0 = x1;
        y += l.dy;
    }
    if (x == x0) return y;
    throw std::out_of_range("height_at: x outside the path");
}

bool lies_below(const Legs& p, const Legs& p2) {
    check_legs(p);
    check_legs(p2);
    if (path_size(p) != path_size(p2)) throw SizeMismatch("lies_below: paths of different size");
    // Both graphs are linear between consecutive integers.
    auto h = integer_heights(p), h2 = integer_heights(p2);
    for (std::size_t x = 0; x < h.size(); ++x) {
        if (h2[x] < h[x]) return false;
    }
    return true;
}

Rational area_between(const Legs& p, const Legs& p2) {
    if (!lies_below(p, p2)) throw NotBelow("area_between: first path is not below the second");
    auto h = integer_heights(p), h2 = integer_heights(p2);
    Rational area(0);
    for (std::size_t x = 1; x < h.size(); ++x) area += (h2[x - 1] - h[x - 1] + h2[x] - h[x]) * Rational(1, 2);
    return area;
}

std::vector<ConvexPath> enumerate_convex(PathSize size, int y_min) {
    std::vector<ConvexPath> out;
    if (size.first < 0) return out;
    if (size.first == 0) {
        if (size.second == 0) out.push_back({});
        return out;
    }
    // A convex path never rises above max(0, Y).
    const int y_max = std::max(0, size.second);
    if (y_min > std::min(0, size.second)) return out;
    Legs legs;
    extend(0, 0, nullptr, size, y_min, y_max, legs, out);
    std::sort(out.begin(), out.end(), legs_less);
    return out;
}

int convex_window_floor(PathSize size, const Legs& bound) {
    check_legs(bound);
    if (path_size(bound) != size) throw SizeMismatch("convex_window_floor: bound has a different size");
    const auto [X, Y] = size;
    if (bound.empty()) return 0;
    // Any leg of the bound is steeper than lo and shallower than hi.
    const Leg* lo = &bound[0];
    const Leg* hi = &bound[0];
    for (const auto& l : bound) {
        if (l.slope() < lo->slope()) lo = &l;
        if (hi->slope() < l.slope()) hi = &l;
    }
    // Lowest vertex m of a path not below the bound satisfies
    // m > min(0, s_lo) X and m > Y - max(0, s_hi) X.
    int a = std::min(0, floor_div(static_cast<long long>(lo->dy) * X, lo->dx));
    int b = Y - std::max(0, -floor_div(-static_cast<long long>(hi->dy) * X, hi->dx));
    return std::min(a, b);
}

std::vector<ConvexPath> enumerate_convex_above(PathSize size, const Legs& bound) {
    const int floor = convex_window_floor(size, bound);
    const bool convex = is_convex(bound);
    const Legs self = convexify(bound).legs;
    std::vector<ConvexPath> out;
    for (auto& p : enumerate_convex(size, floor)) {
        if ((convex && p.legs == self) || !lies_below(p.legs, bound)) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace qloop
