#include "qloop/root_system.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qloop/errors.hpp"

namespace qloop {

DynkinType DynkinType::parse(const std::string& text) {
    if (text.size() < 2) throw ConfigError("bad Dynkin type '" + text + "'");
    DynkinType t;
    switch (text[0]) {
        case 'A': t.family = Family::A; break;
        case 'D': t.family = Family::D; break;
        case 'E': t.family = Family::E; break;
        default: throw ConfigError("bad Dynkin family in '" + text + "'");
    }
    try {
        std::size_t used = 0;
        t.rank = std::stoi(text.substr(1), &used);
        if (used != text.size() - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw ConfigError("bad Dynkin rank in '" + text + "'");
    }
    bool ok = (t.family == Family::A && t.rank >= 1) || (t.family == Family::D && t.rank >= 4) ||
              (t.family == Family::E && t.rank >= 6 && t.rank <= 8);
    if (!ok) throw ConfigError("unsupported Dynkin type '" + text + "'");
    return t;
}

std::string DynkinType::name() const {
    const char letter = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
    return std::string(1, letter) + std::to_string(rank);
}

std::vector<std::pair<int, int>> dynkin_edges(const DynkinType& t) {
    std::vector<std::pair<int, int>> edges;
    const int n = t.rank;
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(n - 3, n - 1);
            break;
        case Family::E:
            edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
            for (int i = 4; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
    }
    return edges;
}

CartanMatrix cartan_matrix(const DynkinType& t) {
    CartanMatrix a = 2 * CartanMatrix::Identity(t.rank, t.rank);
    for (auto [i, j] : dynkin_edges(t)) a(i, j) = a(j, i) = -1;
    return a;
}

RootSystem::RootSystem(DynkinType type, CartanMatrix cartan, std::vector<RootVec> roots)
    : type_(type), cartan_(std::move(cartan)), roots_(std::move(roots)) {}

std::optional<int> RootSystem::index_of(const RootVec& v) const {
    if (v.size() != rank()) return std::nullopt;
    for (int k = 0; k < size(); ++k) {
        if (roots_[k] == v) return k;
    }
    return std::nullopt;
}

RootVec RootSystem::simple(int i) const { return RootVec::Unit(rank(), i); }

int height(const RootVec& v) { return v.sum(); }

std::string root_str(const RootVec& v) {
    std::string s = "(";
    for (int i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

RootSystem build_root_system(const DynkinType& t) {
    CartanMatrix a = cartan_matrix(t);
    const int n = t.rank;
    auto key = [](const RootVec& v) { return std::vector<int>(v.data(), v.data() + v.size()); };
    std::map<std::vector<int>, RootVec> found;
    std::vector<RootVec> layer;
    for (int i = 0; i < n; ++i) {
        layer.push_back(RootVec::Unit(n, i));
        found.emplace(key(layer.back()), layer.back());
    }
    while (!layer.empty()) {
        std::vector<RootVec> next;
        for (const RootVec& b : layer) {
            for (int i = 0; i < n; ++i) {
                if (b.dot(a.col(i)) != -1) continue;
                RootVec c = b + RootVec::Unit(n, i);
                if (found.emplace(key(c), c).second) next.push_back(c);
            }
        }
        layer = std::move(next);
    }
    std::vector<RootVec> roots;
    for (auto& [k, v] : found) roots.push_back(v);
    std::sort(roots.begin(), roots.end(), [&key](const RootVec& u, const RootVec& v) {
        if (height(u) != height(v)) return height(u) < height(v);
        return key(u) > key(v);
    });
    return RootSystem(t, std::move(a), std::move(roots));
}

int pairing_form(const RootSystem& rs, const RootVec& a, const RootVec& b) { return a.dot(rs.cartan() * b); }

TotalOrder TotalOrder::from_sequence(std::vector<int> sequence) {
    TotalOrder o;
    o.position.assign(sequence.size(), -1);
    for (std::size_t p = 0; p < sequence.size(); ++p) {
        int r = sequence[p];
        if (r < 0 || r >= static_cast<int>(sequence.size()) || o.position[r] != -1) {
            throw std::invalid_argument("TotalOrder: not a permutation");
        }
        o.position[r] = static_cast<int>(p);
    }
    o.sequence = std::move(sequence);
    return o;
}

bool is_minimal_pair(const RootSystem& rs, const TotalOrder& order, int alpha, int beta) {
    if (!order.less(alpha, beta)) return false;
    RootVec sum = rs.root(alpha) + rs.root(beta);
    if (!rs.is_root(sum)) return false;
    for (int a = 0; a < rs.size(); ++a) {
        if (!order.less(alpha, a) || !order.less(a, beta)) continue;
        auto b = rs.index_of(sum - rs.root(a));
        if (b && order.less(a, *b) && order.less(*b, beta)) return false;
    }
    return true;
}

std::vector<std::vector<int>> root_decompositions(const RootSystem& rs, const std::vector<int>& candidates,
                                                  const RootVec& target, int min_parts, std::size_t limit) {
    std::vector<std::vector<int>> hits;
    std::vector<int> chosen;
    // Depth-first over nondecreasing candidate positions; the remainder must stay nonnegative.
    auto dfs = [&](auto&& self, std::size_t from, const RootVec& rest) -> void {
        if (hits.size() >= limit) return;
        if (rest.isZero()) {
            if (static_cast<int>(chosen.size()) >= min_parts) hits.push_back(chosen);
            return;
        }
        for (std::size_t c = from; c < candidates.size(); ++c) {
            RootVec r = rest - rs.root(candidates[c]);
            if (r.minCoeff() < 0) continue;
            chosen.push_back(candidates[c]);
            self(self, c, r);
            chosen.pop_back();
            if (hits.size() >= limit) return;
        }
    };
    dfs(dfs, 0, target);
    return hits;
}

namespace {

std::vector<int> strictly_between(const RootSystem& rs, const TotalOrder& order, int lo, int hi) {
    std::vector<int> out;
    for (int g = 0; g < rs.size(); ++g) {
        if (order.less(lo, g) && order.less(g, hi)) out.push_back(g);
    }
    return out;
}

void require_minimal_pair(const RootSystem& rs, const TotalOrder& order, int alpha, int beta) {
    if (!is_minimal_pair(rs, order, alpha, beta)) {
        throw std::invalid_argument("not a minimal pair summing to a root: " + root_str(rs.root(alpha)) + ", " +
                                    root_str(rs.root(beta)));
    }
}

}  // namespace

bool claim1_check(const RootSystem& rs, const TotalOrder& order, int alpha, int beta) {
    require_minimal_pair(rs, order, alpha, beta);
    RootVec target = rs.root(alpha) + rs.root(beta);
    return root_decompositions(rs, strictly_between(rs, order, alpha, beta), target, 2).empty();
}

bool claim2_check(const RootSystem& rs, const TotalOrder& order, int alpha, int beta) {
    require_minimal_pair(rs, order, alpha, beta);
    int sum = *rs.index_of(rs.root(alpha) + rs.root(beta));
    RootVec a2b = rs.root(alpha) + 2 * rs.root(beta);
    RootVec twoab = 2 * rs.root(alpha) + rs.root(beta);
    bool upper = root_decompositions(rs, strictly_between(rs, order, sum, beta), a2b, 1).empty();
    bool lower = root_decompositions(rs, strictly_between(rs, order, alpha, sum), twoab, 1).empty();
    return upper && lower;
}

}  // namespace qloop
