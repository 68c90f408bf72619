#include "qloop/quiver.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qloop/errors.hpp"

namespace qloop {

QuiverOrientation QuiverOrientation::parse(const DynkinType& type, const std::string& text) {
    QuiverOrientation o{type, {}};
    std::set<std::pair<int, int>> wanted;
    for (auto [i, j] : dynkin_edges(type)) wanted.emplace(std::min(i, j), std::max(i, j));
    std::set<std::pair<int, int>> seen;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        auto gt = token.find('>');
        if (gt == std::string::npos) throw ConfigError("orientation: expected 'i>j', got '" + token + "'");
        int i = 0, j = 0;
        try {
            i = std::stoi(token.substr(0, gt)) - 1;
            j = std::stoi(token.substr(gt + 1)) - 1;
        } catch (const std::exception&) {
            throw ConfigError("orientation: bad vertex in '" + token + "'");
        }
        auto key = std::make_pair(std::min(i, j), std::max(i, j));
        if (!wanted.count(key)) throw ConfigError("orientation: '" + token + "' is not an edge of " + type.name());
        if (!seen.insert(key).second) throw ConfigError("orientation: edge in '" + token + "' oriented twice");
        o.edges.emplace_back(i, j);
    }
    if (seen != wanted) throw ConfigError("orientation: not every edge of " + type.name() + " is oriented");
    return o;
}

QuiverOrientation QuiverOrientation::standard(const DynkinType& type) {
    QuiverOrientation o{type, {}};
    for (auto [i, j] : dynkin_edges(type)) o.edges.emplace_back(std::min(i, j), std::max(i, j));
    return o;
}

std::string QuiverOrientation::str() const {
    std::string s;
    for (auto [i, j] : edges) {
        if (!s.empty()) s += ",";
        s += std::to_string(i + 1) + ">" + std::to_string(j + 1);
    }
    return s;
}

std::vector<QuiverOrientation> all_orientations(const DynkinType& type) {
    auto base = QuiverOrientation::standard(type);
    std::vector<QuiverOrientation> out;
    const std::size_t m = base.edges.size();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        QuiverOrientation o = base;
        for (std::size_t e = 0; e < m; ++e) {
            if (mask & (1u << e)) std::swap(o.edges[e].first, o.edges[e].second);
        }
        out.push_back(o);
    }
    return out;
}

Eigen::MatrixXi euler_matrix(const QuiverOrientation& o) {
    Eigen::MatrixXi e = Eigen::MatrixXi::Identity(o.rank(), o.rank());
    for (auto [i, j] : o.edges) e(i, j) -= 1;
    return e;
}

int euler_form(const QuiverOrientation& o, const RootVec& v, const RootVec& w) { return v.dot(euler_matrix(o) * w); }

std::vector<int> level_function(const QuiverOrientation& o) {
    const int n = o.rank();
    std::vector<int> tau(n, 0);
    std::vector<bool> done(n, false);
    done[0] = true;
    for (bool changed = true; changed;) {
        changed = false;
        for (auto [i, j] : o.edges) {
            if (done[i] && !done[j]) {
                tau[j] = tau[i] - 1;
                done[j] = changed = true;
            } else if (done[j] && !done[i]) {
                tau[i] = tau[j] + 1;
                done[i] = changed = true;
            }
        }
    }
    int lo = *std::min_element(tau.begin(), tau.end());
    for (int& t : tau) t -= lo;
    return tau;
}

ARQuiver::ARQuiver(const QuiverOrientation& o, const RootSystem& rs) : orientation_(o), roots_(rs) {
    const int m = rs.size();
    const Eigen::MatrixXi e = euler_matrix(o);
    euler_.resize(m, m);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) euler_(a, b) = rs.root(a).dot(e * rs.root(b));
    }
    // The exclusion bullet is read as a conjunction: no third root gamma with
    // <alpha,gamma> > 0 and <gamma,beta> > 0. The disjunctive reading leaves no arrows.
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            if (a == b || euler_(a, b) <= 0) continue;
            bool direct = true;
            for (int g = 0; g < m && direct; ++g) {
                if (g != a && g != b && euler_(a, g) > 0 && euler_(g, b) > 0) direct = false;
            }
            if (direct) arrows_.emplace_back(a, b);
        }
    }
    less_ = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(m, m);
    for (auto [a, b] : arrows_) less_(b, a) = 1;
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < m; ++i) {
            if (!less_(i, k)) continue;
            for (int j = 0; j < m; ++j) {
                if (less_(k, j)) less_(i, j) = 1;
            }
        }
    }
}

ARQuiver build_ar_quiver(const QuiverOrientation& o, const RootSystem& rs) {
    if (!(o.type == rs.type())) throw ConfigError("orientation type does not match root system");
    return ARQuiver(o, rs);
}

TotalOrder default_refinement(const ARQuiver& ar) {
    const int m = ar.roots().size();
    std::vector<bool> used(m, false);
    std::vector<int> seq;
    while (static_cast<int>(seq.size()) < m) {
        for (int c = 0; c < m; ++c) {
            if (used[c]) continue;
            bool minimal = true;
            for (int d = 0; d < m && minimal; ++d) {
                if (!used[d] && ar.less(d, c)) minimal = false;
            }
            if (minimal) {
                used[c] = true;
                seq.push_back(c);
                break;
            }
        }
    }
    return TotalOrder::from_sequence(std::move(seq));
}

bool refines(const ARQuiver& ar, const TotalOrder& order) {
    const int m = ar.roots().size();
    if (static_cast<int>(order.sequence.size()) != m) return false;
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            if (ar.less(a, b) && !order.less(a, b)) return false;
        }
    }
    return true;
}

namespace {

// Depth-first linear extensions of the AR order restricted to `elems`;
// `visit` returns false to stop.
void linear_extensions(const ARQuiver& ar, const std::vector<int>& elems,
                       const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> seq;
    std::vector<bool> used(elems.size(), false);
    bool stop = false;
    auto rec = [&](auto&& self) -> void {
        if (stop) return;
        if (seq.size() == elems.size()) {
            if (!visit(seq)) stop = true;
            return;
        }
        for (std::size_t c = 0; c < elems.size() && !stop; ++c) {
            if (used[c]) continue;
            bool minimal = true;
            for (std::size_t d = 0; d < elems.size() && minimal; ++d) {
                if (!used[d] && d != c && ar.less(elems[d], elems[c])) minimal = false;
            }
            if (!minimal) continue;
            used[c] = true;
            seq.push_back(elems[c]);
            self(self);
            seq.pop_back();
            used[c] = false;
        }
    };
    rec(rec);
}

}  // namespace

std::vector<TotalOrder> all_refinements(const ARQuiver& ar, std::size_t limit) {
    std::vector<int> elems(ar.roots().size());
    for (std::size_t i = 0; i < elems.size(); ++i) elems[i] = static_cast<int>(i);
    std::vector<TotalOrder> out;
    linear_extensions(ar, elems, [&](const std::vector<int>& seq) {
        if (out.size() >= limit) throw std::length_error("all_refinements: more than " + std::to_string(limit));
        out.push_back(TotalOrder::from_sequence(seq));
        return true;
    });
    return out;
}

std::vector<MinimalPair> minimal_pairs(const ARQuiver& ar, const TotalOrder& refinement) {
    if (!refines(ar, refinement)) throw std::invalid_argument("minimal_pairs: order does not refine the AR order");
    const RootSystem& rs = ar.roots();
    std::vector<MinimalPair> out;
    for (int a = 0; a < rs.size(); ++a) {
        for (int b = 0; b < rs.size(); ++b) {
            if (is_minimal_pair(rs, refinement, a, b)) out.push_back({a, b});
        }
    }
    std::sort(out.begin(), out.end(), [&refinement](const MinimalPair& p, const MinimalPair& q) {
        return std::make_pair(refinement.position[p.alpha], refinement.position[p.beta]) <
               std::make_pair(refinement.position[q.alpha], refinement.position[q.beta]);
    });
    return out;
}

std::vector<MinimalPair> minimal_pairs_all_refinements(const ARQuiver& ar) {
    const RootSystem& rs = ar.roots();
    std::vector<MinimalPair> out;
    for (int a = 0; a < rs.size(); ++a) {
        for (int b = 0; b < rs.size(); ++b) {
            if (a == b) continue;
            auto s = rs.index_of(rs.root(a) + rs.root(b));
            if (!s) continue;
            // (a, b) = -1 forces comparability, so some refinement has a < b iff the AR order does.
            if (!ar.less(a, b)) continue;
            // Some refinement puts exactly the AR interval (a, b) between a and b:
            // everything not above a, then a, the interval, b, and the rest.
            auto inside = [&](int c) { return ar.less(a, c) && ar.less(c, b); };
            bool found = true;
            for (int c = 0; c < rs.size() && found; ++c) {
                if (c == a || c == b || !inside(c)) continue;
                auto d = rs.index_of(rs.root(*s) - rs.root(c));
                if (d && inside(*d)) found = false;
            }
            if (found) out.push_back({a, b});
        }
    }
    return out;
}

QuiverRep random_rep(const QuiverOrientation& o, const Eigen::VectorXi& dims, std::uint64_t seed, int lo, int hi) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(lo, hi);
    QuiverRep v{dims, {}};
    for (auto [i, j] : o.edges) {
        RatMatrix m(dims(j), dims(i));
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = Rational(entry(rng));
        }
        v.maps.push_back(std::move(m));
    }
    return v;
}

QuiverRep generic_indecomposable(const QuiverOrientation& o, const RootVec& alpha, std::uint64_t seed) {
    std::mt19937_64 seeds(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
        QuiverRep v = random_rep(o, alpha, seeds(), -7, 7);
        if (hom_ext_dims(o, v, v).hom == 1) return v;
    }
    throw RetryExhausted("generic_indecomposable: no rep with trivial endomorphisms for " + root_str(alpha));
}

HomExt hom_ext_dims(const QuiverOrientation& o, const QuiverRep& v, const QuiverRep& w) {
    const int n = o.rank();
    std::vector<int> dom_off(n + 1, 0);
    for (int i = 0; i < n; ++i) dom_off[i + 1] = dom_off[i] + w.dims(i) * v.dims(i);
    std::vector<int> cod_off(o.edges.size() + 1, 0);
    for (std::size_t e = 0; e < o.edges.size(); ++e) {
        auto [i, j] = o.edges[e];
        cod_off[e + 1] = cod_off[e] + w.dims(j) * v.dims(i);
    }
    RatMatrix m = RatMatrix::Constant(cod_off.back(), dom_off.back(), Rational(0));
    for (std::size_t e = 0; e < o.edges.size(); ++e) {
        auto [i, j] = o.edges[e];
        const RatMatrix& phi = v.maps[e];
        const RatMatrix& psi = w.maps[e];
        const int vi = v.dims(i);
        // f_j phi_e: basis E_{rc} of Hom(V_j, W_j) contributes row r of phi's row c.
        for (int r = 0; r < w.dims(j); ++r) {
            for (int c = 0; c < v.dims(j); ++c) {
                int col = dom_off[j] + r * v.dims(j) + c;
                for (int t = 0; t < vi; ++t) m(cod_off[e] + r * vi + t, col) += phi(c, t);
            }
        }
        // -psi_e f_i: basis E_{rc} of Hom(V_i, W_i) contributes column c from psi's column r.
        for (int r = 0; r < w.dims(i); ++r) {
            for (int c = 0; c < vi; ++c) {
                int col = dom_off[i] + r * vi + c;
                for (int s = 0; s < w.dims(j); ++s) m(cod_off[e] + s * vi + c, col) -= psi(s, r);
            }
        }
    }
    const int rank = exact_rank(m);
    return {dom_off.back() - rank, cod_off.back() - rank};
}

QuiverRep restrict(const QuiverOrientation& o, const QuiverRep& v, const std::vector<int>& subset) {
    QuiverRep r{Eigen::VectorXi::Zero(o.rank()), {}};
    for (int i : subset) r.dims(i) = v.dims(i);
    for (std::size_t e = 0; e < o.edges.size(); ++e) {
        auto [i, j] = o.edges[e];
        if (r.dims(i) == v.dims(i) && r.dims(j) == v.dims(j) && r.dims(i) > 0 && r.dims(j) > 0) {
            r.maps.push_back(v.maps[e]);
        } else {
            r.maps.emplace_back(r.dims(j), r.dims(i));
        }
    }
    return r;
}

int claim_ineq_max(const QuiverOrientation& o, const RootVec& v, const RootVec& w) {
    const int n = o.rank();
    RootVec vp = RootVec::Zero(n), wp = RootVec::Zero(n);
    int best = std::numeric_limits<int>::min();
    auto advance = [n](RootVec& x, const RootVec& cap) {
        for (int i = 0; i < n; ++i) {
            if (x(i) < cap(i)) {
                ++x(i);
                return true;
            }
            x(i) = 0;
        }
        return false;
    };
    do {
        do {
            int val = -(vp.dot(w) + v.dot(wp) - vp.dot(wp));
            for (auto [a, b] : o.edges) val += vp(b) * wp(a);
            best = std::max(best, val);
        } while (advance(wp, w));
    } while (advance(vp, v));
    return best;
}

}  // namespace qloop
