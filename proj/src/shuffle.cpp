#include "qloop/shuffle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "qloop/errors.hpp"

namespace qloop {

namespace {

// Placeholder variables for word positions; slots this large never occur in elements.
constexpr int kPositionBase = 8192;

VarId zv(int color, int slot) { return VarId::z(color, slot); }

// Simultaneous renaming of variables.
LaurentPoly rename(const LaurentPoly& p, const std::map<VarId, VarId>& names) {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        std::vector<Monomial::Entry> entries;
        entries.reserve(t.monomial.entries().size());
        for (const auto& [v, e] : t.monomial.entries()) {
            auto it = names.find(v);
            entries.emplace_back(it == names.end() ? v : it->second, e);
        }
        out.push_back(Term{Monomial::from_entries(std::move(entries)), t.coeff});
    }
    return LaurentPoly::from_terms(std::move(out));
}

// z_a - q^{halves/2} z_b
LaurentPoly binomial(VarId a, VarId b, int halves) {
    return LaurentPoly::var(a) - LaurentPoly(Monomial::q_half(halves) * Monomial::var(b));
}

LaurentPoly divide_by_vandermonde(LaurentPoly p, const ColorDegree& k) {
    for (int i = 0; i < k.size(); ++i) {
        for (int b = 1; b <= k(i); ++b) {
            for (int c = b + 1; c <= k(i); ++c) {
                auto quotient = exact_divide(p, LinearBinomial{zv(i, b), zv(i, c), 0});
                if (!quotient) throw std::logic_error("shuffle: antisymmetric numerator not divisible by Vandermonde factor");
                p = std::move(*quotient);
            }
        }
    }
    return p;
}

// All size-m subsets of {1..n}, as increasing lists.
std::vector<std::vector<int>> subsets(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n - (m - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a) {
        for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
    }
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

ShuffleContext::ShuffleContext(QuiverOrientation orientation)
    : orientation_(std::move(orientation)),
      cartan_(cartan_matrix(orientation_.type)),
      arrow_(Eigen::MatrixXi::Zero(orientation_.rank(), orientation_.rank())),
      tau_(level_function(orientation_)) {
    for (auto [i, j] : orientation_.edges) {
        arrow_(i, j) = 1;
        arrow_(j, i) = -1;
    }
}

std::vector<NormalizedBinomial> ShuffleContext::edge_factors(const ColorDegree& k) const {
    std::vector<NormalizedBinomial> out;
    for (auto [i, j] : orientation_.edges) {
        for (int b = 1; b <= k(i); ++b) {
            for (int c = 1; c <= k(j); ++c) out.push_back(make_binomial(zv(i, b), zv(j, c)));
        }
    }
    return out;
}

RatFunc ShuffleElement::as_ratfunc(const ShuffleContext& ctx) const {
    RatFunc f(numerator);
    for (const auto& b : ctx.edge_factors(degree)) f.divide_by(b);
    return f;
}

ShuffleElement unit(const ShuffleContext& ctx) { return {ColorDegree::Zero(ctx.rank()), LaurentPoly(1)}; }

ShuffleElement generator(const ShuffleContext& ctx, int color, int d) {
    if (color < 0 || color >= ctx.rank()) throw MalformedWord("generator: color out of range");
    return {ColorDegree::Unit(ctx.rank(), color), LaurentPoly::var(zv(color, 1), d)};
}

ShuffleElement operator+(const ShuffleElement& a, const ShuffleElement& b) {
    if (a.degree != b.degree) throw std::invalid_argument("ShuffleElement: adding different degrees");
    return {a.degree, a.numerator + b.numerator};
}

ShuffleElement operator-(const ShuffleElement& a, const ShuffleElement& b) {
    if (a.degree != b.degree) throw std::invalid_argument("ShuffleElement: subtracting different degrees");
    return {a.degree, a.numerator - b.numerator};
}

ShuffleElement operator*(const Rational& c, const ShuffleElement& a) { return {a.degree, a.numerator * c}; }

ShuffleElement operator*(const LaurentPoly& c, const ShuffleElement& a) {
    if (!c.is_scalar()) throw std::invalid_argument("ShuffleElement: coefficient must be a scalar in q");
    return {a.degree, c * a.numerator};
}

std::optional<int> homogeneous_degree(const ShuffleContext& ctx, const ShuffleElement& f) {
    if (f.is_zero()) return std::nullopt;
    int g = f.numerator.terms().front().monomial.grade();
    for (const auto& t : f.numerator.terms()) {
        if (t.monomial.grade() != g) return std::nullopt;
    }
    return g - static_cast<int>(ctx.edge_factors(f.degree).size());
}

ShuffleElement shuffle_product(const ShuffleContext& ctx, const ShuffleElement& f, const ShuffleElement& g) {
    const int n = ctx.rank();
    const ColorDegree total = f.degree + g.degree;
    if (f.is_zero() || g.is_zero()) return {total, LaurentPoly()};
    std::vector<std::vector<std::vector<int>>> choices(n);
    for (int i = 0; i < n; ++i) choices[i] = subsets(total(i), f.degree(i));
    std::vector<std::size_t> pick(n, 0);
    LaurentPoly sum;
    while (true) {
        // Slots of F's and G's variables under this shuffle.
        std::vector<std::vector<int>> fs(n), gs(n);
        std::map<VarId, VarId> fmap, gmap;
        for (int i = 0; i < n; ++i) {
            fs[i] = choices[i][pick[i]];
            for (int s = 1; s <= total(i); ++s) {
                if (!std::binary_search(fs[i].begin(), fs[i].end(), s)) gs[i].push_back(s);
            }
            for (int b = 0; b < f.degree(i); ++b) fmap[zv(i, b + 1)] = zv(i, fs[i][b]);
            for (int c = 0; c < g.degree(i); ++c) gmap[zv(i, c + 1)] = zv(i, gs[i][c]);
        }
        LaurentPoly term = rename(f.numerator, fmap) * rename(g.numerator, gmap);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) {
                    for (int a : fs[i]) {
                        for (int b : gs[i]) {
                            LaurentPoly factor = binomial(zv(i, a), zv(i, b), -4);
                            term *= a < b ? factor : -factor;
                        }
                    }
                    // Vandermonde factors inside each block survive.
                    for (const auto* block : {&fs[i], &gs[i]}) {
                        for (std::size_t a = 0; a < block->size(); ++a) {
                            for (std::size_t b = a + 1; b < block->size(); ++b) {
                                term *= binomial(zv(i, (*block)[a]), zv(i, (*block)[b]), 0);
                            }
                        }
                    }
                } else if (ctx.adjacent(i, j)) {
                    for (int a : fs[i]) {
                        for (int b : gs[j]) {
                            LaurentPoly factor = binomial(zv(i, a), zv(j, b), -2 * ctx.cartan(i, j));
                            term *= ctx.arrow(i, j) > 0 ? factor : -factor;
                        }
                    }
                }
            }
        }
        sum += term;
        int i = 0;
        while (i < n && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == n) break;
    }
    return {total, divide_by_vandermonde(std::move(sum), total)};
}

ShuffleElement word_product(const ShuffleContext& ctx, const Word& word) {
    const int n = ctx.rank();
    ColorDegree k = ColorDegree::Zero(n);
    for (const auto& l : word) {
        if (l.color < 0 || l.color >= n) throw MalformedWord("word_product: color out of range");
        ++k(l.color);
    }
    const int len = static_cast<int>(word.size());
    auto pos = [&word](int a) { return zv(word[a].color, kPositionBase + a); };
    // prod_a z_a^{d_a} prod_{a<b} (z_a - q^{-c} z_b), each adjacent pair signed by the arrow direction.
    Monomial lead;
    for (int a = 0; a < len; ++a) lead = lead * Monomial::var(pos(a), word[a].d);
    LaurentPoly base(lead);
    for (int a = 0; a < len; ++a) {
        for (int b = a + 1; b < len; ++b) {
            int i = word[a].color, j = word[b].color;
            if (i != j && !ctx.adjacent(i, j)) continue;
            LaurentPoly factor = binomial(pos(a), pos(b), -2 * ctx.cartan(i, j));
            base *= (i == j || ctx.arrow(i, j) > 0) ? factor : -factor;
        }
    }
    // Sum over color-preserving bijections positions -> slots, weighted by sign.
    std::vector<std::vector<int>> positions(n);
    for (int a = 0; a < len; ++a) positions[word[a].color].push_back(a);
    std::vector<std::vector<int>> perm(n);
    for (int i = 0; i < n; ++i) {
        perm[i].resize(k(i));
        std::iota(perm[i].begin(), perm[i].end(), 1);
    }
    std::vector<Term> acc;
    while (true) {
        std::map<VarId, VarId> names;
        int sign = 1;
        for (int i = 0; i < n; ++i) {
            for (int s = 0; s < k(i); ++s) names[pos(positions[i][s])] = zv(i, perm[i][s]);
            sign *= permutation_sign(perm[i]);
        }
        LaurentPoly moved = rename(base, names);
        for (const auto& t : moved.terms()) acc.push_back(Term{t.monomial, sign > 0 ? t.coeff : -t.coeff});
        int i = 0;
        while (i < n && !std::next_permutation(perm[i].begin(), perm[i].end())) ++i;
        if (i == n) break;
    }
    return {k, divide_by_vandermonde(LaurentPoly::from_terms(std::move(acc)), k)};
}

Word commutation_normal_form(const ShuffleContext& ctx, Word word) {
    Word out;
    out.reserve(word.size());
    while (!word.empty()) {
        std::size_t best = 0;
        bool have = false;
        for (std::size_t c = 0; c < word.size(); ++c) {
            bool movable = true;
            for (std::size_t p = 0; p < c && movable; ++p) {
                int i = word[p].color, j = word[c].color;
                if (i == j || ctx.adjacent(i, j)) movable = false;
            }
            if (movable && (!have || word[c] < word[best])) {
                best = c;
                have = true;
            }
        }
        out.push_back(word[best]);
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
}

bool wheel_check(const ShuffleContext& ctx, const ShuffleElement& f) {
    const int n = ctx.rank();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!ctx.adjacent(i, j) || f.degree(i) < 2 || f.degree(j) < 1) continue;
            Assignment at{{zv(i, 1), {1, Monomial::q_half(2) * Monomial::var(zv(j, 1))}},
                          {zv(i, 2), {1, Monomial::q_half(-2) * Monomial::var(zv(j, 1))}}};
            if (!f.numerator.substitute(at).is_zero()) return false;
        }
    }
    return true;
}

bool slope_leq(const ShuffleContext& ctx, const ShuffleElement& f, const Rational& mu) {
    if (f.is_zero()) return true;
    const int n = ctx.rank();
    RatFunc r = f.as_ratfunc(ctx);
    ColorDegree l = ColorDegree::Zero(n);
    while (true) {
        int i = 0;
        while (i < n && l(i) == f.degree(i)) l(i++) = 0;
        if (i == n) break;
        ++l(i);
        std::vector<VarId> subset;
        for (int c = 0; c < n; ++c) {
            for (int b = 1; b <= l(c); ++b) subset.push_back(zv(c, b));
        }
        if (Rational(scaled_degree(r, subset)) > mu * Rational(l.sum())) return false;
    }
    return true;
}

RatFunc pairing(const ShuffleContext& ctx, const ShuffleElement& f, const Word& word) {
    const int n = ctx.rank();
    if (f.degree.size() != n) throw MalformedWord("pairing: degree vector has the wrong length");
    ColorDegree k = ColorDegree::Zero(n);
    for (const auto& l : word) {
        if (l.color < 0 || l.color >= n) throw MalformedWord("pairing: color out of range");
        ++k(l.color);
    }
    if (k != f.degree || f.is_zero()) return RatFunc();
    int total_d = 0;
    for (const auto& l : word) total_d += l.d;
    auto hd = homogeneous_degree(ctx, f);
    if (hd && *hd != total_d) return RatFunc();

    const int len = static_cast<int>(word.size());
    std::vector<VarId> vars;
    std::vector<int> used(n, 0);
    for (const auto& l : word) vars.push_back(zv(l.color, ++used[l.color]));
    RatFunc integrand = f.as_ratfunc(ctx);
    Monomial weight;
    for (int a = 0; a < len; ++a) weight = weight * Monomial::var(vars[a], -word[a].d);
    integrand *= RatFunc(LaurentPoly(weight));
    for (int a = 0; a < len; ++a) {
        for (int b = a + 1; b < len; ++b) {
            int c = ctx.cartan(word[a].color, word[b].color);
            if (c == 0) continue;
            integrand *= RatFunc(binomial(vars[a], vars[b], 0));
            integrand.divide_by(make_binomial(vars[a], 0, vars[b], -2 * c));
        }
    }
    integrand = integrand.normalized();
    for (int a = 0; a < len; ++a) {
        std::vector<VarId> larger(vars.begin() + a + 1, vars.end());
        integrand = constant_term(integrand, vars[a], larger).normalized();
    }
    return integrand;
}

std::vector<std::pair<Word, ShuffleElement>> spanning_set_with_words(const ShuffleContext& ctx, const ColorDegree& k,
                                                                     int d, int window) {
    if (window < 0) throw std::invalid_argument("spanning_set: window must be nonnegative");
    std::vector<int> colors;
    for (int i = 0; i < k.size(); ++i) colors.insert(colors.end(), k(i), i);
    const int len = static_cast<int>(colors.size());
    std::vector<std::pair<Word, ShuffleElement>> out;
    std::set<Word> seen_words;
    std::unordered_set<LaurentPoly> seen;
    std::vector<int> exps(len, 0);
    do {
        auto rec = [&](auto&& self, int a, int rest) -> void {
            if (a == len) {
                if (rest != 0) return;
                Word w(len);
                for (int b = 0; b < len; ++b) w[b] = Letter{colors[b], exps[b]};
                if (!seen_words.insert(commutation_normal_form(ctx, w)).second) return;
                ShuffleElement e = word_product(ctx, w);
                if (e.is_zero() || !seen.insert(e.numerator).second) return;
                out.emplace_back(std::move(w), std::move(e));
                return;
            }
            int remaining = len - a - 1;
            for (int e = -window; e <= window; ++e) {
                int r = rest - e;
                if (r < -window * remaining || r > window * remaining) continue;
                exps[a] = e;
                self(self, a + 1, r);
            }
        };
        rec(rec, 0, d);
    } while (std::next_permutation(colors.begin(), colors.end()));
    return out;
}

std::vector<ShuffleElement> spanning_set(const ShuffleContext& ctx, const ColorDegree& k, int d, int window) {
    std::vector<ShuffleElement> out;
    for (auto& [w, e] : spanning_set_with_words(ctx, k, d, window)) out.push_back(std::move(e));
    return out;
}

}  // namespace qloop
