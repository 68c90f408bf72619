#include "qloop/specialization.hpp"

#include <stdexcept>

#include "qloop/errors.hpp"

namespace qloop {

namespace {

VarId spec_var(SpecVar v) { return v == SpecVar::X ? VarId::x() : VarId::y(); }

int edge_tau_sum(const ShuffleContext& ctx, const ColorDegree& v, const ColorDegree& w) {
    int s = 0;
    for (auto [i, j] : ctx.orientation().edges) s += ctx.tau()[i] * v(i) * w(j);
    return s;
}

// z_ib -> var q^{tau(i)}
ScalarMonomial image(const ShuffleContext& ctx, int color, VarId var) {
    return {Rational(1), Monomial::var(var) * Monomial::q_half(2 * ctx.tau()[color])};
}

Assignment split_assignment(const ShuffleContext& ctx, const ColorDegree& k, const Split& split) {
    Assignment a;
    for (int i = 0; i < k.size(); ++i) {
        if (static_cast<int>(split[i].size()) != k(i)) throw std::invalid_argument("split: wrong number of slots");
        for (int b = 0; b < k(i); ++b) a[VarId::z(i, b + 1)] = image(ctx, i, split[i][b] ? VarId::x() : VarId::y());
    }
    return a;
}

void check_split(const ColorDegree& v, const ColorDegree& w, const Split& split) {
    for (int i = 0; i < v.size(); ++i) {
        int to_x = 0;
        for (bool b : split[i]) to_x += b;
        if (to_x != v(i) || static_cast<int>(split[i].size()) != v(i) + w(i)) {
            throw std::invalid_argument("split: shape does not match (v, w)");
        }
    }
}

}  // namespace

RatFunc gamma(const ShuffleContext& ctx, const ColorDegree& v, SpecVar var) {
    const int vv = v.dot(v);
    RatFunc g(LaurentPoly(Monomial::q_half(-2 * edge_tau_sum(ctx, v, v) + vv) * Monomial::var(spec_var(var), -vv)));
    g.divide_by_qdiff(vv);
    return g;
}

RatFunc spec_map(const ShuffleContext& ctx, const ShuffleElement& r, SpecVar var) {
    Assignment a;
    for (int i = 0; i < r.degree.size(); ++i) {
        for (int b = 1; b <= r.degree(i); ++b) a[VarId::z(i, b)] = image(ctx, i, spec_var(var));
    }
    RatFunc value(r.numerator.substitute(a));
    return (gamma(ctx, r.degree, var) * value).normalized();
}

Split default_split(const ColorDegree& v, const ColorDegree& w) {
    Split s(v.size());
    for (int i = 0; i < v.size(); ++i) {
        s[i].assign(v(i) + w(i), false);
        for (int b = 0; b < v(i); ++b) s[i][b] = true;
    }
    return s;
}

TwoPointFn two_point(const ShuffleContext& ctx, const ShuffleElement& r, const ColorDegree& v, const ColorDegree& w,
                     const std::optional<Split>& split) {
    if (r.degree != v + w) throw std::invalid_argument("two_point: degree is not v + w");
    const Split s = split.value_or(default_split(v, w));
    check_split(v, w, s);
    const auto& o = ctx.orientation();
    const int vw = v.dot(w);
    const int e_vw = euler_form(o, v, w);
    const int e_wv = euler_form(o, w, v);
    RatFunc f(r.numerator.substitute(split_assignment(ctx, r.degree, s)));
    f *= gamma(ctx, v, SpecVar::X) * gamma(ctx, w, SpecVar::Y);
    f.divide_by(make_binomial(VarId::x(), VarId::y()), -e_vw);
    f.divide_by(make_binomial(VarId::y(), 4, VarId::x(), 0), vw - e_wv);
    f.divide_by(make_binomial(VarId::x(), VarId::y(), -4), vw);
    int qexp = edge_tau_sum(ctx, v, w);
    for (auto [i, j] : o.edges) qexp += ctx.tau()[j] * v(j) * w(i);
    f *= RatFunc(LaurentPoly::q_half(-2 * qexp));
    TwoPointFn t{f.normalized(), v, w, 0, 0, 0};
    t.order_diagonal = t.value.multiplicity(LinearBinomial{VarId::x(), VarId::y(), 0});
    t.order_plus = t.value.multiplicity(LinearBinomial{VarId::x(), VarId::y(), 4});
    t.order_minus = t.value.multiplicity(LinearBinomial{VarId::x(), VarId::y(), -4});
    return t;
}

RatFunc two_point_direct(const ShuffleContext& ctx, const ShuffleElement& r, const ColorDegree& v,
                         const ColorDegree& w, const std::optional<Split>& split) {
    if (r.degree != v + w) throw std::invalid_argument("two_point_direct: degree is not v + w");
    const Split s = split.value_or(default_split(v, w));
    check_split(v, w, s);
    const Assignment a = split_assignment(ctx, r.degree, s);
    // spec (x) spec keeps only the edge factors that straddle the two groups.
    RatFunc f(r.numerator);
    for (auto [i, j] : ctx.orientation().edges) {
        for (int b = 0; b < r.degree(i); ++b) {
            for (int c = 0; c < r.degree(j); ++c) {
                if (s[i][b] != s[j][c]) f.divide_by(make_binomial(VarId::z(i, b + 1), VarId::z(j, c + 1)));
            }
        }
    }
    f = f.substitute(a);
    f *= gamma(ctx, v, SpecVar::X) * gamma(ctx, w, SpecVar::Y);
    // Divide by zeta_ij(X/Y) = (X - Y q^{-c}) / (X - Y), X = x q^{tau(i)}, Y = y q^{tau(j)}.
    for (int i = 0; i < v.size(); ++i) {
        for (int j = 0; j < w.size(); ++j) {
            const int m = v(i) * w(j);
            const int c = ctx.cartan(i, j);
            if (m == 0 || c == 0) continue;
            const int ti = 2 * ctx.tau()[i], tj = 2 * ctx.tau()[j];
            f.divide_by(make_binomial(VarId::x(), ti, VarId::y(), tj - 2 * c), m);
            f.divide_by(make_binomial(VarId::x(), ti, VarId::y(), tj), -m);
        }
    }
    return f.normalized();
}

PoleOrders pole_order_check(const ShuffleContext& ctx, const TwoPointFn& t, const ARQuiver* ar) {
    const auto& o = ctx.orientation();
    int bound_plus = std::max(0, -euler_form(o, t.w, t.v));
    int bound_minus = std::max(0, euler_form(o, t.v, t.w));
    if (ar) {
        auto vi = ar->roots().index_of(t.v), wi = ar->roots().index_of(t.w);
        if (vi && wi && ar->less(*vi, *wi)) bound_plus = bound_minus = 0;
    }
    if (t.order_plus > bound_plus || t.order_minus > bound_minus) {
        throw BoundViolated("pole orders (" + std::to_string(t.order_plus) + ", " + std::to_string(t.order_minus) +
                            ") exceed bounds (" + std::to_string(bound_plus) + ", " + std::to_string(bound_minus) + ")");
    }
    return {t.order_plus, t.order_minus};
}

RatFunc zeta_ratio(const ShuffleContext& ctx, const ColorDegree& a, const ColorDegree& b) {
    RatFunc f(1);
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < b.size(); ++j) {
            const int m = a(i) * b(j);
            if (m == 0) continue;
            const int ti = 2 * ctx.tau()[i], tj = 2 * ctx.tau()[j];
            // zeta_ji(Y/X) = (Y - X q^{-c}) / (Y - X)
            const int cji = ctx.cartan(j, i);
            if (cji != 0) {
                f.divide_by(make_binomial(VarId::y(), tj, VarId::x(), ti - 2 * cji), -m);
                f.divide_by(make_binomial(VarId::y(), tj, VarId::x(), ti), m);
            }
            // 1 / zeta_ij(X/Y)
            const int cij = ctx.cartan(i, j);
            if (cij != 0) {
                f.divide_by(make_binomial(VarId::x(), ti, VarId::y(), tj - 2 * cij), m);
                f.divide_by(make_binomial(VarId::x(), ti, VarId::y(), tj), -m);
            }
        }
    }
    return f.normalized();
}

RatFunc expected_zeta_ratio() {
    RatFunc f(LaurentPoly(Monomial::q_half(2) * Monomial::var(VarId::x())) -
              LaurentPoly(Monomial::q_half(-2) * Monomial::var(VarId::y())));
    f.divide_by(make_binomial(VarId::x(), VarId::y()));
    return f;
}

FusionReport fusion_residue_check(const ShuffleContext& ctx, const ColorDegree& alpha, const ColorDegree& beta,
                                  const ShuffleElement& r) {
    FusionReport rep;
    TwoPointFn t = two_point(ctx, r, alpha, beta);
    rep.order_diagonal = t.order_diagonal;
    rep.order_plus = t.order_plus;
    rep.order_minus = t.order_minus;
    rep.no_shifted_poles = t.order_plus == 0 && t.order_minus == 0;
    rep.simple_diagonal = t.order_diagonal <= 1;
    rep.spec = spec_map(ctx, r, SpecVar::X);
    if (t.order_diagonal == 1) {
        rep.residue = residue_on_diagonal(t.value);
        rep.residue_matches = rep.residue == rep.spec;
    } else if (t.order_diagonal == 0) {
        rep.residue = RatFunc();
        rep.residue_matches = rep.spec.is_zero();
    }
    rep.zeta_ok = zeta_ratio(ctx, alpha, beta) == expected_zeta_ratio();
    return rep;
}

}  // namespace qloop
