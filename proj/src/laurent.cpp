#include "qloop/laurent.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <unordered_map>

#include "qloop/errors.hpp"

namespace qloop {

// ---------------------------------------------------------------- VarId

VarId VarId::z(int color, int slot) {
    if (color < 0 || color >= (1 << 14)) throw std::invalid_argument("VarId::z: color out of range");
    if (slot < 1 || slot >= (1 << 14)) throw std::invalid_argument("VarId::z: slot must be >= 1");
    return VarId((3u << 28) | (static_cast<std::uint32_t>(color) << 14) | static_cast<std::uint32_t>(slot));
}

VarId VarId::parse(std::string_view name) {
    if (name == "q") return q();
    if (name == "x") return x();
    if (name == "y") return y();
    if (name.size() >= 4 && name[0] == 'z') {
        auto us = name.find('_');
        if (us != std::string_view::npos) {
            int color = 0, slot = 0;
            auto r1 = std::from_chars(name.data() + 1, name.data() + us, color);
            auto r2 = std::from_chars(name.data() + us + 1, name.data() + name.size(), slot);
            if (r1.ec == std::errc() && r1.ptr == name.data() + us && r2.ec == std::errc() &&
                r2.ptr == name.data() + name.size() && color >= 1) {
                return z(color - 1, slot);
            }
        }
    }
    throw std::invalid_argument("VarId: cannot parse '" + std::string(name) + "'");
}

std::string VarId::name() const {
    switch (kind()) {
        case Kind::Q: return "q";
        case Kind::X: return "x";
        case Kind::Y: return "y";
        case Kind::Z: return "z" + std::to_string(color() + 1) + "_" + std::to_string(slot());
    }
    return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(VarId v, int exponent) {
    Monomial m;
    if (exponent != 0) m.entries_.emplace_back(v, exponent);
    m.recompute_grade();
    return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [v, e] : entries) {
        if (!m.entries_.empty() && m.entries_.back().first == v) {
            m.entries_.back().second += e;
        } else {
            m.entries_.emplace_back(v, e);
        }
    }
    m.entries_.erase(std::remove_if(m.entries_.begin(), m.entries_.end(), [](const Entry& e) { return e.second == 0; }),
                     m.entries_.end());
    m.recompute_grade();
    return m;
}

void Monomial::recompute_grade() {
    grade_ = 0;
    for (const auto& [v, e] : entries_) {
        if (v != VarId::q()) grade_ += e;
    }
}

int Monomial::exponent(VarId v) const {
    for (const auto& [w, e] : entries_) {
        if (w == v) return e;
        if (v < w) break;
    }
    return 0;
}

Monomial Monomial::without(VarId v) const {
    Monomial m = *this;
    m.entries_.erase(std::remove_if(m.entries_.begin(), m.entries_.end(), [v](const Entry& e) { return e.first == v; }),
                     m.entries_.end());
    m.recompute_grade();
    return m;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int e) const {
    Monomial m;
    if (e == 0) return m;
    m.entries_ = entries_;
    for (auto& entry : m.entries_) entry.second *= e;
    m.grade_ = grade_ * e;
    return m;
}

std::size_t Monomial::hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& [v, e] : entries_) {
        h ^= (static_cast<std::size_t>(v.key()) << 20) ^ static_cast<std::size_t>(static_cast<std::uint32_t>(e));
        h *= 0x100000001b3ULL;
    }
    return h;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.entries_.empty()) return b;
    if (b.entries_.empty()) return a;
    Monomial m;
    auto ia = a.entries_.begin(), ib = b.entries_.begin();
    while (ia != a.entries_.end() && ib != b.entries_.end()) {
        if (ia->first < ib->first) {
            m.entries_.push_back(*ia++);
        } else if (ib->first < ia->first) {
            m.entries_.push_back(*ib++);
        } else {
            int e = ia->second + ib->second;
            if (e != 0) m.entries_.emplace_back(ia->first, e);
            ++ia;
            ++ib;
        }
    }
    m.entries_.insert(m.entries_.end(), ia, a.entries_.end());
    m.entries_.insert(m.entries_.end(), ib, b.entries_.end());
    m.grade_ = a.grade_ + b.grade_;
    return m;
}

bool canonical_before(const Monomial& a, const Monomial& b) {
    if (a.grade() != b.grade()) return a.grade() > b.grade();
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    auto ia = ea.begin(), ib = eb.begin();
    int qa = 0, qb = 0;
    if (ia != ea.end() && ia->first == VarId::q()) qa = (ia++)->second;
    if (ib != eb.end() && ib->first == VarId::q()) qb = (ib++)->second;
    while (ia != ea.end() || ib != eb.end()) {
        if (ib == eb.end() || (ia != ea.end() && ia->first < ib->first)) return ia->second > 0;
        if (ia == ea.end() || ib->first < ia->first) return ib->second < 0;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return qa > qb;
}

// ---------------------------------------------------------------- LaurentPoly

namespace {

struct TermOrder {
    bool operator()(const Term& a, const Term& b) const { return canonical_before(a.monomial, b.monomial); }
};

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (canonical_before(ia->monomial, ib->monomial)) {
            out.push_back(*ia++);
        } else if (canonical_before(ib->monomial, ia->monomial)) {
            out.push_back(subtract ? Term{ib->monomial, -ib->coeff} : *ib);
            ++ib;
        } else {
            Rational c = subtract ? ia->coeff - ib->coeff : ia->coeff + ib->coeff;
            if (!c.is_zero()) out.push_back(Term{ia->monomial, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    for (; ia != a.end(); ++ia) out.push_back(*ia);
    for (; ib != b.end(); ++ib) out.push_back(subtract ? Term{ib->monomial, -ib->coeff} : *ib);
    return out;
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& c) {
    if (!c.is_zero()) terms_.push_back(Term{Monomial(), c});
}

LaurentPoly::LaurentPoly(const Monomial& m, const Rational& c) {
    if (!c.is_zero()) terms_.push_back(Term{m, c});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    if (terms.size() > 64) {
        std::unordered_map<Monomial, Rational> acc;
        acc.reserve(terms.size());
        for (auto& t : terms) {
            auto [it, inserted] = acc.try_emplace(std::move(t.monomial), t.coeff);
            if (!inserted) it->second += t.coeff;
        }
        terms.clear();
        for (auto& [m, c] : acc) {
            if (!c.is_zero()) terms.push_back(Term{m, c});
        }
        std::sort(terms.begin(), terms.end(), TermOrder{});
        LaurentPoly p;
        p.terms_ = std::move(terms);
        return p;
    }
    std::sort(terms.begin(), terms.end(), TermOrder{});
    LaurentPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool LaurentPoly::is_scalar() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.monomial.is_scalar(); });
}

std::pair<int, int> LaurentPoly::degree_range(VarId v) const {
    if (terms_.empty()) return {0, 0};
    int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
    for (const auto& t : terms_) {
        int e = t.monomial.exponent(v);
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    return {lo, hi};
}

std::map<int, LaurentPoly> LaurentPoly::collect(VarId v) const {
    std::map<int, std::vector<Term>> buckets;
    for (const auto& t : terms_) {
        int e = t.monomial.exponent(v);
        buckets[e].push_back(Term{e == 0 ? t.monomial : t.monomial.without(v), t.coeff});
    }
    std::map<int, LaurentPoly> out;
    for (auto& [e, ts] : buckets) {
        // Removing a variable preserves relative order except across grades;
        // from_terms re-sorts.
        out.emplace(e, LaurentPoly::from_terms(std::move(ts)));
    }
    return out;
}

int LaurentPoly::max_subset_degree(const std::vector<VarId>& subset) const {
    int best = std::numeric_limits<int>::min();
    for (const auto& t : terms_) {
        int d = 0;
        for (VarId v : subset) d += t.monomial.exponent(v);
        best = std::max(best, d);
    }
    return best;
}

std::vector<VarId> LaurentPoly::variables() const {
    std::vector<VarId> vars;
    for (const auto& t : terms_) {
        for (const auto& [v, e] : t.monomial.entries()) vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

LaurentPoly LaurentPoly::substitute(const Assignment& assignment) const {
    if (assignment.empty()) return *this;
    for (const auto& [v, target] : assignment) {
        for (const auto& [w, e] : target.monomial.entries()) {
            if (assignment.count(w) != 0) {
                throw SubstitutionError("substitute: cyclic assignment through " + w.name());
            }
        }
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial kept;
        Rational c = t.coeff;
        std::vector<Monomial::Entry> entries;
        Monomial factor;
        for (const auto& [v, e] : t.monomial.entries()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                entries.emplace_back(v, e);
                continue;
            }
            const ScalarMonomial& target = it->second;
            if (target.coeff.is_zero()) {
                if (e < 0) throw SubstitutionError("substitute: negative power of a variable set to zero");
                c = Rational(0);
                break;
            }
            if (!target.coeff.is_one()) c *= qloop::pow(target.coeff, e);
            factor = factor * target.monomial.pow(e);
        }
        if (c.is_zero()) continue;
        out.push_back(Term{Monomial::from_entries(std::move(entries)) * factor, c});
    }
    return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) {
        if (terms_.size() != 1) throw std::domain_error("LaurentPoly::pow: negative power of a non-monomial");
        return LaurentPoly(terms_[0].monomial.pow(e), qloop::pow(terms_[0].coeff, e));
    }
    LaurentPoly result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Monomial& m) {
    // Multiplying by a monomial shifts grades uniformly but can reorder
    // lexicographic ties, so re-sort.
    for (auto& t : terms_) t.monomial = t.monomial * m;
    std::sort(terms_.begin(), terms_.end(), TermOrder{});
    return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    p.terms_ = merge_terms(a.terms_, b.terms_, false);
    return p;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    p.terms_ = merge_terms(a.terms_, b.terms_, true);
    return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    if (a.size() == 1 && a.terms_[0].monomial.is_one()) return b * a.terms_[0].coeff;
    if (b.size() == 1 && b.terms_[0].monomial.is_one()) return a * b.terms_[0].coeff;
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) out.push_back(Term{s.monomial * t.monomial, s.coeff * t.coeff});
    }
    return LaurentPoly::from_terms(std::move(out));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

std::size_t LaurentPoly::hash() const {
    std::size_t h = terms_.size();
    for (const auto& t : terms_) {
        h ^= t.monomial.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= t.coeff.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return a + b;
        case PolyOp::Sub: return a - b;
        case PolyOp::Mul: return a * b;
    }
    return {};
}

LaurentPoly substitute(const LaurentPoly& p, const Assignment& assignment) { return p.substitute(assignment); }

// ---------------------------------------------------------------- binomials

LaurentPoly LinearBinomial::expand() const {
    return LaurentPoly::var(left) - LaurentPoly(Monomial::q_half(shift) * Monomial::var(right));
}

NormalizedBinomial make_binomial(VarId u, int a_half, VarId w, int b_half) {
    if (u == w) throw std::invalid_argument("make_binomial: identical variables");
    int m = b_half - a_half;
    if (u < w) return NormalizedBinomial{LinearBinomial{u, w, m}, 1, a_half};
    // q^{a} (u - q^{m} w) = -q^{a+m} (w - q^{-m} u)
    return NormalizedBinomial{LinearBinomial{w, u, -m}, -1, b_half};
}

namespace {

// Divides p by (u^step - c), where c is a monomial free of u.
std::optional<LaurentPoly> divide_by_two_term(const LaurentPoly& p, VarId u, int step, const Monomial& c) {
    if (p.is_zero()) return LaurentPoly();
    std::map<int, LaurentPoly> by_exp = p.collect(u);
    std::map<int, std::map<int, const LaurentPoly*>> classes;
    for (const auto& [e, coeff] : by_exp) {
        int r = ((e % step) + step) % step;
        classes[r][(e - r) / step] = &coeff;
    }
    std::vector<Term> quotient;
    for (const auto& [r, rows] : classes) {
        int lo = rows.begin()->first;
        int hi = rows.rbegin()->first;
        if (lo == hi) return std::nullopt;
        LaurentPoly carry;  // Q_{t} while descending
        auto lookup = [&rows](int t) -> LaurentPoly {
            auto it = rows.find(t);
            return it == rows.end() ? LaurentPoly() : *it->second;
        };
        carry = lookup(hi);  // Q_{hi-1}
        for (int t = hi - 1; t >= lo; --t) {
            // carry holds Q_t for the exponent r + step * t
            for (const auto& term : carry.terms()) {
                quotient.push_back(Term{term.monomial * Monomial::var(u, r + step * t), term.coeff});
            }
            LaurentPoly next = lookup(t) + carry * c;
            if (t == lo) {
                if (!next.is_zero()) return std::nullopt;
            } else {
                carry = std::move(next);
            }
        }
    }
    return LaurentPoly::from_terms(std::move(quotient));
}

}  // namespace

std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LinearBinomial& b) {
    if (b.left == b.right) throw std::invalid_argument("exact_divide: degenerate binomial");
    return divide_by_two_term(p, b.left, 1, Monomial::q_half(b.shift) * Monomial::var(b.right));
}

std::optional<LaurentPoly> divide_by_qdiff(const LaurentPoly& p) {
    // q - q^{-1} = q^{-1} (q^2 - 1), in half units Q^{-2} (Q^4 - 1)
    auto quotient = divide_by_two_term(p, VarId::q(), 4, Monomial());
    if (!quotient) return std::nullopt;
    return *quotient * Monomial::q_half(2);
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(LaurentPoly numerator, Denominator den, int qdiff) : num_(std::move(numerator)) {
    for (const auto& [b, m] : den) add_factor(b, m);
    divide_by_qdiff(qdiff);
}

int RatFunc::multiplicity(const LinearBinomial& b) const {
    for (const auto& [c, m] : den_) {
        if (c == b) return m;
    }
    return 0;
}

void RatFunc::add_factor(const LinearBinomial& b, int mult) {
    if (mult == 0) return;
    auto it = std::lower_bound(den_.begin(), den_.end(), b,
                               [](const std::pair<LinearBinomial, int>& e, const LinearBinomial& k) { return e.first < k; });
    if (it != den_.end() && it->first == b) {
        it->second += mult;
        if (it->second < 0) {
            num_ *= b.expand().pow(-it->second);
            it->second = 0;
        }
        if (it->second == 0) den_.erase(it);
        return;
    }
    if (mult > 0) {
        den_.insert(it, {b, mult});
    } else {
        num_ *= b.expand().pow(-mult);
    }
}

RatFunc& RatFunc::divide_by(const NormalizedBinomial& b, int mult) {
    if (mult == 0) return *this;
    num_ *= b.unit().pow(-mult);
    add_factor(b.binomial, mult);
    return *this;
}

RatFunc& RatFunc::divide_by_qdiff(int power) {
    qdiff_ += power;
    if (qdiff_ < 0) {
        LaurentPoly qd = LaurentPoly::q_half(2) - LaurentPoly::q_half(-2);
        num_ *= qd.pow(-qdiff_);
        qdiff_ = 0;
    }
    return *this;
}

RatFunc RatFunc::normalized() const {
    RatFunc f = *this;
    if (f.num_.is_zero()) {
        f.den_.clear();
        f.qdiff_ = 0;
        return f;
    }
    for (auto& [b, m] : f.den_) {
        while (m > 0) {
            auto quotient = exact_divide(f.num_, b);
            if (!quotient) break;
            f.num_ = std::move(*quotient);
            --m;
        }
    }
    f.den_.erase(std::remove_if(f.den_.begin(), f.den_.end(), [](const auto& e) { return e.second == 0; }), f.den_.end());
    while (f.qdiff_ > 0) {
        auto quotient = qloop::divide_by_qdiff(f.num_);
        if (!quotient) break;
        f.num_ = std::move(*quotient);
        --f.qdiff_;
    }
    return f;
}

RatFunc normalize(const RatFunc& f) { return f.normalized(); }

namespace {

ScalarMonomial image_of(VarId v, const Assignment& assignment) {
    auto it = assignment.find(v);
    if (it == assignment.end()) return ScalarMonomial{Rational(1), Monomial::var(v)};
    return it->second;
}

// Splits a monomial into its Q exponent and the single non-Q variable it
// contains with exponent one; nullopt if it has another shape.
std::optional<std::pair<int, VarId>> split_linear(const Monomial& m) {
    int qh = m.exponent(VarId::q());
    std::optional<VarId> var;
    for (const auto& [v, e] : m.entries()) {
        if (v == VarId::q()) continue;
        if (e != 1 || var) return std::nullopt;
        var = v;
    }
    if (!var) return std::nullopt;
    return std::make_pair(qh, *var);
}

}  // namespace

RatFunc RatFunc::substitute(const Assignment& assignment) const {
    RatFunc out(num_.substitute(assignment));
    out.qdiff_ = qdiff_;
    for (const auto& [b, mult] : den_) {
        ScalarMonomial l = image_of(b.left, assignment);
        ScalarMonomial r = image_of(b.right, assignment);
        if (l.coeff != r.coeff || l.coeff.is_zero()) {
            throw SubstitutionError("RatFunc::substitute: binomial image is not a linear binomial");
        }
        auto ls = split_linear(l.monomial);
        auto rs = split_linear(r.monomial);
        if (!ls || !rs) throw SubstitutionError("RatFunc::substitute: binomial image is not linear");
        // c * (q^{a} u - q^{shift + b} w)
        int a = ls->first;
        int bq = rs->first + b.shift;
        LaurentPoly scale = LaurentPoly(l.coeff).pow(mult);
        if (ls->second != rs->second) {
            out.num_ *= LaurentPoly(l.coeff).pow(-mult);
            out.divide_by(make_binomial(ls->second, a, rs->second, bq), mult);
            continue;
        }
        // Same variable: c u q^{a} (1 - q^{bq - a})
        VarId u = ls->second;
        int d = bq - a;
        int qh;
        int sign;
        if (d == 4) {  // 1 - q^2 = -q (q - q^{-1})
            qh = 2;
            sign = -1;
        } else if (d == -4) {  // 1 - q^{-2} = q^{-1} (q - q^{-1})
            qh = -2;
            sign = 1;
        } else if (d == 0) {
            throw SubstitutionError("RatFunc::substitute: denominator vanishes");
        } else {
            throw SubstitutionError("RatFunc::substitute: scalar factor other than q - q^{-1} in denominator");
        }
        LaurentPoly unit(Monomial::var(u) * Monomial::q_half(a + qh), l.coeff * Rational(sign));
        out.num_ *= unit.pow(-mult);
        out.divide_by_qdiff(mult);
    }
    return out;
}

LaurentPoly RatFunc::expanded_denominator() const {
    LaurentPoly d(1);
    for (const auto& [b, m] : den_) d *= b.expand().pow(m);
    if (qdiff_ > 0) d *= (LaurentPoly::q_half(2) - LaurentPoly::q_half(-2)).pow(qdiff_);
    return d;
}

RatFunc RatFunc::operator-() const {
    RatFunc f = *this;
    f.num_ = -f.num_;
    return f;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ *= o.num_;
    for (const auto& [b, m] : o.den_) add_factor(b, m);
    qdiff_ += o.qdiff_;
    return *this;
}

namespace {

// Factors needed to bring `have` up to the common denominator `common`.
LaurentPoly completion(const RatFunc::Denominator& have, int have_qdiff, const RatFunc::Denominator& common,
                       int common_qdiff) {
    LaurentPoly f(1);
    for (const auto& [b, m] : common) {
        int h = 0;
        for (const auto& [c, n] : have) {
            if (c == b) h = n;
        }
        if (m > h) f *= b.expand().pow(m - h);
    }
    if (common_qdiff > have_qdiff) f *= (LaurentPoly::q_half(2) - LaurentPoly::q_half(-2)).pow(common_qdiff - have_qdiff);
    return f;
}

RatFunc::Denominator lcm(const RatFunc::Denominator& a, const RatFunc::Denominator& b) {
    std::map<LinearBinomial, int> m;
    for (const auto& [c, n] : a) m[c] = std::max(m[c], n);
    for (const auto& [c, n] : b) m[c] = std::max(m[c], n);
    return RatFunc::Denominator(m.begin(), m.end());
}

}  // namespace

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RatFunc::Denominator common = lcm(a.den_, b.den_);
    int qd = std::max(a.qdiff_, b.qdiff_);
    LaurentPoly num = a.num_ * completion(a.den_, a.qdiff_, common, qd) + b.num_ * completion(b.den_, b.qdiff_, common, qd);
    RatFunc f(std::move(num));
    f.den_ = std::move(common);
    f.qdiff_ = qd;
    if (f.num_.is_zero()) {
        f.den_.clear();
        f.qdiff_ = 0;
    }
    return f;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_ && a.qdiff_ == b.qdiff_) return a.num_ == b.num_;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    RatFunc::Denominator common = lcm(a.den_, b.den_);
    int qd = std::max(a.qdiff_, b.qdiff_);
    return a.num_ * completion(a.den_, a.qdiff_, common, qd) == b.num_ * completion(b.den_, b.qdiff_, common, qd);
}

// ---------------------------------------------------------------- analysis

RatFunc constant_term(const RatFunc& f, VarId v, const std::vector<VarId>& larger) {
    if (f.is_zero()) return RatFunc();
    struct Series {
        LaurentPoly lead;   // coefficient of v^0
        LaurentPoly ratio;  // each further power of v multiplies by ratio
    };
    std::vector<Series> factors;
    RatFunc::Denominator rest;
    for (const auto& [b, m] : f.denominator()) {
        bool left = b.left == v;
        bool right = b.right == v;
        if (!left && !right) {
            rest.emplace_back(b, m);
            continue;
        }
        VarId w = left ? b.right : b.left;
        if (std::find(larger.begin(), larger.end(), w) == larger.end()) {
            throw ContourError("constant_term: " + v.name() + " is coupled to " + w.name() +
                               ", which is not in the expansion region");
        }
        Series s;
        if (left) {
            // 1/(v - q^m w) = -q^{-m} w^{-1} sum (q^{-m} v / w)^n
            s.lead = LaurentPoly(Monomial::q_half(-b.shift) * Monomial::var(w, -1), Rational(-1));
            s.ratio = LaurentPoly(Monomial::q_half(-b.shift) * Monomial::var(w, -1));
        } else {
            // 1/(w - q^m v) = w^{-1} sum (q^m v / w)^n
            s.lead = LaurentPoly(Monomial::var(w, -1));
            s.ratio = LaurentPoly(Monomial::q_half(b.shift) * Monomial::var(w, -1));
        }
        for (int i = 0; i < m; ++i) factors.push_back(s);
    }
    std::map<int, LaurentPoly> by_power = f.numerator().collect(v);
    int lo = by_power.begin()->first;
    if (lo > 0) return RatFunc();
    int order = -lo;
    std::vector<LaurentPoly> series(order + 1);
    series[0] = LaurentPoly(1);
    for (const auto& s : factors) {
        // T[n] = lead * S[n] + ratio * T[n-1]
        std::vector<LaurentPoly> next(order + 1);
        for (int n = 0; n <= order; ++n) {
            next[n] = s.lead * series[n];
            if (n > 0) next[n] += s.ratio * next[n - 1];
        }
        series = std::move(next);
    }
    LaurentPoly num;
    for (const auto& [e, coeff] : by_power) {
        if (e > 0) break;
        num += coeff * series[-e];
    }
    return RatFunc(std::move(num), rest, f.qdiff_power());
}

RatFunc residue_on_diagonal(const RatFunc& f) {
    RatFunc g = f.normalized();
    const LinearBinomial diag{VarId::x(), VarId::y(), 0};
    int order = g.multiplicity(diag);
    if (order != 1) {
        throw PoleOrderError("residue_on_diagonal: pole at x = y has order " + std::to_string(order) + ", expected 1");
    }
    RatFunc::Denominator rest;
    for (const auto& e : g.denominator()) {
        if (!(e.first == diag)) rest.push_back(e);
    }
    RatFunc h(g.numerator(), rest, g.qdiff_power());
    Assignment at_diag{{VarId::y(), ScalarMonomial{Rational(1), Monomial::var(VarId::x())}}};
    return h.substitute(at_diag).normalized();
}

int scaled_degree(const RatFunc& f, const std::vector<VarId>& subset) {
    if (f.is_zero()) return kMinusInfinity;
    int d = f.numerator().max_subset_degree(subset);
    for (const auto& [b, m] : f.denominator()) {
        bool touches = std::find(subset.begin(), subset.end(), b.left) != subset.end() ||
                       std::find(subset.begin(), subset.end(), b.right) != subset.end();
        if (touches) d -= m;
    }
    return d;
}

int pole_order(const RatFunc& f, const LinearBinomial& b) { return f.normalized().multiplicity(b); }

}  // namespace qloop
