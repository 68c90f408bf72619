#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "qloop/rational.hpp"

namespace qloop {

/// Variable of the polynomial ring. The order Q < X < Y < Z(color, slot) is
/// fixed; Z variables compare by color, then slot. Q stands for q^{1/2}.
class VarId {
public:
    enum class Kind : std::uint8_t { Q = 0, X = 1, Y = 2, Z = 3 };

    constexpr VarId() : key_(0) {}
    static constexpr VarId q() { return VarId(0); }
    static constexpr VarId x() { return VarId(1u << 28); }
    static constexpr VarId y() { return VarId(2u << 28); }
    /// Color is a 0-based vertex index, slot is >= 1.
    static VarId z(int color, int slot);
    /// Accepts "q", "x", "y" and "z<color>_<slot>" with 1-based color.
    static VarId parse(std::string_view name);

    Kind kind() const { return static_cast<Kind>(key_ >> 28); }
    int color() const { return static_cast<int>((key_ >> 14) & 0x3fff); }
    int slot() const { return static_cast<int>(key_ & 0x3fff); }
    std::uint32_t key() const { return key_; }
    std::string name() const;

    friend constexpr auto operator<=>(VarId, VarId) = default;

private:
    constexpr explicit VarId(std::uint32_t key) : key_(key) {}
    std::uint32_t key_;
};

/// Sparse monomial; exponents of Q count half powers of q.
class Monomial {
public:
    using Entry = std::pair<VarId, int>;
    using Storage = boost::container::small_vector<Entry, 6>;

    Monomial() = default;
    static Monomial var(VarId v, int exponent = 1);
    /// q^{halves/2}
    static Monomial q_half(int halves) { return var(VarId::q(), halves); }
    static Monomial from_entries(std::vector<Entry> entries);

    int exponent(VarId v) const;
    const Storage& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }
    /// Sum of exponents over X, Y and Z variables.
    int grade() const { return grade_; }
    bool involves(VarId v) const { return exponent(v) != 0; }
    /// True when only Q appears.
    bool is_scalar() const { return entries_.empty() || (entries_.size() == 1 && entries_[0].first == VarId::q()); }

    Monomial without(VarId v) const;
    Monomial inverse() const;
    Monomial pow(int e) const;
    std::size_t hash() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    void recompute_grade();
    Storage entries_;
    int grade_ = 0;
};

/// Canonical term order: graded lexicographic over X < Y < Z (higher grade and
/// larger leading exponents first), ties broken by the power of q, highest first.
bool canonical_before(const Monomial& a, const Monomial& b);

struct Term {
    Monomial monomial;
    Rational coeff;
};

/// coeff * monomial; the value assigned to a variable by substitute().
struct ScalarMonomial {
    Rational coeff{1};
    Monomial monomial;
};

using Assignment = std::map<VarId, ScalarMonomial>;

/// Sparse Laurent polynomial over the rationals, terms kept in canonical order.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    LaurentPoly(const Monomial& m, const Rational& c = Rational(1));
    static LaurentPoly var(VarId v, int exponent = 1) { return LaurentPoly(Monomial::var(v, exponent)); }
    /// q^{halves/2}
    static LaurentPoly q_half(int halves) { return LaurentPoly(Monomial::q_half(halves)); }
    /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Constant in every variable except possibly Q.
    bool is_scalar() const;

    /// Minimum and maximum exponent of v over all terms; {0,0} for zero.
    std::pair<int, int> degree_range(VarId v) const;
    /// Coefficients of v^e, as polynomials free of v.
    std::map<int, LaurentPoly> collect(VarId v) const;
    /// Maximum over terms of the summed exponents of `subset`.
    int max_subset_degree(const std::vector<VarId>& subset) const;
    std::vector<VarId> variables() const;

    LaurentPoly substitute(const Assignment& assignment) const;
    LaurentPoly pow(int e) const;
    LaurentPoly operator-() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    LaurentPoly& operator*=(const Monomial& m);

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(LaurentPoly a, const Monomial& m) { return a *= m; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::size_t hash() const;

private:
    std::vector<Term> terms_;
};

/// left - q^{shift/2} * right, with left < right.
struct LinearBinomial {
    VarId left;
    VarId right;
    int shift = 0;  // half units

    LaurentPoly expand() const;
    friend auto operator<=>(const LinearBinomial&, const LinearBinomial&) = default;
};

/// A binomial together with the unit it was normalized by:
/// original = sign * q^{q_half/2} * binomial.
struct NormalizedBinomial {
    LinearBinomial binomial;
    int sign = 1;
    int q_half = 0;

    LaurentPoly unit() const { return LaurentPoly(Monomial::q_half(q_half), Rational(sign)); }
};

/// Normalizes q^{a/2} u - q^{b/2} w (u != w) so that the leading variable is
/// the smaller one.
NormalizedBinomial make_binomial(VarId u, int a_half, VarId w, int b_half);

/// u - q^{shift/2} w
inline NormalizedBinomial make_binomial(VarId u, VarId w, int shift_half = 0) { return make_binomial(u, 0, w, shift_half); }

/// Exact quotient p / b, or nullopt when b does not divide p.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LinearBinomial& b);

/// Exact quotient p / (q - q^{-1}), or nullopt.
std::optional<LaurentPoly> divide_by_qdiff(const LaurentPoly& p);

/// Numerator over a product of linear binomials and powers of (q - q^{-1}).
class RatFunc {
public:
    using Denominator = std::vector<std::pair<LinearBinomial, int>>;

    RatFunc() = default;
    RatFunc(LaurentPoly numerator) : num_(std::move(numerator)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(int c) : num_(c) {}                                      // NOLINT(google-explicit-constructor)
    RatFunc(LaurentPoly numerator, Denominator den, int qdiff = 0);

    const LaurentPoly& numerator() const { return num_; }
    const Denominator& denominator() const { return den_; }
    int qdiff_power() const { return qdiff_; }
    bool is_zero() const { return num_.is_zero(); }
    int multiplicity(const LinearBinomial& b) const;

    /// Divides by b^mult (mult may be negative, which multiplies).
    RatFunc& divide_by(const NormalizedBinomial& b, int mult = 1);
    RatFunc& divide_by_qdiff(int power = 1);

    /// Cancels every denominator factor that divides the numerator.
    RatFunc normalized() const;
    RatFunc substitute(const Assignment& assignment) const;
    /// Denominator expanded into a polynomial.
    LaurentPoly expanded_denominator() const;

    RatFunc operator-() const;
    RatFunc& operator*=(const RatFunc& o);
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    /// Decided by cross-multiplication.
    friend bool operator==(const RatFunc& a, const RatFunc& b);
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    void add_factor(const LinearBinomial& b, int mult);

    LaurentPoly num_;
    Denominator den_;
    int qdiff_ = 0;
};

RatFunc normalize(const RatFunc& f);

enum class PolyOp { Add, Sub, Mul };
LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, PolyOp op);

LaurentPoly substitute(const LaurentPoly& p, const Assignment& assignment);

/// Constant term in v of the expansion of f where |v| is smaller than every
/// variable in `larger`. Throws ContourError if a denominator couples v to a
/// variable outside `larger`.
RatFunc constant_term(const RatFunc& f, VarId v, const std::vector<VarId>& larger);

/// lim_{y->x} (x - y) f. Throws PoleOrderError unless x = y is a simple pole.
RatFunc residue_on_diagonal(const RatFunc& f);

inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

/// Growth exponent of f under z -> xi z for z in `subset`, xi -> infinity.
/// Returns kMinusInfinity for f == 0.
int scaled_degree(const RatFunc& f, const std::vector<VarId>& subset);

/// Pole order of f along b after normalization.
int pole_order(const RatFunc& f, const LinearBinomial& b);

}  // namespace qloop

template <>
struct std::hash<qloop::Monomial> {
    std::size_t operator()(const qloop::Monomial& m) const { return m.hash(); }
};
template <>
struct std::hash<qloop::LaurentPoly> {
    std::size_t operator()(const qloop::LaurentPoly& p) const { return p.hash(); }
};
