#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qloop/laurent.hpp"
#include "qloop/quiver.hpp"
#include "qloop/rational.hpp"

namespace qloop {

using ColorDegree = Eigen::VectorXi;

/// Quiver data the shuffle algebra depends on.
class ShuffleContext {
public:
    explicit ShuffleContext(QuiverOrientation orientation);

    const QuiverOrientation& orientation() const { return orientation_; }
    int rank() const { return orientation_.rank(); }
    /// (alpha_i, alpha_j)
    int cartan(int i, int j) const { return cartan_(i, j); }
    bool adjacent(int i, int j) const { return i != j && cartan_(i, j) != 0; }
    /// +1 for an arrow i -> j, -1 for j -> i, 0 otherwise.
    int arrow(int i, int j) const { return arrow_(i, j); }
    const std::vector<int>& tau() const { return tau_; }

    /// Factors of prod_{i->j} prod_{b,c} (z_ib - z_jc) for degree k.
    std::vector<NormalizedBinomial> edge_factors(const ColorDegree& k) const;

private:
    QuiverOrientation orientation_;
    Eigen::MatrixXi cartan_;
    Eigen::MatrixXi arrow_;
    std::vector<int> tau_;
};

/// R = numerator / prod edge_factors(degree); the numerator is color-symmetric.
struct ShuffleElement {
    ColorDegree degree;
    LaurentPoly numerator;

    bool is_zero() const { return numerator.is_zero(); }
    /// R as an explicit rational function.
    RatFunc as_ratfunc(const ShuffleContext& ctx) const;
    friend bool operator==(const ShuffleElement& a, const ShuffleElement& b) {
        return a.degree == b.degree && a.numerator == b.numerator;
    }
};

ShuffleElement unit(const ShuffleContext& ctx);
ShuffleElement generator(const ShuffleContext& ctx, int color, int d);

ShuffleElement operator+(const ShuffleElement& a, const ShuffleElement& b);
ShuffleElement operator-(const ShuffleElement& a, const ShuffleElement& b);
ShuffleElement operator*(const Rational& c, const ShuffleElement& a);
ShuffleElement operator*(const LaurentPoly& c, const ShuffleElement& a);

/// Homogeneous degree of R, or nullopt if R is zero or not homogeneous.
std::optional<int> homogeneous_degree(const ShuffleContext& ctx, const ShuffleElement& f);

/// Product summed over shuffle cosets of the color-preserving permutations.
ShuffleElement shuffle_product(const ShuffleContext& ctx, const ShuffleElement& f, const ShuffleElement& g);

/// A letter e_{color, d}.
struct Letter {
    int color;
    int d;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

/// z_{i1 1}^{d1} * ... * z_{ik 1}^{dk}, summed directly over color-preserving
/// assignments of letters to variables.
ShuffleElement word_product(const ShuffleContext& ctx, const Word& word);

/// Lexicographically least word obtained by swapping neighbouring letters of
/// distinct non-adjacent colors; such letters commute.
Word commutation_normal_form(const ShuffleContext& ctx, Word word);

bool wheel_check(const ShuffleContext& ctx, const ShuffleElement& f);
bool slope_leq(const ShuffleContext& ctx, const ShuffleElement& f, const Rational& mu);

/// Iterated constant term over |z_1| << ... << |z_k|. Returns 0 for
/// mismatched degrees; throws MalformedWord for colors out of range.
RatFunc pairing(const ShuffleContext& ctx, const ShuffleElement& f, const Word& word);

/// Distinct products of generators with color multiset k, exponents in
/// [-window, window] summing to d.
std::vector<ShuffleElement> spanning_set(const ShuffleContext& ctx, const ColorDegree& k, int d, int window);

/// Like spanning_set, with the word that produced each element.
std::vector<std::pair<Word, ShuffleElement>> spanning_set_with_words(const ShuffleContext& ctx, const ColorDegree& k,
                                                                     int d, int window);

}  // namespace qloop
