#include <doctest.h>

#include "oracles.hpp"
#include "qloop/shuffle.hpp"

using namespace qloop;

namespace {

// Value at q = s^2; the function must be free of x, y, z.
mpq_class evaluate(const RatFunc& f, const mpq_class& s) {
    REQUIRE(f.denominator().empty());
    auto pw = [](mpq_class b, int e) {
        mpq_class r = 1;
        for (int i = 0; i < std::abs(e); ++i) r *= b;
        return e >= 0 ? r : mpq_class(1 / r);
    };
    mpq_class num = 0;
    for (const auto& t : f.numerator().terms()) {
        REQUIRE(t.monomial.is_scalar());
        num += t.coeff.to_mpq() * pw(s, t.monomial.exponent(VarId::q()));
    }
    return num / pw(s * s - 1 / (s * s), f.qdiff_power());
}

std::vector<std::vector<int>> cartan_of(const ShuffleContext& c) {
    std::vector<std::vector<int>> m(c.rank(), std::vector<int>(c.rank()));
    for (int i = 0; i < c.rank(); ++i)
        for (int j = 0; j < c.rank(); ++j) m[i][j] = c.cartan(i, j);
    return m;
}

oracle::Letters letters(const Word& w) {
    oracle::Letters out;
    for (const auto& l : w) out.emplace_back(l.color, l.d);
    return out;
}

}  // namespace

TEST_CASE("pairing agrees with the series oracle") {
    for (const char* spec : {"A2:1>2", "A3:1>2,3>2"}) {
        std::string s(spec);
        auto type = DynkinType::parse(s.substr(0, 2));
        ShuffleContext c(QuiverOrientation::parse(type, s.substr(3)));
        auto cartan = cartan_of(c);
        std::vector<Word> words;
        const int n = c.rank();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int d = -1; d <= 1; ++d) words.push_back({{i, d}, {j, -d}});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    if (std::abs(i - k) + std::abs(j - k) > 2) continue;
                    words.push_back({{i, 1}, {j, 0}, {k, -1}});
                    words.push_back({{i, 0}, {j, -1}, {k, 0}});
                }
        int nonzero = 0;
        for (const auto& e : words) {
            auto elem = word_product(c, e);
            for (const auto& w : words) {
                if (w.size() != e.size()) continue;
                RatFunc kernel = pairing(c, elem, w);
                nonzero += !kernel.is_zero();
                for (const mpq_class& root : {mpq_class(2), mpq_class(3, 2)}) {
                    CHECK(evaluate(kernel, root) == oracle::pairing_at(cartan, letters(e), letters(w), root * root));
                }
            }
        }
        CHECK(nonzero > 50);
    }
}
