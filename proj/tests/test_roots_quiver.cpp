#include <set>

#include "doctest.h"
#include "qloop/errors.hpp"
#include "qloop/quiver.hpp"
#include "qloop/root_system.hpp"

using namespace qloop;

namespace {

RootVec rv(std::initializer_list<int> xs) {
    RootVec v(static_cast<int>(xs.size()));
    int i = 0;
    for (int x : xs) v(i++) = x;
    return v;
}

}  // namespace

TEST_CASE("root counts") {
    CHECK(build_root_system(DynkinType::parse("A2")).size() == 3);
    CHECK(build_root_system(DynkinType::parse("A5")).size() == 15);
    CHECK(build_root_system(DynkinType::parse("D4")).size() == 12);
    CHECK(build_root_system(DynkinType::parse("D5")).size() == 20);
    CHECK(build_root_system(DynkinType::parse("E6")).size() == 36);
    CHECK(build_root_system(DynkinType::parse("E7")).size() == 63);
    CHECK(build_root_system(DynkinType::parse("E8")).size() == 120);
    CHECK_THROWS_AS(DynkinType::parse("D3"), ConfigError);
    CHECK_THROWS_AS(DynkinType::parse("E9"), ConfigError);
}

TEST_CASE("A2 roots and pairing") {
    auto rs = build_root_system(DynkinType::parse("A2"));
    CHECK(rs.root(0) == rv({1, 0}));
    CHECK(rs.root(1) == rv({0, 1}));
    CHECK(rs.root(2) == rv({1, 1}));
    CHECK(pairing_form(rs, rs.root(0), rs.root(1)) == -1);
    CHECK(pairing_form(rs, rs.root(2), rs.root(1)) == 1);
}

TEST_CASE("root system properties") {
    for (const char* name : {"A4", "D4", "D5", "E6"}) {
        auto rs = build_root_system(DynkinType::parse(name));
        for (int a = 0; a < rs.size(); ++a) {
            CHECK(pairing_form(rs, rs.root(a), rs.root(a)) == 2);
            if (height(rs.root(a)) > 1) {
                bool split = false;
                for (int b = 0; b < rs.size() && !split; ++b) split = rs.is_root(rs.root(a) - rs.root(b));
                CHECK(split);
            }
            for (int b = 0; b < rs.size(); ++b) {
                if (a != b) CHECK(std::abs(pairing_form(rs, rs.root(a), rs.root(b))) <= 1);
            }
        }
    }
}

TEST_CASE("orientation parsing and level function") {
    auto a3 = DynkinType::parse("A3");
    auto o = QuiverOrientation::parse(a3, "1>2,3>2");
    CHECK(level_function(o) == std::vector<int>{1, 0, 1});
    CHECK(level_function(QuiverOrientation::parse(a3, "1>2,2>3")) == std::vector<int>{2, 1, 0});
    CHECK_THROWS_AS(QuiverOrientation::parse(DynkinType::parse("A2"), "1>2,2>1"), ConfigError);
    CHECK_THROWS_AS(QuiverOrientation::parse(a3, "1>3"), ConfigError);
    CHECK_THROWS_AS(QuiverOrientation::parse(a3, "1>2"), ConfigError);
    CHECK(all_orientations(DynkinType::parse("D4")).size() == 8);
}

TEST_CASE("euler form") {
    auto a2 = DynkinType::parse("A2");
    auto o = QuiverOrientation::parse(a2, "1>2");
    CHECK(euler_form(o, rv({1, 0}), rv({0, 1})) == -1);
    CHECK(euler_form(o, rv({0, 1}), rv({1, 0})) == 0);
    auto rs = build_root_system(DynkinType::parse("D4"));
    for (const auto& q : all_orientations(rs.type())) {
        for (const auto& v : rs.positive_roots()) {
            for (const auto& w : rs.positive_roots()) {
                CHECK(euler_form(q, v, w) + euler_form(q, w, v) == pairing_form(rs, v, w));
            }
        }
    }
}

TEST_CASE("A2 AR quiver") {
    auto rs = build_root_system(DynkinType::parse("A2"));
    auto ar = build_ar_quiver(QuiverOrientation::parse(rs.type(), "1>2"), rs);
    CHECK(ar.arrows() == std::vector<std::pair<int, int>>{{1, 2}, {2, 0}});
    CHECK(ar.less(0, 2));
    CHECK(ar.less(2, 1));
    CHECK(ar.less(0, 1));
    auto pairs = minimal_pairs(ar, default_refinement(ar));
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == MinimalPair{0, 1});

    auto mirrored = build_ar_quiver(QuiverOrientation::parse(rs.type(), "2>1"), rs);
    CHECK(mirrored.less(1, 2));
    CHECK(mirrored.less(2, 0));
}

TEST_CASE("AR order bullets and convexity") {
    for (const char* name : {"A3", "A4", "D4"}) {
        auto rs = build_root_system(DynkinType::parse(name));
        for (const auto& o : all_orientations(rs.type())) {
            auto ar = build_ar_quiver(o, rs);
            for (int a = 0; a < rs.size(); ++a) {
                CHECK_FALSE(ar.less(a, a));
                for (int b = 0; b < rs.size(); ++b) {
                    if (a == b) continue;
                    if (!ar.comparable(a, b)) CHECK(ar.euler(a, b) == 0);
                    if (ar.less(a, b)) CHECK((ar.euler(b, a) >= 0 && ar.euler(a, b) <= 0));
                    if (ar.euler(a, b) < 0 || ar.euler(b, a) > 0) CHECK(ar.less(a, b));
                    auto s = rs.index_of(rs.root(a) + rs.root(b));
                    if (s && ar.less(a, b)) CHECK((ar.less(a, *s) && ar.less(*s, b)));
                }
            }
        }
    }
}

TEST_CASE("incomparable pair in A3 source-sink orientation") {
    auto rs = build_root_system(DynkinType::parse("A3"));
    auto ar = build_ar_quiver(QuiverOrientation::parse(rs.type(), "1>2,3>2"), rs);
    int incomparable = 0;
    for (int a = 0; a < rs.size(); ++a) {
        for (int b = a + 1; b < rs.size(); ++b) {
            if (!ar.comparable(a, b)) {
                ++incomparable;
                CHECK(ar.euler(a, b) == 0);
            }
        }
    }
    CHECK(incomparable > 0);
}

TEST_CASE("linear extension counts") {
    auto a3 = build_root_system(DynkinType::parse("A3"));
    std::multiset<std::size_t> counts;
    for (const auto& o : all_orientations(a3.type())) counts.insert(all_refinements(build_ar_quiver(o, a3)).size());
    CHECK(counts == std::multiset<std::size_t>{2, 2, 4, 4});
    auto d4 = build_root_system(DynkinType::parse("D4"));
    auto star = QuiverOrientation::parse(d4.type(), "1>2,3>2,4>2");
    CHECK(all_refinements(build_ar_quiver(star, d4)).size() == 216);
}

TEST_CASE("minimal pairs over all refinements match full enumeration") {
    for (const char* name : {"A3", "D4"}) {
        auto rs = build_root_system(DynkinType::parse(name));
        for (const auto& o : all_orientations(rs.type())) {
            auto ar = build_ar_quiver(o, rs);
            std::set<MinimalPair> brute;
            for (const auto& order : all_refinements(ar)) {
                for (const auto& p : minimal_pairs(ar, order)) brute.insert(p);
            }
            auto fast = minimal_pairs_all_refinements(ar);
            CHECK(std::set<MinimalPair>(fast.begin(), fast.end()) == brute);
        }
    }
}

TEST_CASE("minimal_pairs rejects non-refinements") {
    auto rs = build_root_system(DynkinType::parse("A2"));
    auto ar = build_ar_quiver(QuiverOrientation::parse(rs.type(), "1>2"), rs);
    CHECK_THROWS_AS(minimal_pairs(ar, TotalOrder::from_sequence({1, 2, 0})), std::invalid_argument);
}

TEST_CASE("claims on A2, A3, D4") {
    for (const char* name : {"A2", "A3", "D4"}) {
        auto rs = build_root_system(DynkinType::parse(name));
        for (const auto& o : all_orientations(rs.type())) {
            auto ar = build_ar_quiver(o, rs);
            for (const auto& order : all_refinements(ar)) {
                for (const auto& p : minimal_pairs(ar, order)) {
                    CHECK(claim1_check(rs, order, p.alpha, p.beta));
                    CHECK(claim2_check(rs, order, p.alpha, p.beta));
                }
            }
        }
    }
    auto rs = build_root_system(DynkinType::parse("A2"));
    CHECK_THROWS_AS(claim1_check(rs, TotalOrder::from_sequence({1, 2, 0}), 0, 1), std::invalid_argument);
}

TEST_CASE("convex orders admit no split sums at rank <= 4") {
    // alpha_1 < ... < alpha_k < beta_1 < ... < beta_l never have equal sums; k, l <= 2.
    auto rs = build_root_system(DynkinType::parse("A4"));
    auto ar = build_ar_quiver(QuiverOrientation::standard(rs.type()), rs);
    auto order = default_refinement(ar);
    const auto& seq = order.sequence;
    const int m = rs.size();
    for (int cut = 1; cut < m; ++cut) {
        std::vector<RootVec> lows, highs;
        for (int a = 0; a < cut; ++a) {
            lows.push_back(rs.root(seq[a]));
            for (int b = a; b < cut; ++b) lows.push_back(rs.root(seq[a]) + rs.root(seq[b]));
        }
        for (int a = cut; a < m; ++a) {
            highs.push_back(rs.root(seq[a]));
            for (int b = a; b < m; ++b) highs.push_back(rs.root(seq[a]) + rs.root(seq[b]));
        }
        for (const auto& l : lows) {
            for (const auto& h : highs) CHECK(l != h);
        }
    }
}

TEST_CASE("minimal pair lemma") {
    for (const char* name : {"A2", "A3", "A4", "D4", "D5"}) {
        auto rs = build_root_system(DynkinType::parse(name));
        for (const auto& o : all_orientations(rs.type())) {
            auto ar = build_ar_quiver(o, rs);
            for (const auto& p : minimal_pairs_all_refinements(ar)) {
                CHECK(ar.euler(p.alpha, p.beta) == -1);
                CHECK(ar.euler(p.beta, p.alpha) == 0);
            }
        }
    }
}

TEST_CASE("hom and ext") {
    auto a2 = DynkinType::parse("A2");
    auto o = QuiverOrientation::parse(a2, "1>2");
    auto s1 = generic_indecomposable(o, rv({1, 0}), 1);
    auto s2 = generic_indecomposable(o, rv({0, 1}), 1);
    auto he = hom_ext_dims(o, s1, s2);
    CHECK(he.hom == 0);
    CHECK(he.ext == 1);
    auto p = generic_indecomposable(o, rv({1, 1}), 5);
    CHECK(!p.maps[0](0, 0).is_zero());
    CHECK(hom_ext_dims(o, p, p).hom == 1);
    auto r = restrict(o, p, {0});
    CHECK(r.dims == rv({1, 0}));
    CHECK(hom_ext_dims(o, r, s1).hom == 1);
    CHECK(restrict(o, p, {}).dims.isZero());
    CHECK(restrict(o, p, {0, 1}).maps[0] == p.maps[0]);

    auto d4 = build_root_system(DynkinType::parse("D4"));
    auto star = QuiverOrientation::parse(d4.type(), "1>2,3>2,4>2");
    auto top = generic_indecomposable(star, rv({1, 2, 1, 1}), 9);
    auto self = hom_ext_dims(star, top, top);
    CHECK(self.hom == 1);
    CHECK(self.ext == 0);
}

TEST_CASE("claim inequality examples") {
    auto o = QuiverOrientation::parse(DynkinType::parse("A2"), "1>2");
    CHECK(claim_ineq_max(o, rv({1, 0}), rv({0, 1})) == 0);
    CHECK(claim_ineq_max(o, rv({1, 1}), rv({1, 1})) <= 0);
}
