#include <catch2/catch_amalgamated.hpp>

#include "ym2d/weights.hpp"

using namespace ym2d;
using Catch::Approx;

namespace {

DominantWeight wt(std::vector<std::int64_t> p) { return DominantWeight{std::move(p)}; }

// brute-force dominance filter over the integer box [-m, m]^r
std::int64_t brute_count(const GroupDescriptor& g, int m) {
    const int L = int(weight_vector_length(g));
    std::vector<std::int64_t> v(L, -m);
    std::int64_t count = 0;
    while (true) {
        std::int64_t tv = 0;
        for (auto x : v) tv += std::llabs(x);
        if (tv <= m && is_dominant(g, DominantWeight{v})) ++count;
        int i = 0;
        for (; i < L; ++i) {
            if (v[i] < m) {
                ++v[i];
                for (int j = 0; j < i; ++j) v[j] = -m;
                break;
            }
        }
        if (i == L) break;
    }
    return count;
}

}  // namespace

TEST_CASE("make_group fills n, beta and rho data") {
    auto b2 = make_group(Family::OddOrthogonal, 2);
    CHECK(b2.matrix_size == 5);
    CHECK(b2.dyson_beta == 1);
    CHECK(rho_doubled(b2) == std::vector<std::int64_t>{3, 1});  // rho = (3/2, 1/2)

    auto u1 = make_group(Family::UnitaryTilde, 1);
    CHECK(u1.matrix_size == 1);
    CHECK(u1.dyson_beta == 2);
    CHECK(rho_doubled(u1) == std::vector<std::int64_t>{0});

    auto c3 = make_group(Family::Symplectic, 3);
    CHECK(c3.matrix_size == 6);
    CHECK(c3.dyson_beta == 4);
    CHECK(rho_doubled(c3) == std::vector<std::int64_t>{6, 4, 2});  // rho = (3,2,1)

    CHECK_THROWS_AS(make_group(Family::Symplectic, 0), std::invalid_argument);
}

TEST_CASE("casimir matches hand-evaluated closed forms") {
    auto a3 = make_group(Family::UnitaryTilde, 3);
    CHECK(casimir(a3, wt({1, 0, 0})) == Approx(1.0));

    auto b2 = make_group(Family::OddOrthogonal, 2);
    CHECK(casimir(b2, wt({1, 0})) == Approx(4.0 / 5.0));
    auto ce = casimir_exact(b2, wt({1, 0}));
    CHECK(ce.num == 4);
    CHECK(ce.den == 5);

    for (auto fam : {Family::UnitaryTilde, Family::SpecialUnitary, Family::OddOrthogonal,
                     Family::Symplectic, Family::EvenOrthogonal}) {
        auto g = make_group(fam, 3);
        DominantWeight zero{std::vector<std::int64_t>(weight_vector_length(g), 0)};
        CHECK(casimir(g, zero) == 0.0);
    }

    auto c1 = make_group(Family::Symplectic, 1);
    CHECK(casimir(c1, wt({2})) == Approx(2.0 * 4.0 / 2.0));  // l(l+2)/2

    CHECK_THROWS_AS(casimir(b2, wt({0, 1})), std::invalid_argument);
}

TEST_CASE("weyl_dim on defining and trivial representations") {
    auto a2 = make_group(Family::UnitaryTilde, 2);
    CHECK(weyl_dim(a2, wt({1, 0})) == 2.0);

    auto b2 = make_group(Family::OddOrthogonal, 2);
    CHECK(weyl_dim(b2, wt({1, 0})) == 5.0);
    CHECK(weyl_dim(b2, wt({1, 1})) == 10.0);
    CHECK(weyl_dim(b2, wt({2, 0})) == 14.0);

    auto c2 = make_group(Family::Symplectic, 2);
    CHECK(weyl_dim(c2, wt({1, 0})) == 4.0);
    CHECK(weyl_dim(c2, wt({1, 1})) == 5.0);

    auto d2 = make_group(Family::EvenOrthogonal, 2);
    CHECK(weyl_dim(d2, wt({1, 0})) == 4.0);
    CHECK(weyl_dim(d2, wt({1, 1})) == 3.0);
    CHECK(weyl_dim(d2, wt({1, -1})) == 3.0);

    auto su3 = make_group(Family::SpecialUnitary, 2);
    CHECK(weyl_dim(su3, wt({1, 0, 0})) == 3.0);
    CHECK(weyl_dim(su3, wt({1, 1, 0})) == 3.0);
    CHECK(weyl_dim(su3, wt({2, 1, 0})) == 8.0);

    for (auto fam : {Family::OddOrthogonal, Family::Symplectic}) {
        auto g = make_group(fam, 4);
        DominantWeight zero{std::vector<std::int64_t>(4, 0)};
        CHECK(weyl_dim(g, zero) == 1.0);
    }
}

TEST_CASE("enumerate_dominant strata and counts") {
    auto b2 = make_group(Family::OddOrthogonal, 2);
    auto ws = enumerate_dominant(b2, 2);
    REQUIRE(ws.size() == 4);
    CHECK(ws[0] == wt({0, 0}));
    // stratum sizes are non-decreasing
    for (std::size_t i = 0; i + 1 < ws.size(); ++i)
        CHECK(weight_size(ws[i]) <= weight_size(ws[i + 1]));

    auto d2 = make_group(Family::EvenOrthogonal, 2);
    CHECK(enumerate_dominant(d2, 1).size() == 2);  // (0,0) and (1,0)
    auto d2w = enumerate_dominant(d2, 2);
    // size 2 adds (2,0), (1,1), (1,-1)
    CHECK(d2w.size() == 5);

    for (auto fam : {Family::UnitaryTilde, Family::SpecialUnitary, Family::OddOrthogonal,
                     Family::Symplectic, Family::EvenOrthogonal}) {
        auto g = make_group(fam, 3);
        CHECK(enumerate_dominant(g, 0).size() == 1);
    }
}

TEST_CASE("enumeration agrees with brute-force dominance filter") {
    for (auto fam : {Family::UnitaryTilde, Family::OddOrthogonal, Family::Symplectic,
                     Family::EvenOrthogonal}) {
        for (int r : {1, 2, 3}) {
            auto g = make_group(fam, r);
            for (int m : {0, 1, 2, 3, 4}) {
                auto ws = enumerate_dominant(g, m);
                // uniqueness
                auto sorted = ws;
                std::sort(sorted.begin(), sorted.end());
                CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
                CHECK(std::int64_t(ws.size()) == brute_count(g, m));
            }
        }
    }
}

TEST_CASE("dimension and casimir invariants over enumerated weights") {
    for (auto fam : {Family::UnitaryTilde, Family::SpecialUnitary, Family::OddOrthogonal,
                     Family::Symplectic, Family::EvenOrthogonal}) {
        for (int r : {2, 5, 12}) {
            auto g = make_group(fam, r);
            for (const auto& w : enumerate_dominant(g, 6)) {
                if (w.is_trivial()) continue;
                auto st = weight_stats(g, w);
                CHECK(st.dimension >= 1);
                if (fam != Family::UnitaryTilde) CHECK(st.dimension >= r);  // d_lambda >= r
                CHECK(st.casimir > 0.0);
                // adding a box to the first row increases the Casimir (on the
                // partition cone; signed A~ weights with negative first part
                // are genuine counterexamples, e.g. (-3,-3) -> (-2,-3))
                DominantWeight up = w;
                up.parts[0] += 1;
                if (w.parts[0] >= 0 && is_dominant(g, up)) CHECK(casimir(g, up) > st.casimir);
            }
        }
    }
}

TEST_CASE("weight_count_by_size matches enumeration for small sizes") {
    for (auto fam : {Family::SpecialUnitary, Family::OddOrthogonal, Family::Symplectic,
                     Family::EvenOrthogonal, Family::UnitaryTilde}) {
        auto g = make_group(fam, 3);
        auto counts = weight_count_by_size(g, 3);
        for (int m = 0; m <= 3; ++m) {
            std::int64_t seen = 0;
            for_each_dominant_of_size(g, m, [&](const DominantWeight&) { ++seen; });
            CHECK(counts[m] == Approx(double(seen)));
        }
    }
}

TEST_CASE("weyl_log_dim tracks the exact dimension") {
    auto b4 = make_group(Family::OddOrthogonal, 4);
    for (const auto& w : enumerate_dominant(b4, 5)) {
        const double ld = weyl_log_dim(b4, w);
        CHECK(ld == Approx(std::log(weyl_dim(b4, w))).margin(1e-9));
    }
}
