#include <catch2/catch_amalgamated.hpp>

#include "support/quadrature.hpp"
#include "ym2d/partition.hpp"

using namespace ym2d;
using Catch::Approx;

TEST_CASE("rank-1 U(1) partition function equals jacobi theta, any genus") {
    auto u1 = make_group(Family::UnitaryTilde, 1);
    for (double T : {0.5, 2.0, 8.0}) {
        auto th = jacobi_theta(q_of_area(T), 1e-13);
        for (int g : {1, 2, 3}) {
            auto z = partition_function(u1, g, T, TruncationPolicy::for_genus(g, 60, 1e-11));
            CHECK(z.value == Approx(th.value).margin(z.tail_bound + th.tail_bound + 1e-12));
            CHECK(z.tail_bound < 1e-9);
        }
        // sphere agrees as well: every dimension is 1, genus is irrelevant
        auto z0 = partition_function(u1, 0, T, TruncationPolicy::for_genus(0, 200, 1e-12));
        CHECK(z0.value == Approx(th.value).margin(1e-9));
    }
}

TEST_CASE("unitary plateau sum agrees with a brute-force box sum at small rank") {
    // independent oracle: direct summation over the dominant-weight box
    for (int r : {2, 3, 4}) {
        auto g = make_group(Family::UnitaryTilde, r);
        const double T = 2.0;
        double brute = 0.0;
        for_each_dominant(g, 40, [&](const DominantWeight& w) {
            brute += std::exp(-0.5 * T * casimir(g, w));
        });
        auto z = partition_function(g, 1, T, TruncationPolicy::for_genus(1, 40, 1e-10));
        CHECK(z.value == Approx(brute).epsilon(1e-9));
    }
    for (int r : {2, 3}) {
        auto g = make_group(Family::SpecialUnitary, r);
        const double T = 2.0;
        double brute = 0.0;
        for_each_dominant(g, 44, [&](const DominantWeight& w) {
            brute += std::exp(-0.5 * T * casimir(g, w));
        });
        auto z = partition_function(g, 1, T, TruncationPolicy::for_genus(1, 44, 1e-10));
        CHECK(z.value == Approx(brute).epsilon(1e-8));
    }
}

TEST_CASE("Z decreases in T and in genus") {
    auto c2 = make_group(Family::Symplectic, 2);
    double prev = 1e30;
    for (double T : {0.5, 1.0, 2.0, 4.0}) {
        auto z = partition_function(c2, 1, T, TruncationPolicy::for_genus(1, 40, 1e-10));
        CHECK(z.value < prev);
        prev = z.value;
    }
    for (auto fam : {Family::OddOrthogonal, Family::EvenOrthogonal}) {
        auto g = make_group(fam, 3);
        double zg_prev = 1e30;
        for (int gen : {1, 2, 3}) {
            auto z = partition_function(g, gen, 2.0, TruncationPolicy::for_genus(gen, 30, 1e-10));
            CHECK(z.value < zg_prev);
            CHECK(z.value >= 1.0 - z.tail_bound);
            zg_prev = z.value;
        }
    }
}

TEST_CASE("large T leaves only the trivial weight") {
    for (auto fam : {Family::OddOrthogonal, Family::Symplectic, Family::EvenOrthogonal,
                     Family::UnitaryTilde, Family::SpecialUnitary}) {
        auto g = make_group(fam, 3);
        auto z = partition_function(g, 1, 60.0, TruncationPolicy::for_genus(1, 20, 1e-12));
        CHECK(z.value == Approx(1.0).margin(1e-5));
    }
}

TEST_CASE("g >= 2 sandwich: 1 <= Z <= zeta(2g-2)") {
    for (auto fam : {Family::SpecialUnitary, Family::OddOrthogonal, Family::Symplectic,
                     Family::EvenOrthogonal}) {
        for (int r : {2, 5, 10}) {
            auto g = make_group(fam, r);
            for (int gen : {2, 3}) {
                auto z = partition_function(g, gen, 1.0, TruncationPolicy::for_genus(gen, 24, 1e-9));
                auto zeta = witten_zeta(g, double(2 * gen - 2),
                                        TruncationPolicy{24, 1e-9, TailMode::RigorousG2Plus});
                CHECK(z.value >= 1.0 - z.tail_bound);
                CHECK(z.value <= zeta.value + zeta.tail_bound + z.tail_bound);
            }
        }
    }
}

TEST_CASE("boundary partition function at the identity is the closed sum") {
    for (auto fam : {Family::Symplectic, Family::OddOrthogonal, Family::UnitaryTilde,
                     Family::SpecialUnitary, Family::EvenOrthogonal}) {
        auto g = make_group(fam, 2);
        const double T = 2.0;
        for (int gen : {1, 2}) {
            auto zb = partition_boundary(g, gen, T, ConjugacyClass::identity(g), 1e-9);
            auto z = partition_function(g, gen, T, TruncationPolicy::for_genus(gen, 50, 1e-10));
            CHECK(zb.value.real() ==
                  Approx(z.value).margin(zb.tail_bound + z.tail_bound + 1e-10));
            CHECK(zb.value.imag() == Approx(0.0).margin(1e-10));
        }
    }
}

TEST_CASE("boundary partition function: rank-1 closed form and modulus bound") {
    auto u1 = make_group(Family::UnitaryTilde, 1);
    const double T = 1.3;
    for (double th : {0.0, 0.6, 2.0}) {
        auto zb = partition_boundary(u1, 1, T, ConjugacyClass{{th}}, 1e-10);
        CHECK(zb.value.real() == Approx(oracle::wrapped_gaussian(T, th)).margin(1e-9));
    }
    auto c2 = make_group(Family::Symplectic, 2);
    auto z = partition_function(c2, 1, T, TruncationPolicy::for_genus(1, 40, 1e-10));
    for (double a : {0.4, 1.1}) {
        auto zb = partition_boundary(c2, 1, T, ConjugacyClass{{a, 0.3 * a}}, 1e-8);
        CHECK(std::abs(zb.value) <= z.value + z.tail_bound + zb.tail_bound + 1e-8);
    }
}

TEST_CASE("witten zeta: Basel value at A_1 and r-monotone limit") {
    auto a1 = make_group(Family::SpecialUnitary, 1);
    auto z = witten_zeta(a1, 2.0, TruncationPolicy{4000, 1e-9, TailMode::RigorousG2Plus});
    const double basel = std::acos(-1.0) * std::acos(-1.0) / 6.0;
    CHECK(z.value == Approx(basel).margin(z.tail_bound + 1e-9));
    CHECK(z.tail_bound < 1e-3);

    double prev = 10.0;
    for (int r : {2, 4, 8}) {
        auto zr = witten_zeta(make_group(Family::OddOrthogonal, r), 2.0,
                              TruncationPolicy{30, 1e-9, TailMode::RigorousG2Plus});
        CHECK(zr.value < prev);
        CHECK(zr.value > 1.0);
        prev = zr.value;
    }

    CHECK_THROWS_AS(witten_zeta(a1, 1.0, TruncationPolicy{}), std::invalid_argument);
    CHECK_THROWS_AS(witten_zeta(make_group(Family::UnitaryTilde, 3), 2.0, TruncationPolicy{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(witten_zeta(make_group(Family::EvenOrthogonal, 1), 2.0, TruncationPolicy{}),
                    std::invalid_argument);
}

TEST_CASE("witten zeta tail certificates cover a brute-force extension") {
    // compare a bigger truncation against (small truncation + its tail bound)
    for (auto fam : {Family::SpecialUnitary, Family::OddOrthogonal, Family::Symplectic,
                     Family::EvenOrthogonal}) {
        auto g = make_group(fam, 3);
        auto lo = witten_zeta(g, 2.0, TruncationPolicy{10, 1e-9, TailMode::RigorousG2Plus});
        auto hi = witten_zeta(g, 2.0, TruncationPolicy{28, 1e-9, TailMode::RigorousG2Plus});
        CHECK(hi.value - lo.value >= -1e-12);
        CHECK(hi.value - lo.value <= lo.tail_bound);
    }
}

TEST_CASE("sphere partition function is heuristic-only and matches Hankel for U(N)") {
    auto u3 = make_group(Family::UnitaryTilde, 3);
    CHECK_THROWS_AS(partition_function(u3, 0, 1.0, TruncationPolicy::for_genus(1)),
                    std::invalid_argument);

    // independent oracle: Z_{0,T,U(N)} = e^{T||rho||^2/(2N)} det[S_{j+k}] / prod k!^2
    // with S_p the p-th moment of the discrete Gaussian weight on Z.
    const int N = 3;
    const double T = 4.0;
    Eigen::MatrixXd H(N, N);
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) {
            double s = 0.0;
            for (int v = -60; v <= 60; ++v)
                s += std::pow(double(v), j + k) * std::exp(-T * v * v / (2.0 * N));
            H(j, k) = s;
        }
    double sf = 1.0;
    for (int k = 1; k < N; ++k)
        for (int i = 1; i <= k; ++i) sf *= i;
    const double rho2 = N * (double(N) * N - 1.0) / 12.0;
    const double hankel = std::exp(T * rho2 / (2.0 * N)) * H.determinant() / (sf * sf);

    auto z0 = partition_function(u3, 0, T, TruncationPolicy::for_genus(0, 160, 1e-10));
    CHECK(z0.value == Approx(hankel).epsilon(1e-8));
}

TEST_CASE("douglas-kazakov weak phase free energy") {
    const double pi = std::acos(-1.0);
    CHECK(dk_free_energy_weak(pi * pi) ==
          Approx(pi * pi / 24.0 + 0.75 - std::log(pi)).margin(1e-15));
    CHECK(dk_free_energy_weak(pi * pi) == Approx(0.016543).margin(5e-7));
    // F' = 1/24 - 1/(2T) < 0 throughout (0, pi^2]; F > 0
    double prev = 1e9;
    for (double T = 0.2; T <= pi * pi; T += 0.2) {
        const double F = dk_free_energy_weak(T);
        CHECK(F > 0.0);
        CHECK(F < prev);
        prev = F;
    }
    CHECK_THROWS_AS(dk_free_energy_weak(pi * pi + 0.1), std::invalid_argument);
    CHECK_THROWS_AS(dk_free_energy_weak(0.0), std::invalid_argument);
}

TEST_CASE("limit_gap shrinks with rank") {
    const double T = 2.0;
    for (auto fam : {Family::OddOrthogonal, Family::Symplectic}) {
        auto g10 = limit_gap(fam, 1, T, 10, TruncationPolicy::for_genus(1, 40, 1e-8));
        auto g20 = limit_gap(fam, 1, T, 20, TruncationPolicy::for_genus(1, 40, 1e-8));
        CHECK(g20.gap < g10.gap);
    }
    // g >= 2 gap bounded by zeta - 1
    auto gap = limit_gap(Family::Symplectic, 2, 3.0, 20, TruncationPolicy::for_genus(2, 30, 1e-9));
    auto zeta = witten_zeta(make_group(Family::Symplectic, 20), 2.0,
                            TruncationPolicy{30, 1e-9, TailMode::RigorousG2Plus});
    CHECK(gap.gap <= zeta.value - 1.0 + zeta.tail_bound + gap.tolerance);
    // large T: both sides tend to 1
    auto gT = limit_gap(Family::OddOrthogonal, 1, 40.0, 6, TruncationPolicy::for_genus(1, 20, 1e-10));
    CHECK(gT.gap < 1e-6);
}
