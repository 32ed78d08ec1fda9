#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"
#include "vtc/numerics.hpp"

using namespace vtc;

TEST_CASE("erf basic values") {
    CHECK(vtc::erf(0.0) == 0.0);
    CHECK(vtc::erf(6.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(vtc::erf(-6.0) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("erf against quadrature oracle") {
    // (2/sqrt(pi)) int_0^x e^{-s^2} ds, evaluated independently
    auto erf_oracle = [](double x) {
        return 2.0 / std::sqrt(M_PI) *
               integrate([](double s) { return std::exp(-s * s); }, 0.0, x,
                         1e-13);
    };
    CHECK(vtc::erf(1.0) == doctest::Approx(0.8427007929497149).epsilon(1e-12));
    for (double x : {0.1, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.5})
        CHECK(std::fabs(vtc::erf(x) - erf_oracle(x)) < 1e-12);
}

TEST_CASE("erf is odd, erfc and erfcx consistent") {
    for (double x : {0.05, 0.3, 0.8, 1.7, 2.9, 5.0}) {
        CHECK(vtc::erf(-x) == -vtc::erf(x));
        CHECK(vtc::erfc(x) == doctest::Approx(1.0 - vtc::erf(x)).epsilon(1e-13));
        CHECK(vtc::erfcx(x) * std::exp(-x * x) ==
              doctest::Approx(vtc::erfc(x)).epsilon(1e-13));
    }
    // scaled form stays usable where plain erfc underflows
    CHECK(vtc::erfcx(30.0) == doctest::Approx(1.0 / (30.0 * std::sqrt(M_PI)))
                             .epsilon(1e-3));
}

TEST_CASE("normal cdf/pdf") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(normal_pdf(0.0) ==
          doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-15));
    const double cdf1_oracle =
        0.5 + integrate([](double s) { return normal_pdf(s); }, 0.0, 1.0, 1e-13);
    CHECK(normal_cdf(1.0) == doctest::Approx(cdf1_oracle).epsilon(1e-12));
    CHECK(normal_cdf(1.0) == doctest::Approx(0.8413447460685429).epsilon(1e-12));
    for (double x : {-3.0, -0.7, 0.2, 1.9, 4.0})
        CHECK(normal_cdf(x) + normal_cdf(-x) ==
              doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("integrate known integrals") {
    CHECK(integrate([](double) { return 1.0; }, 0.0, 1.0, 1e-12) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return x * std::exp(-0.5 * x * x); }, 0.0,
                    40.0, 1e-11) == doctest::Approx(1.0).epsilon(1e-10));
    // sqrt(2 pi) int_0^inf x^3 f(x) dx = int_0^inf x^3 e^{-x^2/2} dx = 2
    CHECK(integrate([](double x) { return x * x * x * std::exp(-0.5 * x * x); },
                    0.0, 40.0, 1e-11) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("integrate exact on low-degree polynomials") {
    for (double a : {-2.0, 0.0, 0.5}) {
        const double b = a + 3.0;
        auto poly = [](double x) { return 2.0 + x - 3.0 * x * x + x * x * x; };
        auto anti = [](double x) {
            return 2.0 * x + 0.5 * x * x - x * x * x + 0.25 * x * x * x * x;
        };
        CHECK(integrate(poly, a, b, 1e-12) ==
              doctest::Approx(anti(b) - anti(a)).epsilon(1e-12));
    }
}

TEST_CASE("integrate throws NonConvergence when budget is exhausted") {
    CHECK_THROWS_AS(integrate([](double x) { return std::exp(x); }, 0.0, 1.0,
                              0.0),
                    NonConvergence);
}

TEST_CASE("thomas identity and hand-solvable system") {
    Tridiag id;
    id.diag = {1.0, 1.0, 1.0};
    id.sub = {0.0, 0.0};
    id.sup = {0.0, 0.0};
    const std::vector<double> d = {3.0, -1.0, 7.5};
    CHECK(thomas_solve(id, d) == d);

    Tridiag m;
    m.diag = {2.0, 2.0};
    m.sub = {1.0};
    m.sup = {1.0};
    const auto x = thomas_solve(m, {3.0, 3.0});
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("thomas matches dense elimination on random dd system") {
    std::mt19937 rng(42);
    const std::size_t n = 50;
    const Tridiag m = testutil::random_dd_tridiag(rng, n);
    std::uniform_real_distribution<double> rhs(-5.0, 5.0);
    std::vector<double> d(n);
    for (auto& v : d) v = rhs(rng);

    const auto x = thomas_solve(m, d);
    const auto x_ref = testutil::dense_solve(testutil::to_dense(m), d);
    for (std::size_t i = 0; i < n; ++i)
        CHECK(x[i] == doctest::Approx(x_ref[i]).epsilon(1e-10));
}

TEST_CASE("thomas round-trip up to N=10^4") {
    std::mt19937 rng(7);
    for (std::size_t n : {3u, 117u, 10000u}) {
        const Tridiag m = testutil::random_dd_tridiag(rng, n);
        std::uniform_real_distribution<double> rhs(-1.0, 1.0);
        std::vector<double> d(n);
        for (auto& v : d) v = rhs(rng);
        const auto back = m.multiply(thomas_solve(m, d));
        double max_rel = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            max_rel = std::max(max_rel,
                               std::fabs(back[i] - d[i]) /
                                   std::max(1.0, std::fabs(d[i])));
        CHECK(max_rel < 1e-10);
    }
}

TEST_CASE("thomas reports singular pivot") {
    Tridiag m;
    m.diag = {1.0, 1.0};
    m.sub = {1.0};
    m.sup = {1.0};  // second pivot becomes exactly zero
    CHECK_THROWS_AS(thomas_solve(m, {1.0, 1.0}), SingularPivot);
}

TEST_CASE("central difference") {
    CHECK(central_diff([](double x) { return x * x; }, 1.0, 1e-5) ==
          doctest::Approx(2.0).epsilon(1e-8));
    CHECK(central_diff([](double) { return 4.2; }, 0.3, 1e-4) == 0.0);
}
