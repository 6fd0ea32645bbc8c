#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "graphon/errors.hpp"
#include "graphon/rng.hpp"
#include "graphon/spectral.hpp"
#include "graphon/step_graphon.hpp"

#include "test_util.hpp"

using graphon::SimpleGraph;
using graphon::Spectrum;
using graphon::StepGraphon;

namespace {

StepGraphon half_square() { return StepGraphon({0.5, 0.5}, {{1.0, 0.0}, {0.0, 0.0}}); }

StepGraphon two_block_half() { return StepGraphon({0.5, 0.5}, {{0.5, 0.5}, {0.5, 0.5}}); }

double weighted_dot(const std::vector<double>& w, const std::vector<double>& a,
                    const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * a[i] * b[i];
    return s;
}

} // namespace

TEST_CASE("jacobi eigensolver on small matrices") {
    // already-diagonal input comes back sorted descending
    const auto d = graphon::jacobi_eigh({0.2, 0.0, 0.0, 0.0, 0.9, 0.0, 0.0, 0.0, -0.3}, 3);
    CHECK(d.eigenvalues == std::vector<double>{0.9, 0.2, -0.3});

    const auto e = graphon::jacobi_eigh({0.0, 0.5, 0.5, 0.0}, 2);
    REQUIRE(e.eigenvalues.size() == 2);
    CHECK(e.eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(e.eigenvalues[1] == doctest::Approx(-0.5).epsilon(1e-14));

    // reconstruction and orthonormality on a random symmetric matrix
    const int m = 12;
    std::vector<double> a(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            const double v =
                graphon::rng::uniform(5, 110, static_cast<std::uint64_t>(i) * m + j) - 0.5;
            a[static_cast<std::size_t>(i) * m + j] = v;
            a[static_cast<std::size_t>(j) * m + i] = v;
        }
    const auto r = graphon::jacobi_eigh(a, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            double recon = 0.0, dot = 0.0;
            for (int k = 0; k < m; ++k) {
                recon += r.eigenvalues[k] * r.vectors[static_cast<std::size_t>(k) * m + i] *
                         r.vectors[static_cast<std::size_t>(k) * m + j];
                dot += r.vectors[static_cast<std::size_t>(i) * m + k] *
                       r.vectors[static_cast<std::size_t>(j) * m + k];
            }
            CHECK(std::abs(recon - a[static_cast<std::size_t>(i) * m + j]) < 1e-12);
            CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-12);
        }
    }
}

TEST_CASE("decompose reproduces the named spectra") {
    const auto du = graphon::decompose(StepGraphon::constant(0.5));
    REQUIRE(du.spectrum.size() == 1);
    CHECK(du.spectrum.eigenvalues()[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(du.eigenvectors[0][0] == doctest::Approx(1.0).epsilon(1e-12));

    const auto dw = graphon::decompose(half_square());
    REQUIRE(dw.spectrum.size() == 1);
    CHECK(dw.spectrum.eigenvalues()[0] == doctest::Approx(0.5).epsilon(1e-14));
    REQUIRE(dw.eigenvectors[0].size() == 2);
    CHECK(dw.eigenvectors[0][0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::abs(dw.eigenvectors[0][1]) < 1e-12);

    const auto dk = graphon::decompose(graphon::graph_to_graphon(SimpleGraph::complete(2)));
    REQUIRE(dk.spectrum.size() == 2);
    CHECK(dk.spectrum.eigenvalues()[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(dk.spectrum.eigenvalues()[1] == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("decomposition invariants on random graphons") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const int m = 2 + static_cast<int>(seed % 5);
        const StepGraphon w = test_util::random_graphon(m, seed);
        const auto d = graphon::decompose(w);

        // eigenvalue bounds and Parseval
        for (double ev : d.spectrum.eigenvalues()) CHECK(std::abs(ev) <= 1.0 + 1e-12);
        CHECK(graphon::parseval_residual(w, d) < 1e-9);

        // trace identity: stored eigenvalues account for the kernel diagonal
        double trace = 0.0;
        for (int i = 0; i < m; ++i) trace += w.weight(i) * w.value(i, i);
        double sum = 0.0;
        for (double ev : d.spectrum.eigenvalues()) sum += ev;
        CHECK(std::abs(sum - trace) < 1e-9);

        // weighted orthonormality
        for (std::size_t a = 0; a < d.eigenvectors.size(); ++a)
            for (std::size_t b = 0; b < d.eigenvectors.size(); ++b) {
                const double dot = weighted_dot(d.weights, d.eigenvectors[a], d.eigenvectors[b]);
                CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < 1e-9);
            }

        // kernel reproduction: values[i][j] = sum of lambda f[i] f[j]
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                double recon = 0.0;
                for (std::size_t a = 0; a < d.eigenvectors.size(); ++a)
                    recon += d.spectrum.eigenvalues()[a] * d.eigenvectors[a][i] *
                             d.eigenvectors[a][j];
                CHECK(std::abs(recon - w.value(i, j)) < 1e-9);
            }

        // operator application matches the spectral expansion
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> v(m);
            for (int i = 0; i < m; ++i)
                v[i] = graphon::rng::uniform(seed, 111,
                                             static_cast<std::uint64_t>(trial) * m + i) -
                       0.5;
            const auto direct = graphon::apply_operator(w, v);
            std::vector<double> spectral(m, 0.0);
            for (std::size_t a = 0; a < d.eigenvectors.size(); ++a) {
                const double c =
                    d.spectrum.eigenvalues()[a] * weighted_dot(d.weights, d.eigenvectors[a], v);
                for (int i = 0; i < m; ++i) spectral[i] += c * d.eigenvectors[a][i];
            }
            for (int i = 0; i < m; ++i) CHECK(std::abs(direct[i] - spectral[i]) < 1e-9);
        }

        // block permutation leaves the spectrum unchanged
        const auto perm = test_util::random_permutation(m, seed + 50);
        const auto dp = graphon::decompose(graphon::permute_blocks(w, perm));
        CHECK(graphon::spectra_equal(d.spectrum, dp.spectrum, 1e-9));
    }
}

TEST_CASE("spectrum grouping and wire constructor") {
    const Spectrum s({0.5, 0.5 - 1e-9, 0.3}, 1e-12, 1e-8);
    REQUIRE(s.groups().size() == 2);
    CHECK(s.groups()[0].second == 2);
    CHECK(s.groups()[0].first == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(s.groups()[1].second == 1);

    // wire constructor validates multiplicity totals
    CHECK_THROWS_AS(Spectrum({0.5, 0.3}, {{0.5, 1}}, 1e-12, 1e-8), graphon::invalid_input);

    const double perturbed = 0.5 - 1e-9;
    CHECK(s.sum_squares() ==
          doctest::Approx(0.25 + perturbed * perturbed + 0.09).epsilon(1e-12));
    CHECK(s.power_sum(3) == doctest::Approx(0.25 + 0.027).epsilon(1e-6));
}

TEST_CASE("spectra_equal on the named cases") {
    const Spectrum half({0.5}, 1e-12, 1e-8);
    const Spectrum minus_half({-0.5}, 1e-12, 1e-8);
    const Spectrum half_twice({0.5, 0.5}, 1e-12, 1e-8);

    CHECK(graphon::spectra_equal(half, Spectrum({0.5}, 1e-12, 1e-8), 1e-8));
    CHECK(!graphon::spectra_equal(half, minus_half, 1e-8));
    CHECK(!graphon::spectra_equal(half_twice, half, 1e-8));
    CHECK(!graphon::spectra_equal(half, half_twice, 1e-8));

    // mismatched zero_tol is rejected
    CHECK_THROWS_AS(graphon::spectra_equal(half, Spectrum({0.5}, 1e-10, 1e-8), 1e-8),
                    graphon::invalid_input);
}

TEST_CASE("modulus classes pool both spectra") {
    const Spectrum a({0.5, 0.2, -0.5}, 1e-12, 1e-8);
    const Spectrum b({0.5, 0.3}, 1e-12, 1e-8);
    const auto classes = graphon::modulus_classes(a, b, 1e-8);
    REQUIRE(classes.size() == 3);
    CHECK(classes[0].modulus == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(classes[0].plus_a == 1);
    CHECK(classes[0].minus_a == 1);
    CHECK(classes[0].plus_b == 1);
    CHECK(classes[0].minus_b == 0);
    CHECK(classes[1].modulus == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(classes[1].plus_b == 1);
    CHECK(classes[2].modulus == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(classes[2].plus_a == 1);
}

TEST_CASE("intertwiner for the half pair maps the stated eigenvectors") {
    const StepGraphon u = two_block_half();
    const StepGraphon w = half_square();
    const auto t = graphon::build_intertwiner(u, w);
    REQUIRE(t.size() == 2);

    // T (sqrt2, 0) = (1, 1) and T (0, sqrt2) = (1, -1)
    const double s2 = std::sqrt(2.0);
    const double y0 = t.matrix[0] * s2;
    const double y1 = t.matrix[2] * s2;
    CHECK(y0 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(y1 == doctest::Approx(1.0).epsilon(1e-9));
    const double z0 = t.matrix[1] * s2;
    const double z1 = t.matrix[3] * s2;
    CHECK(z0 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(z1 == doctest::Approx(-1.0).epsilon(1e-9));

    const auto check = graphon::check_intertwiner(t, u, w);
    CHECK(check.unitarity_residual < 1e-9);
    CHECK(check.intertwining_residual < 1e-9);
}

TEST_CASE("intertwiner post-conditions on constructed cospectral pairs") {
    // identical inputs
    const StepGraphon a = test_util::random_graphon(4, 31);
    const auto ta = graphon::build_intertwiner(a, a);
    const auto ca = graphon::check_intertwiner(ta, a, a);
    CHECK(ca.unitarity_residual < 1e-9);
    CHECK(ca.intertwining_residual < 1e-9);

    // block-permuted copy with equal weights: the permutation matrix works,
    // and whatever the builder returns must satisfy the same post-conditions
    const StepGraphon b = test_util::random_zero_one_graphon(4, 32);
    const StepGraphon beq(std::vector<double>(4, 0.25), b.values());
    const StepGraphon bp = graphon::permute_blocks(beq, {3, 1, 0, 2});
    const auto tb = graphon::build_intertwiner(beq, bp);
    const auto cb = graphon::check_intertwiner(tb, beq, bp);
    CHECK(cb.unitarity_residual < 1e-9);
    CHECK(cb.intertwining_residual < 1e-9);

    // unequal-weight permutation goes through the common refinement
    const StepGraphon c = test_util::random_graphon(3, 33);
    const StepGraphon cp = graphon::permute_blocks(c, {2, 0, 1});
    const auto tc = graphon::build_intertwiner(c, cp);
    const auto cc = graphon::check_intertwiner(tc, c, cp);
    CHECK(cc.unitarity_residual < 1e-9);
    CHECK(cc.intertwining_residual < 1e-9);

    // degenerate eigenvalue (multiplicity 2)
    const StepGraphon d({0.5, 0.5}, {{1.0, 0.0}, {0.0, 1.0}});
    const auto td = graphon::build_intertwiner(d, d);
    const auto cd = graphon::check_intertwiner(td, d, d);
    CHECK(cd.unitarity_residual < 1e-9);
    CHECK(cd.intertwining_residual < 1e-9);
}

TEST_CASE("intertwiner refuses non-cospectral inputs") {
    CHECK_THROWS_AS(
        graphon::build_intertwiner(StepGraphon::constant(0.5), StepGraphon::constant(1.0 / 3.0)),
        graphon::refusal);
    // multiplicity mismatch at the same value
    const StepGraphon twice({0.5, 0.5}, {{1.0, 0.0}, {0.0, 1.0}}); // spectrum {1/2, 1/2}
    CHECK_THROWS_AS(graphon::build_intertwiner(StepGraphon::constant(0.5), twice),
                    graphon::refusal);
}

TEST_CASE("parseval residual on the named graphons") {
    const StepGraphon u = StepGraphon::constant(0.5);
    CHECK(graphon::parseval_residual(u, graphon::decompose(u)) < 1e-12);
    const StepGraphon k2 = graphon::graph_to_graphon(SimpleGraph::complete(2));
    CHECK(graphon::parseval_residual(k2, graphon::decompose(k2)) < 1e-12);
}

TEST_CASE("eigensolver guard") {
    CHECK_THROWS_AS(graphon::jacobi_eigh(std::vector<double>(513 * 513, 0.0), 513),
                    graphon::refusal);
}
