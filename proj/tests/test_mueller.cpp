#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>

#include "polscat/mueller.hpp"
#include "oracles.hpp"

using Catch::Matchers::WithinAbs;
using namespace polscat;

namespace {
constexpr double kInv3 = 0.577350269189626; // 1/sqrt(3)
}

TEST_CASE("MuellerMatrix normalization on ingestion") {
    Mat4d raw{};
    raw[0][0] = 2.0;
    raw[1][1] = 1.0;
    const MuellerMatrix m = MuellerMatrix::from_raw(raw);
    REQUIRE(m[0][0] == 1.0);
    REQUIRE(m[1][1] == 0.5);

    Mat4d bad{};
    bad[0][0] = 0.0;
    REQUIRE_THROWS_AS(MuellerMatrix::from_raw(bad), std::invalid_argument);
    bad[0][0] = -1.0;
    REQUIRE_THROWS_AS(MuellerMatrix::from_raw(bad), std::invalid_argument);
    bad[0][0] = std::numeric_limits<double>::infinity();
    REQUIRE_THROWS_AS(MuellerMatrix::from_raw(bad), std::invalid_argument);
}

TEST_CASE("h_from_mueller on reference matrices") {
    // Ideal depolarizer: only the (0,0) term survives, H = I/4.
    const Mat4 h0 = h_from_mueller(MuellerMatrix::diagonal(1, 0, 0, 0)).h;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            REQUIRE_THAT(std::abs(h0[i][j] - (i == j ? cplx(0.25) : cplx(0.0))),
                         WithinAbs(0.0, 1e-15));

    // diag(1,0,0,1): the sigma0 (x) sigma0 and sigma3 (x) sigma3 terms.
    const Mat4 h3 = h_from_mueller(MuellerMatrix::diagonal(1, 0, 0, 1)).h;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double expect = (i == j && (i == 0 || i == 3)) ? 0.5 : 0.0;
            REQUIRE_THAT(std::abs(h3[i][j] - cplx(expect)), WithinAbs(0.0, 1e-15));
        }

    // Identity medium: rank-1 projector with spectrum {1, 0, 0, 0}.
    const HMatrix hid = h_from_mueller(MuellerMatrix::identity());
    const EigenSpectrum sp = eigenspectrum(hid);
    REQUIRE_THAT(sp[0], WithinAbs(1.0, 1e-12));
    REQUIRE_THAT(sp[1], WithinAbs(0.0, 1e-12));
    REQUIRE(oracle::spectra_match(jacobi_eigenvalues(hid.h), oracle::quartic_eigen_roots(hid.h),
                                  1e-9));

    // Brute-force Kronecker-sum oracle on random physical matrices.
    std::mt19937_64 gen(2024);
    for (int it = 0; it < 200; ++it) {
        const MuellerMatrix m = oracle::random_physical_mueller(gen);
        const Mat4 lib = h_from_mueller(m).h;
        const Mat4 ora = oracle::h_oracle(m.m);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                REQUIRE_THAT(std::abs(lib[i][j] - ora[i][j]), WithinAbs(0.0, 1e-13));
    }
}

TEST_CASE("mueller_from_h inverts h_from_mueller") {
    HMatrix quarter;
    for (int i = 0; i < 4; ++i) quarter.h[i][i] = 0.25;
    const MuellerMatrix m0 = mueller_from_h(quarter);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            REQUIRE_THAT(m0[i][j], WithinAbs(i == 0 && j == 0 ? 1.0 : 0.0, 1e-14));

    HMatrix half;
    half.h[0][0] = 0.5;
    half.h[3][3] = 0.5;
    const MuellerMatrix m3 = mueller_from_h(half);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            REQUIRE_THAT(m3[i][j], WithinAbs(i == j && (i == 0 || i == 3) ? 1.0 : 0.0, 1e-14));

    std::mt19937_64 gen(99);
    for (int it = 0; it < 1000; ++it) {
        const MuellerMatrix m = oracle::random_physical_mueller(gen);
        const MuellerMatrix back = mueller_from_h(h_from_mueller(m));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) REQUIRE_THAT(back[i][j], WithinAbs(m[i][j], 1e-12));
    }

    // Non-Hermitian or trace-deficient inputs are rejected up front.
    HMatrix bogus = quarter;
    bogus.h[0][1] = cplx(0.1, 0.0); // no conjugate partner at [1][0]
    REQUIRE_THROWS_AS(mueller_from_h(bogus), std::invalid_argument);
    HMatrix off_trace = quarter;
    off_trace.h[0][0] += 0.5;
    REQUIRE_THROWS_AS(mueller_from_h(off_trace), std::invalid_argument);
}

TEST_CASE("eigenspectrum canonicalization") {
    HMatrix diag;
    diag.h[0][0] = 0.5;
    diag.h[1][1] = 0.5;
    const EigenSpectrum sp = eigenspectrum(diag);
    REQUIRE(sp[0] == 0.5);
    REQUIRE(sp[1] == 0.5);
    REQUIRE(sp[2] == 0.0);
    REQUIRE(sp[3] == 0.0);

    // Small negatives clip to zero and the spectrum renormalizes.
    HMatrix noisy;
    noisy.h[0][0] = 0.6;
    noisy.h[1][1] = 0.4 + 5e-10;
    noisy.h[2][2] = 0.0;
    noisy.h[3][3] = -5e-10;
    const EigenSpectrum clipped = eigenspectrum(noisy);
    REQUIRE(clipped[3] == 0.0);
    REQUIRE_THAT(clipped[0] + clipped[1] + clipped[2] + clipped[3], WithinAbs(1.0, 1e-15));

    // Beyond-tolerance negatives are rejected.
    HMatrix bad;
    bad.h[0][0] = 0.7;
    bad.h[1][1] = 0.3 + 2e-9;
    bad.h[2][2] = 0.0;
    bad.h[3][3] = -2e-9;
    REQUIRE_THROWS_AS(eigenspectrum(bad), std::domain_error);
}

TEST_CASE("depolarization index, both formulas") {
    REQUIRE(depolarization_index_from_m(MuellerMatrix::identity()) == 1.0);
    REQUIRE(depolarization_index_from_m(MuellerMatrix::diagonal(1, 0, 0, 0)) == 0.0);
    REQUIRE_THAT(depolarization_index_from_m(MuellerMatrix::diagonal(1, 0, 0, 1)),
                 WithinAbs(kInv3, 1e-12));

    REQUIRE(depolarization_index_from_spectrum(EigenSpectrum::from_values({1, 0, 0, 0})) == 1.0);
    REQUIRE(depolarization_index_from_spectrum(
                EigenSpectrum::from_values({0.25, 0.25, 0.25, 0.25})) == 0.0);
    REQUIRE_THAT(depolarization_index_from_spectrum(
                     EigenSpectrum::from_values({0.0, 1.0 / 3, 1.0 / 3, 1.0 / 3})),
                 WithinAbs(1.0 / 3, 1e-12));

    // A non-physical normalized matrix can push the index past 1.
    Mat4d ones{};
    for (auto& row : ones)
        for (double& v : row) v = 1.0;
    REQUIRE_THROWS_AS(depolarization_index_from_m(MuellerMatrix::from_raw(ones)),
                      std::domain_error);
}

TEST_CASE("polarization entropy") {
    REQUIRE(polarization_entropy(EigenSpectrum::from_values({1, 0, 0, 0})) == 0.0);
    REQUIRE_THAT(polarization_entropy(EigenSpectrum::from_values({0.25, 0.25, 0.25, 0.25})),
                 WithinAbs(1.0, 1e-15));
    REQUIRE_THAT(polarization_entropy(EigenSpectrum::from_values({0.5, 0.5, 0, 0})),
                 WithinAbs(0.5, 1e-15));

    // Zero entropy only at a pure spectrum, one only at the flat spectrum.
    std::mt19937_64 gen(5);
    for (int it = 0; it < 300; ++it) {
        const EigenSpectrum sp = eigenspectrum({oracle::random_psd_unit_trace(gen)});
        const double e = polarization_entropy(sp);
        if (e < 1e-9) REQUIRE(sp[0] > 1.0 - 1e-6);
        if (e > 1.0 - 1e-9)
            for (int i = 0; i < 4; ++i) REQUIRE_THAT(sp[i], WithinAbs(0.25, 1e-4));
    }
}

TEST_CASE("cross-formula identity on random physical matrices") {
    std::mt19937_64 gen(31337);
    for (int it = 0; it < 1000; ++it) {
        const MuellerMatrix m = oracle::random_physical_mueller(gen);

        double frob2 = 0.0;
        for (const auto& row : m.m)
            for (double v : row) frob2 += v * v;
        const EigenSpectrum sp = eigenspectrum(h_from_mueller(m));
        double s2 = 0.0;
        for (double l : sp.lambda) s2 += l * l;
        REQUIRE_THAT(frob2, WithinAbs(4.0 * s2, 1e-10));

        REQUIRE_THAT(depolarization_index_from_m(m),
                     WithinAbs(depolarization_index_from_spectrum(sp), 1e-9));

        // Physical matrices have bounded entries.
        for (const auto& row : m.m)
            for (double v : row) REQUIRE(std::abs(v) <= 1.0 + 1e-9);
    }
}

TEST_CASE("is_physical") {
    REQUIRE(is_physical(MuellerMatrix::identity()).physical);
    REQUIRE(is_physical(MuellerMatrix::diagonal(1, 0, 0, 0)).physical);

    const PhysicalityReport bad = is_physical(MuellerMatrix::diagonal(1, 1, 1, -1));
    REQUIRE_FALSE(bad.physical);
    REQUIRE_THAT(bad.min_eigenvalue, WithinAbs(-0.5, 1e-12));
    // Oracle cross-check of the offending eigenvalue.
    const auto roots =
        oracle::quartic_eigen_roots(h_from_mueller(MuellerMatrix::diagonal(1, 1, 1, -1)).h);
    REQUIRE_THAT(roots.front(), WithinAbs(-0.5, 1e-9));

    REQUIRE_THROWS_AS(is_physical(MuellerMatrix::identity(), -1.0), std::invalid_argument);
}

TEST_CASE("mueller_from_jones reference elements") {
    // Identity element.
    const MuellerMatrix mid = mueller_from_jones({Mat2{{{1.0, 0.0}, {0.0, 1.0}}}});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) REQUIRE_THAT(mid[i][j], WithinAbs(i == j ? 1.0 : 0.0, 1e-14));

    // Perfect horizontal polarizer diag(1, 0).
    const MuellerMatrix mp = mueller_from_jones({Mat2{{{1.0, 0.0}, {0.0, 0.0}}}});
    const double expect_p[4][4] = {
        {1, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) REQUIRE_THAT(mp[i][j], WithinAbs(expect_p[i][j], 1e-14));

    // Quarter-wave element diag(1, i): rotates the (s1, s2) block, keeps s3.
    const MuellerMatrix mq = mueller_from_jones({Mat2{{{cplx(1, 0), cplx(0, 0)},
                                                       {cplx(0, 0), cplx(0, 1)}}}});
    const double expect_q[4][4] = {
        {1, 0, 0, 0}, {0, 0, -1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) REQUIRE_THAT(mq[i][j], WithinAbs(expect_q[i][j], 1e-14));

    REQUIRE_THROWS_AS(mueller_from_jones({Mat2{}}), std::invalid_argument);
}

TEST_CASE("Jones media are exactly non-depolarizing") {
    std::mt19937_64 gen(8);
    for (int it = 0; it < 500; ++it) {
        const Mat2 t = oracle::random_jones(gen);
        const MuellerMatrix m = mueller_from_jones({t});

        // Independent trace-evaluation oracle for the matrix itself.
        const Mat4d raw = oracle::jones_mueller_oracle(t);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                REQUIRE_THAT(m[i][j], WithinAbs(raw[i][j] / raw[0][0], 1e-12));

        const EigenSpectrum sp = eigenspectrum(h_from_mueller(m));
        REQUIRE_THAT(sp[0], WithinAbs(1.0, 1e-9));
        REQUIRE_THAT(sp[1] + sp[2] + sp[3], WithinAbs(0.0, 1e-9));
        REQUIRE_THAT(depolarization_index_from_m(m), WithinAbs(1.0, 1e-9));
        REQUIRE_THAT(polarization_entropy(sp), WithinAbs(0.0, 1e-9));
    }
}

TEST_CASE("Jacobi eigenvalues match the quartic characteristic polynomial") {
    std::mt19937_64 gen(271828);
    for (int it = 0; it < 1000; ++it) {
        const Mat4 h = oracle::random_hermitian_unit_trace(gen);
        const auto jac = jacobi_eigenvalues(h);
        REQUIRE(oracle::spectra_match(jac, oracle::quartic_eigen_roots(h), 1e-8));
        // Trace preservation.
        REQUIRE_THAT(jac[0] + jac[1] + jac[2] + jac[3], WithinAbs(1.0, 1e-10));
    }
}
