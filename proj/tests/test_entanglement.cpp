#include "qqt/entanglement.hpp"

#include "qqt/channels.hpp"
#include "qqt/evolve.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qqt;

TEST_CASE("partial transpose index map") {
    SUBCASE("diagonal states are fixed points") {
        const DensityMatrix mixed =
            DensityMatrix::fromMatrix(ComplexMatrix::Identity(6, 6) / 6.0);
        CHECK(frobeniusDistance(partialTransposeQubit(mixed), mixed.matrix()) ==
              0.0);
    }
    SUBCASE("the (1,3) coherence moves to (4,0)") {
        const DensityMatrix rho = initialState(Acceleration(0.0));
        const ComplexMatrix pt = partialTransposeQubit(rho);
        CHECK(pt(4, 0) == Complex(0.5));
        CHECK(pt(0, 4) == Complex(0.5));
        CHECK(pt(1, 3) == Complex(0.0));
        CHECK(pt(3, 1) == Complex(0.0));
        CHECK(pt(1, 1) == Complex(0.5));
        CHECK(pt(3, 3) == Complex(0.5));
    }
}

TEST_CASE("partial transpose is an involution and preserves the trace") {
    std::mt19937 rng(9);
    for (int it = 0; it < 20; ++it) {
        const DensityMatrix rho =
            DensityMatrix::fromMatrix(testing::randomDensity(rng, 6));
        const ComplexMatrix pt = partialTransposeQubit(rho);
        // Re-apply the index map directly.
        ComplexMatrix back(6, 6);
        for (int i = 0; i < 2; ++i)
            for (int a = 0; a < 3; ++a)
                for (int j = 0; j < 2; ++j)
                    for (int b = 0; b < 3; ++b)
                        back(3 * i + a, 3 * j + b) = pt(3 * j + a, 3 * i + b);
        CHECK(frobeniusDistance(back, rho.matrix()) == 0.0);
        CHECK(std::abs(pt.trace() - Complex(1.0)) <= 1e-14);
        CHECK(std::abs(hermitianEigenvalues(pt).sum() - 1.0) <= 1e-10);
    }
}

TEST_CASE("negativity anchors") {
    CHECK(negativity(initialState(Acceleration(0.0))) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(negativity(initialState(Acceleration(std::numbers::pi / 4.0))) ==
          doctest::Approx(0.25).epsilon(1e-12));
    CHECK(negativity(DensityMatrix::fromMatrix(
              ComplexMatrix::Identity(6, 6) / 6.0)) == 0.0);
}

TEST_CASE("negativity of the noiseless state is cos^2(r)/2, decreasing") {
    double previous = 1.0;
    for (int i = 0; i < 50; ++i) {
        const double r = kMaxAcceleration * static_cast<double>(i) / 49.0;
        const double n = negativity(initialState(Acceleration(r)));
        CHECK(std::abs(n - 0.5 * std::cos(r) * std::cos(r)) <= 1e-10);
        CHECK(n < previous + 1e-15);
        if (i > 0) CHECK(n < previous);
        previous = n;
    }
}

TEST_CASE("negativity is invariant under qutrit-side unitaries") {
    const ComplexMatrix u = kron(ComplexMatrix::Identity(2, 2), qutritShift());
    for (double r : {0.0, 0.3, 0.7}) {
        const DensityMatrix rho = evolveScenario(
            Acceleration(r), ChannelKind::AmplitudeDamping,
            NoiseScenario::multiLocal(0.2, 0.3));
        const DensityMatrix rotated = DensityMatrix::fromMatrix(
            (u * rho.matrix() * u.adjoint()).eval());
        CHECK(std::abs(negativity(rotated) - negativity(rho)) <= 1e-10);
    }
}
