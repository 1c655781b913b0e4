#include "qqt/evolve.hpp"

#include "qqt/entanglement.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <future>

using namespace qqt;

TEST_CASE("identity channel leaves the state alone") {
    const DensityMatrix rho = initialState(Acceleration(0.4));
    const DensityMatrix out = applyChannel(
        rho, liftQubit(qubitKraus(ChannelKind::AmplitudeDamping, 0.0)));
    CHECK(frobeniusDistance(out.matrix(), rho.matrix()) <= 1e-15);
}

TEST_CASE("full qubit dephasing kills the coherence block") {
    const NoiseScenario sc = NoiseScenario::qubitLocal(1.0);
    const DensityMatrix out =
        evolveScenario(Acceleration(0.0), ChannelKind::PhaseDamping, sc);
    CHECK(std::abs(out.matrix()(1, 3)) <= 1e-15);
    CHECK(std::abs(out.matrix()(3, 1)) <= 1e-15);
    CHECK(negativity(out) == 0.0);
}

TEST_CASE("qubit amplitude damping at r = 0, worked by hand") {
    // The damped |10> population lands on |00>; the coherence scales by
    // sqrt(1-p1).
    const double p1 = 0.2;
    const DensityMatrix out = evolveScenario(
        Acceleration(0.0), ChannelKind::AmplitudeDamping,
        NoiseScenario::qubitLocal(p1));
    const ComplexMatrix& m = out.matrix();
    CHECK(m(0, 0).real() == doctest::Approx(p1 / 2.0).epsilon(1e-14));
    CHECK(m(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(m(3, 3).real() == doctest::Approx((1.0 - p1) / 2.0).epsilon(1e-14));
    CHECK(m(1, 3).real() ==
          doctest::Approx(std::sqrt(1.0 - p1) / 2.0).epsilon(1e-14));
    CHECK(m(2, 2) == Complex(0.0));
}

TEST_CASE("multilocal phase damping matches the closed form") {
    // Dephasing factors multiply: sqrt(1-p1) from the qubit side and
    // sqrt(1 - 3 p2 + 3 p2^2) from the qutrit side.
    const double r = 0.3, p1 = 0.2, p2 = 0.2;
    const double c2 = std::cos(r) * std::cos(r);
    const double expected =
        0.5 * std::sqrt((1.0 - p1) * (1.0 - 3.0 * p2 + 3.0 * p2 * p2)) * c2;
    const DensityMatrix out =
        evolveScenario(Acceleration(r), ChannelKind::PhaseDamping,
                       NoiseScenario::multiLocal(p1, p2));
    CHECK(negativity(out) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(0.294326524091017).epsilon(1e-14));
}

TEST_CASE("zero noise reduces every scenario to the initial state") {
    const Acceleration acc(0.25);
    const ComplexMatrix ref = initialState(acc).matrix();
    for (ChannelKind kind : kAllChannelKinds)
        for (Topology topo : kAllTopologies) {
            const NoiseScenario sc = NoiseScenario::make(topo, 0.0, 0.0, 0.0);
            const DensityMatrix out = evolveScenario(acc, kind, sc);
            CHECK(frobeniusDistance(out.matrix(), ref) <= 1e-14);
        }
}

TEST_CASE("evolved states stay physical") {
    for (ChannelKind kind : kAllChannelKinds)
        for (Topology topo : kAllTopologies)
            for (double r : {0.0, 0.39, kMaxAcceleration}) {
                NoiseScenario sc{topo, 0, 0, 0};
                switch (topo) {
                    case Topology::QubitLocal:
                        sc = NoiseScenario::qubitLocal(0.2);
                        break;
                    case Topology::QutritLocal:
                        sc = NoiseScenario::qutritLocal(0.2);
                        break;
                    case Topology::MultiLocal:
                        sc = NoiseScenario::multiLocal(0.2, 0.2);
                        break;
                    case Topology::Global:
                        sc = NoiseScenario::global(0.2, 0.2, 0.2);
                        break;
                }
                const DensityMatrix out =
                    evolveScenario(Acceleration(r), kind, sc);
                CHECK(std::abs(out.matrix().trace() - Complex(1.0)) <= 1e-10);
                CHECK(hermiticityResidual(out.matrix()) <= 1e-10);
                CHECK(hermitianEigenvalues(out.matrix())(0) >= -1e-10);
            }
}

TEST_CASE("the two multilocal orders coincide") {
    for (ChannelKind kind : kAllChannelKinds) {
        const DensityMatrix rho = initialState(Acceleration(0.4));
        const KrausChannel onQutrit = liftQutrit(qutritKraus(kind, 0.2));
        const KrausChannel onQubit = liftQubit(qubitKraus(kind, 0.3));
        const DensityMatrix a = applyChannel(applyChannel(rho, onQutrit), onQubit);
        const DensityMatrix b = applyChannel(applyChannel(rho, onQubit), onQutrit);
        CHECK(frobeniusDistance(a.matrix(), b.matrix()) <= 1e-12);
    }
}

TEST_CASE("joint channel equals the two lifted channels composed") {
    std::mt19937 rng(17);
    for (ChannelKind kind : kAllChannelKinds) {
        const DensityMatrix rho =
            DensityMatrix::fromMatrix(testing::randomDensity(rng, 6));
        const double p = 0.35;
        const DensityMatrix viaJoint = applyChannel(
            rho, jointKraus(qubitKraus(kind, p), qutritKraus(kind, p)));
        const DensityMatrix viaLifts =
            applyChannel(applyChannel(rho, liftQubit(qubitKraus(kind, p))),
                         liftQutrit(qutritKraus(kind, p)));
        CHECK(frobeniusDistance(viaJoint.matrix(), viaLifts.matrix()) <=
              1e-10);
    }
}

TEST_CASE("applyChannel rejects a channel of the wrong dimension") {
    const DensityMatrix rho = initialState(Acceleration(0.1));
    CHECK_THROWS_AS(
        applyChannel(rho, qubitKraus(ChannelKind::PhaseDamping, 0.2)),
        std::invalid_argument);
}

TEST_CASE("grid points evaluate independently across threads") {
    const NoiseScenario sc = NoiseScenario::global(0.2, 0.2, 0.2);
    std::vector<double> serial;
    for (double r : {0.0, 0.2, 0.4, 0.6})
        serial.push_back(negativity(
            evolveScenario(Acceleration(r), ChannelKind::Depolarizing, sc)));
    std::vector<std::future<double>> futures;
    for (double r : {0.0, 0.2, 0.4, 0.6})
        futures.push_back(std::async(std::launch::async, [r, &sc] {
            return negativity(evolveScenario(Acceleration(r),
                                             ChannelKind::Depolarizing, sc));
        }));
    for (size_t i = 0; i < futures.size(); ++i)
        CHECK(futures[i].get() == serial[i]);
}
