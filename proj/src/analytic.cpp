#include "qqt/analytic.hpp"

#include <cmath>

namespace qqt {

namespace {

// Radicands are clamped at zero when within roundoff of it; anything beyond
// that is a genuine domain violation of the printed expression and is
// recorded on the result instead of thrown.
double guardedSqrt(double x, bool& domainError) {
    if (x < 0.0) {
        if (x < kNegativeEigThreshold) domainError = true;
        x = 0.0;
    }
    return std::sqrt(x);
}

AnalyticEigenvalues adQubit(double r, double p1, double, double) {
    const double c2 = std::cos(r) * std::cos(r);
    const double s2 = std::sin(r) * std::sin(r);
    return {{0.5 * c2,
             0.5 * c2,
             -0.5 * (-1.0 + p1) * c2,
             0.5 * (-1.0 + p1) * c2,
             -0.5 * (-1.0 + p1) * s2,
             0.5 * (-1.0 + p1) * s2},
            false};
}

AnalyticEigenvalues adQutrit(double r, double, double p2, double) {
    const double c2 = std::cos(r) * std::cos(r);
    const double s2 = std::sin(r) * std::sin(r);
    const double c4 = c2 * c2;
    bool err = false;
    const double rad = guardedSqrt(p2 * p2 - 4.0 * (-1.0 + p2) * c4, err);
    return {{-0.5 * (-1.0 + p2) * c2,
             0.25 * (p2 - rad),
             0.25 * (p2 + rad),
             -0.5 * (-1.0 + p2) * s2,
             -0.5 * (-1.0 + p2) * s2,
             0.5 * (c2 + p2 * s2)},
            err};
}

AnalyticEigenvalues adMultiLocal(double r, double p1, double p2, double) {
    const double c2 = std::cos(r) * std::cos(r);
    const double s2 = std::sin(r) * std::sin(r);
    const double c4 = c2 * c2;
    const double cos2r = std::cos(2.0 * r);
    bool err = false;
    const double base =
        p1 + 2.0 * p2 + p1 * p2 + p1 * cos2r - p1 * p2 * cos2r;
    const double inner = (p1 + p2) * c2 + (1.0 + p1) * p2 * s2;
    const double rad =
        guardedSqrt(4.0 * (-1.0 + p1) * (-1.0 + p2) * c4 + inner * inner, err);
    return {{-0.5 * (-1.0 + p2) * c2,
             0.5 * (-1.0 + p1) * (-1.0 + p2) * s2,
             -0.5 * (1.0 + p1) * (-1.0 + p2) * s2,
             -0.5 * (-1.0 + p1) * (c2 + p2 * s2),
             0.125 * (base - 2.0 * rad),
             0.125 * (base + 2.0 * rad)},
            err};
}

// The lambda_5/6 bracket carries a stray doubled "+" in front of the
// p2 cos^2 r term; it is read as a single plus (the only sensible parse).
AnalyticEigenvalues adGlobal(double r, double p1, double p2, double p) {
    const double c2 = std::cos(r) * std::cos(r);
    const double s2 = std::sin(r) * std::sin(r);
    const double c4 = c2 * c2;
    const double cos2r = std::cos(2.0 * r);
    bool err = false;
    const double sum =
        p * c2 + 2.0 * p1 * c2 - p1 * p1 * c2 + p2 * c2 - p * p2 * c2 +
        p * s2 + 2.0 * p * p1 * s2 - p * p1 * p1 * s2 + p2 * s2 -
        p * p2 * s2 + 2.0 * p1 * p2 * s2 - 2.0 * p * p1 * p2 * s2 -
        p1 * p1 * p2 * s2 + p * p1 * p1 * p2 * s2;
    const double inner =
        (-2.0 * p1 + p1 * p1 + p * (-1.0 + p2) - p2) * c2 -
        (-1.0 - 2.0 * p1 + p1 * p1) * (p * (-1.0 + p2) - p2) * s2;
    const double rad = guardedSqrt(
        4.0 * (-1.0 + p) * (-1.0 + p1) * (-1.0 + p1) * (-1.0 + p2) * c4 +
            inner * inner,
        err);
    return {{0.5 * (-1.0 + p) * (-1.0 + p2) * c2,
             0.25 * (-1.0 + p1) * (-1.0 + p1) *
                 (1.0 + p + p2 - p * p2 + (-1.0 + p) * (-1.0 + p2) * cos2r),
             0.5 * (-1.0 + p) * (-1.0 + p1) * (-1.0 + p1) * (-1.0 + p2) * s2,
             -0.5 * (-1.0 + p) * (-1.0 - 2.0 * p1 + p1 * p1) * (-1.0 + p2) *
                 s2,
             0.25 * (sum - rad),
             0.25 * (sum + rad)},
            err};
}

AnalyticEigenvalues depQubit(double r, double p1, double, double) {
    const double c2 = std::cos(r) * std::cos(r);
    const double s2 = std::sin(r) * std::sin(r);
    return {{0.5 * s2,
             0.5 * s2,
             0.25 * (-2.0 * c2 + 3.0 * p1 * c2),
             -0.25 * (-2.0 + p1) * c2,
             -0.25 * (-2.0 + p1) * c2,
             -0.25 * (-2.0 + p1) * c2},
            false};
}

AnalyticEigenvalues depQutrit(double r, double, double p2, double) {
    const double cos2r = std::cos(2.0 * r);
    const double a =
        (8.0 - 3.0 * p2 + 8.0 * cos2r - 9.0 * p2 * cos2r) / 32.0;
    const double b =
        (-8.0 + 15.0 * p2 - 8.0 * cos2r + 9.0 * p2 * cos2r) / 32.0;
    const double c = (8.0 - 3.0 * p2 + (-8.0 + 9.0 * p2) * cos2r) / 32.0;
    return {{a, a, a, b, c, c}, false};
}

// The radical is kept in its printed 2*sqrt(2)*sqrt(2*(...)^2*cos^4 r) form
// rather than simplified.
AnalyticEigenvalues depMultiLocal(double r, double p1, double p2, double) {
    const double c2 = std::cos(r) * std::cos(r);
    const double s2 = std::sin(r) * std::sin(r);
    const double c4 = c2 * c2;
    const double cos2r = std::cos(2.0 * r);
    bool err = false;
    const double a = (8.0 - 3.0 * p2 + (-8.0 + 9.0 * p2) * cos2r) / 32.0;
    const double b =
        ((16.0 - 12.0 * p2 + p1 * (-8.0 + 9.0 * p2)) * c2 + 6.0 * p2 * s2) /
        32.0;
    const double rad =
        2.0 * std::sqrt(2.0) *
        guardedSqrt(2.0 * (-1.0 + p1) * (-1.0 + p1) * (8.0 - 9.0 * p2) *
                        (8.0 - 9.0 * p2) * c4,
                    err);
    const double base = 8.0 * p1 + 12.0 * p2 - 9.0 * p1 * p2;
    const double tail = 8.0 * p1 * cos2r - 9.0 * p1 * p2 * cos2r;
    return {{a, a, b, b, (base - rad + tail) / 64.0,
             (base + rad + tail) / 64.0},
            err};
}

AnalyticEigenvalues depGlobal(double r, double p1, double p2, double p) {
    const double c2 = std::cos(r) * std::cos(r);
    const double s2 = std::sin(r) * std::sin(r);
    const double c4 = c2 * c2;
    const double cos2r = std::cos(2.0 * r);
    bool err = false;
    const double base =
        96.0 * p + 128.0 * p1 - 144.0 * p * p1 - 64.0 * p1 * p1 +
        72.0 * p * p1 * p1 + 96.0 * p2 - 108.0 * p * p2 - 144.0 * p1 * p2 +
        162.0 * p * p1 * p2 + 72.0 * p1 * p1 * p2 - 81.0 * p * p1 * p1 * p2;
    const double rad =
        2.0 * std::sqrt(2.0) *
        guardedSqrt(2.0 * (8.0 - 9.0 * p) * (8.0 - 9.0 * p) * (-1.0 + p1) *
                        (-1.0 + p1) * (-1.0 + p1) * (-1.0 + p1) *
                        (8.0 - 9.0 * p2) * (8.0 - 9.0 * p2) * c4,
                    err);
    const double tail =
        (128.0 * p1 - 144.0 * p * p1 - 64.0 * p1 * p1 + 72.0 * p * p1 * p1 -
         144.0 * p1 * p2 + 162.0 * p * p1 * p2 + 72.0 * p1 * p1 * p2 -
         81.0 * p * p1 * p1 * p2) *
        cos2r;
    const double pair34 =
        (64.0 - 24.0 * p2 + 3.0 * p * (-8.0 + 9.0 * p2) -
         (-8.0 + 9.0 * p) * (-8.0 + 9.0 * p2) * cos2r) /
        256.0;
    const double pair56 =
        ((3.0 * p * (4.0 - 6.0 * p1 + 3.0 * p1 * p1) * (-8.0 + 9.0 * p2) -
          8.0 * (4.0 * (-4.0 + 3.0 * p2) - 2.0 * p1 * (-8.0 + 9.0 * p2) +
                 p1 * p1 * (-8.0 + 9.0 * p2))) *
             c2 +
         6.0 * (p * (8.0 - 9.0 * p2) + 8.0 * p2) * s2) /
        256.0;
    return {{(base - rad + tail) / 512.0, (base + rad + tail) / 512.0, pair34,
             pair34, pair56, pair56},
            err};
}

AnalyticEigenvalues pdQubit(double r, double p1, double, double) {
    const double c2 = std::cos(r) * std::cos(r);
    const double s2 = std::sin(r) * std::sin(r);
    const double c4 = c2 * c2;
    bool err = false;
    const double rad = guardedSqrt(c4 - p1 * c4, err);
    return {{0.5 * c2, 0.5 * c2, -0.5 * rad, 0.5 * rad, 0.5 * s2, 0.5 * s2},
            err};
}

AnalyticEigenvalues pdQutrit(double r, double, double p2, double) {
    const double c2 = std::cos(r) * std::cos(r);
    const double s2 = std::sin(r) * std::sin(r);
    const double c4 = c2 * c2;
    bool err = false;
    const double rad =
        guardedSqrt((1.0 - 3.0 * p2 + 3.0 * p2 * p2) * c4, err);
    return {{0.5 * c2, 0.5 * c2, -0.5 * rad, 0.5 * rad, 0.5 * s2, 0.5 * s2},
            err};
}

AnalyticEigenvalues pdMultiLocal(double r, double p1, double p2, double) {
    const double c2 = std::cos(r) * std::cos(r);
    const double s2 = std::sin(r) * std::sin(r);
    const double c4 = c2 * c2;
    bool err = false;
    const double rad = guardedSqrt(
        (-1.0 + p1) * (-1.0 + 3.0 * p2 - 3.0 * p2 * p2) * c4, err);
    return {{0.5 * c2, 0.5 * c2, -0.5 * rad, 0.5 * rad, 0.5 * s2, 0.5 * s2},
            err};
}

AnalyticEigenvalues pdGlobal(double r, double p1, double p2, double p) {
    const double c2 = std::cos(r) * std::cos(r);
    const double s2 = std::sin(r) * std::sin(r);
    const double c4 = c2 * c2;
    bool err = false;
    const double rad =
        guardedSqrt((1.0 - 3.0 * p + 3.0 * p * p) * (-1.0 + p1) *
                        (-1.0 + p1) * (1.0 - 3.0 * p2 + 3.0 * p2 * p2) * c4,
                    err);
    return {{0.5 * c2, 0.5 * c2, -0.5 * rad, 0.5 * rad, 0.5 * s2, 0.5 * s2},
            err};
}

}  // namespace

const std::array<EigenFormulaSet, 12>& formulaCatalog() {
    static const std::array<EigenFormulaSet, 12> catalog = {{
        {ChannelKind::AmplitudeDamping, Topology::QubitLocal, "ad-qubit", 4,
         adQubit},
        {ChannelKind::AmplitudeDamping, Topology::QutritLocal, "ad-qutrit", 2,
         adQutrit},
        {ChannelKind::AmplitudeDamping, Topology::MultiLocal, "ad-multilocal",
         5, adMultiLocal},
        {ChannelKind::AmplitudeDamping, Topology::Global, "ad-global", 5,
         adGlobal},
        {ChannelKind::Depolarizing, Topology::QubitLocal, "dep-qubit", 3,
         depQubit},
        {ChannelKind::Depolarizing, Topology::QutritLocal, "dep-qutrit", 4,
         depQutrit},
        {ChannelKind::Depolarizing, Topology::MultiLocal, "dep-multilocal", 5,
         depMultiLocal},
        {ChannelKind::Depolarizing, Topology::Global, "dep-global", 1,
         depGlobal},
        {ChannelKind::PhaseDamping, Topology::QubitLocal, "pd-qubit", 3,
         pdQubit},
        {ChannelKind::PhaseDamping, Topology::QutritLocal, "pd-qutrit", 3,
         pdQutrit},
        {ChannelKind::PhaseDamping, Topology::MultiLocal, "pd-multilocal", 3,
         pdMultiLocal},
        {ChannelKind::PhaseDamping, Topology::Global, "pd-global", 3,
         pdGlobal},
    }};
    return catalog;
}

const EigenFormulaSet& formulaFor(ChannelKind kind, Topology topology) {
    for (const auto& set : formulaCatalog())
        if (set.kind == kind && set.topology == topology) return set;
    throw std::logic_error("formulaFor: no such family");  // unreachable
}

namespace {

void requireInRange(double r, double p1, double p2, double p) {
    const auto unit = [](double x) {
        return std::isfinite(x) && x >= 0.0 && x <= 1.0;
    };
    if (!std::isfinite(r) || r < 0.0 || r > 0.7853981633974483 + 1e-15)
        throw std::invalid_argument("analytic: r must lie in [0, pi/4]");
    if (!unit(p1) || !unit(p2) || !unit(p))
        throw std::invalid_argument(
            "analytic: noise parameters must lie in [0, 1]");
}

}  // namespace

AnalyticEigenvalues analyticEigenvalues(ChannelKind kind, Topology topology,
                                        double r, double p1, double p2,
                                        double p) {
    requireInRange(r, p1, p2, p);
    return formulaFor(kind, topology).eval(r, p1, p2, p);
}

AnalyticNegativity analyticNegativity(ChannelKind kind, Topology topology,
                                      double r, double p1, double p2,
                                      double p) {
    const AnalyticEigenvalues eigs =
        analyticEigenvalues(kind, topology, r, p1, p2, p);
    AnalyticNegativity out;
    out.domainError = eigs.domainError;
    for (int k = 0; k < 6; ++k) {
        if (eigs.values[static_cast<size_t>(k)] < kNegativeEigThreshold) {
            out.value += -eigs.values[static_cast<size_t>(k)];
            out.negativeIndices.push_back(k + 1);
        }
    }
    return out;
}

}  // namespace qqt
