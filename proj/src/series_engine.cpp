#include "edgegreen/series_engine.hpp"

#include <cstdlib>

namespace edgegreen {

namespace {

Rational factorial(int n) {
    Rational f(1);
    for (int k = 2; k <= n; ++k) f *= Rational(k);
    return f;
}

} // namespace

RSeries series_sin_over_r(int order) {
    RSeries s(order, 0);
    for (int k = 0; k <= order; k += 2) {
        Rational c = factorial(k + 1).inverse();
        if ((k / 2) % 2 == 1) c = -c;
        s.set_coeff(k, Coefficient(c));
    }
    return s;
}

RSeries series_cos(int order) {
    RSeries s(order, 0);
    for (int k = 0; k <= order; k += 2) {
        Rational c = factorial(k).inverse();
        if ((k / 2) % 2 == 1) c = -c;
        s.set_coeff(k, Coefficient(c));
    }
    return s;
}

RSeries series_sin2r_over_2r(int order) {
    RSeries s(order, 0);
    for (int k = 0; k <= order; k += 2) {
        // sin(2r)/(2r) = sum (-1)^m (2r)^{2m} / (2m+1)!
        Rational c = factorial(k + 1).inverse();
        for (int j = 0; j < k; ++j) c *= Rational(2);
        if ((k / 2) % 2 == 1) c = -c;
        s.set_coeff(k, Coefficient(c));
    }
    return s;
}

RSeries series_r_over_sin(int order) { return series_sin_over_r(order).reciprocal(); }

RSeries series_r_over_cos(int order) {
    return series_cos(order).reciprocal().truncate(order - 1).mul_power(1);
}

RSeries series_r2_over_sin2(int order) {
    RSeries f = series_r_over_sin(order);
    return (f * f).truncate(order);
}

RSeries series_sec2(int order) {
    RSeries f = series_cos(order).reciprocal();
    return (f * f).truncate(order);
}

RSeries expand_h(int order) {
    if (order > configured_max_order())
        throw OrderError("expand_h: order beyond configured maximum");
    // h = 1 + 2 r tan r - 2 r cot r with
    //   r tan r = r^2 * (sin r / r) / cos r,  r cot r = cos r / (sin r / r).
    int n = order + 2;
    RSeries sinr = series_sin_over_r(n);
    RSeries cosr = series_cos(n);
    RSeries rtan = (sinr * cosr.reciprocal()).truncate(order - 2 >= 0 ? order - 2 : 0)
                       .mul_power(2)
                       .truncate(order);
    RSeries rcot = (cosr * sinr.reciprocal()).truncate(order);
    RSeries one = RSeries::constant(Coefficient(1), order);
    Coefficient two(2);
    return one + two * rtan - two * rcot;
}

RSeries expand_potential(PotentialEdge edge, int order, const MoleculeParams& mol) {
    if (edge == PotentialEdge::Molecule) {
        if (order > 1) throw OrderError("expand_potential: molecule expansion is given to order 1");
        RSeries s(order, 0);
        s.set_coeff(0, -mol.Za);
        if (order >= 1) {
            Coefficient K = Coefficient::gen(Gen::K);
            Coefficient tR = Coefficient::gen(Gen::TR);
            s.set_coeff(1, -mol.Zb + mol.Za * mol.Zb * tR - mol.Zb * tR - mol.Za * K + K);
        }
        return s;
    }
    if (order > 6) throw OrderError("expand_potential: order beyond supported truncation");
    int n = order + 2;
    Coefficient Z = Coefficient::gen(Gen::Z);
    Coefficient a = Coefficient::gen(Gen::A);
    RSeries r_over_sin = series_r_over_sin(n).truncate(order);
    RSeries r_over_cos = series_r_over_cos(n).truncate(order);
    RSeries attraction = -Z * r_over_sin - Z * r_over_cos;
    if (edge == PotentialEdge::ElectronNucleusNoEE) return attraction;
    // sin(2r) * a as a series with zero constant term.
    RSeries sin2ra = a * series_sin2r_over_2r(n - 1).mul_power(1);
    Coefficient two(2);
    sin2ra = two * sin2ra;
    RSeries one = RSeries::constant(Coefficient(1), n);
    if (edge == PotentialEdge::ElectronNucleus) {
        RSeries ee = (one - sin2ra).inv_sqrt().truncate(order - 1 >= 0 ? order - 1 : 0)
                         .mul_power(1)
                         .truncate(order);
        return attraction + ee;
    }
    // Electron-electron edge: v = -sqrt2 Z r (f_+ + f_-) + (1/sqrt2) r/sin r
    Coefficient sqrt2 = Coefficient::sqrt2();
    RSeries fplus = (one + sin2ra).inv_sqrt();
    RSeries fminus = (one - sin2ra).inv_sqrt();
    RSeries sum = (fplus + fminus).truncate(order - 1 >= 0 ? order - 1 : 0).mul_power(1).truncate(order);
    Coefficient half(Rational(1, 2));
    return -(sqrt2 * Z) * sum + (half * sqrt2) * r_over_sin;
}

int configured_max_order() {
    if (const char* env = std::getenv("EDGEGREEN_MAX_ORDER")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 8;
}

} // namespace edgegreen
