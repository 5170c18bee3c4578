#pragma once

#include "edgegreen/rseries.hpp"

namespace edgegreen {

/// Elementary series about r = 0, exact through `order`.
RSeries series_sin_over_r(int order); // sin(r)/r
RSeries series_cos(int order);
RSeries series_sin2r_over_2r(int order); // sin(2r)/(2r)

/// r/sin r, r/cos r (the latter starts at r^1), r^2/sin^2 r, 1/cos^2 r.
RSeries series_r_over_sin(int order);
RSeries series_r_over_cos(int order);
RSeries series_r2_over_sin2(int order);
RSeries series_sec2(int order);

/// h(r) = 1 + 2 r tan r - 2 r cot r, computed from the defining expression.
RSeries expand_h(int order);

enum class PotentialEdge { ElectronNucleus, ElectronElectron, ElectronNucleusNoEE, Molecule };

struct MoleculeParams {
    Coefficient Za = Coefficient::gen(Gen::ZA);
    Coefficient Zb = Coefficient::gen(Gen::ZB);
};

/// Taylor rows of the edge potentials.  For Molecule only orders 0 and 1 are
/// defined (the square-root distance factor stays symbolic as K, t/R as tR);
/// the r^0 and r^1 entries expose Z1 and Z2 + tE.
RSeries expand_potential(PotentialEdge edge, int order,
                         const MoleculeParams& mol = MoleculeParams());

/// Truncation cap honoured by the CLI; EDGEGREEN_MAX_ORDER overrides 8.
int configured_max_order();

} // namespace edgegreen
