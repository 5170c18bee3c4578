#pragma once

#include "edgegreen/parametrix.hpp"

#include <array>
#include <optional>
#include <vector>

namespace edgegreen {

struct UnknownGreenId : std::runtime_error {
    explicit UnknownGreenId(const std::string& what) : std::runtime_error(what) {}
};

enum class GreenId { GA, G02, G03, G12, G13, G22, G23 };

std::string green_id_name(GreenId id);
std::optional<GreenId> parse_green_id(const std::string& name);

/// The Sigma_alpha pairing multiplier attached to a Green term: either none,
/// or one of the three covariable parts whose sum is C1~ = C0 - 4it tau + iC1.
enum class AlphaTag { Plain, XC0, X4it, XC1 };

/// Mellin functional a Green term feeds, in the canonical bookkeeping of the
/// angular-momentum-resolved displays (the r-powers of the multipliers are
/// carried inside the functional; points follow M(r^k v)(w) = M(v)(w+k)).
///   OpA : M((sigma'sigma - 1) op(a) sigma~ u)(p)
///   BC0 : M(r^2 C0/2t^2 sigma~ u)(p)        BC1 : M(i r^2 C1/2t^2 ...)(p)
///   BC2 : M(r^4 C2/2t^2 ...)(p)
///   Oa1 : M(op(r a1) ...)(p)                Oa2 : M(op(r^2 a2) ...)(p)
///   Os3 : M(op(r^3 s3) ...)(p)
/// Raw bases produced by the assembly and rewritten before comparison:
///   OZ1 = Oa1 - BC1,  Oa2W = Oa2 - BC2,  Os1 = Oa1 + Oa2 + Os3,
///   Os2 = Oa2 + Os3.
enum class BaseFn { OpA, BC0, BC1, BC2, Oa1, Oa2, Os3, OZ1, Oa2W, Os1, Os2 };

std::string base_fn_name(BaseFn b);
int base_fn_rpower(BaseFn b);

struct GreenAtom {
    AlphaTag alpha = AlphaTag::Plain;
    BaseFn base = BaseFn::OpA;
    int point = 0;

    friend bool operator<(const GreenAtom& a, const GreenAtom& b) {
        return std::tie(a.alpha, a.base, a.point) < std::tie(b.alpha, b.base, b.point);
    }
    friend bool operator==(const GreenAtom& a, const GreenAtom& b) {
        return a.alpha == b.alpha && a.base == b.base && a.point == b.point;
    }
    std::string str() const;
};

/// Polynomial in r of degree <= 2 with exact scalar coefficients.
class PolyR {
public:
    PolyR() = default;
    explicit PolyR(Coefficient c0) { c_[0] = std::move(c0); }

    const Coefficient& coeff(int k) const { return c_.at(k); }
    void add(int k, const Coefficient& c) { c_.at(k) += c; }
    bool is_zero() const;

    friend PolyR operator+(PolyR a, const PolyR& b);
    friend PolyR operator-(PolyR a, const PolyR& b);
    friend PolyR operator*(const Coefficient& c, PolyR p);
    friend bool operator==(const PolyR& a, const PolyR& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyR& a, const PolyR& b) { return !(a == b); }

    PolyR substitute(const std::map<Gen, Coefficient>& repl) const;
    std::string str() const;

private:
    std::array<Coefficient, 3> c_{};
};

using AtomMap = std::map<GreenAtom, PolyR>;

// ---------------------------------------------------------------------------

/// One additive contribution to a Green operator symbol.
struct GreenTerm {
    GreenId id = GreenId::GA;
    int sector = 0;
    int rpow = 0;
    Coefficient scalar; // in units of 2 t^2 sigma' omega'
    GreenAtom atom;
};

/// One recomputed residue of a shifted parametrix symbol.  `value` is the
/// scalar part; for the covariable-carrying families the documented factor
/// (r^2 d^a C0 etc.) is recorded separately.
struct ResidueRecord {
    GreenId id = GreenId::GA;
    std::string symbol;
    int shift = 0;
    Rational pole;
    int sector = 0;
    Coefficient value;
    std::string cov_factor;
};

/// Residue of the shifted core of a named parametrix symbol at one pole
/// (zero when the point is not a pole; throws on a multiple pole).
Coefficient residue_value(const std::string& symbol, int shift, const Rational& pole,
                          int sector);

/// Every residue the assembly consumes, recomputed per sector <= l_max.
std::vector<ResidueRecord> residue_table(int l_max);

std::vector<GreenTerm> assemble_atype(int l_max);
std::vector<GreenTerm> assemble_btype(GreenId id, int l_max);
std::vector<GreenTerm> assemble_all(int l_max);

/// Terms of one sector, in the canonical functional bookkeeping.
std::vector<GreenTerm> project_sector(const std::vector<GreenTerm>& terms, int l);

/// Canonical atom map of one sector: raw bases rewritten into
/// {OpA, BC0, BC1, BC2, Oa1, Oa2, Os3}.
AtomMap derived_atom_map(int sector);

// ---------------------------------------------------------------------------

/// Printed expansion data (the golden side of the comparison).
struct PrintedTheorem1 {
    // multiplier[sector][qindex-1] as polynomials in r over (t, Z1, Z2)
    std::map<std::pair<int, int>, PolyR> multipliers;
    // inner coefficients of the Q functionals: per Q, per evaluation point
    // group, the scalar in front of the group (1, -tZ1, ...)
    std::map<std::pair<int, int>, std::map<int, Coefficient>> q_groups;
};

struct Theorem1Row {
    int sector = 0;
    int qindex = 1;
    PolyR derived;
    PolyR printed;
    PolyR difference;
};

struct Theorem1Table {
    Edge edge = Edge::Generic;
    std::vector<Theorem1Row> rows;
    /// Leftover of (derived atom map) - (printed atom map); empty iff the
    /// derivation reproduces the printed expansion atom by atom.
    AtomMap residual;
    bool exact() const;
};

/// Atom expansion of Q_{l,n} (canonical bases, unit inner coefficients
/// weighted by the printed group factors).
AtomMap q_atoms(int l, int n, const PrintedTheorem1& printed);

Theorem1Table theorem1_table(Edge edge, const PrintedTheorem1& printed);

// ---------------------------------------------------------------------------

/// h_k^(l): the boundary symbols of the simplified Q forms, derived from the
/// Hamiltonian symbols (not transcribed):
///   h1 = -a0 + [C0 part],  h2 = -(a0 + r a1) + [C0, C1 parts],
///   h3 = -(a0 + r a1 + r^2 a2) + [C2 part],   sector-restricted.
OpSymbol build_h(int k, int l);

struct QSimplifiedPiece {
    bool eigen_part = false; // the sigma'sigma op(a) piece (vanishes on
                             // eigenfunctions); otherwise an op(h) piece
    bool contracted = false; // wrapped in the C1~ derivative contraction
    int point = 0;
    Coefficient coeff;  // group factor
    OpSymbol h;         // boundary symbol (empty for eigen parts)
};

struct QDescriptor {
    int l = 0;
    int n = 1;
    std::vector<std::pair<Coefficient, GreenAtom>> raw;
    std::vector<QSimplifiedPiece> simplified;
};

QDescriptor q_descriptor(int l, int n, const PrintedTheorem1& printed);

} // namespace edgegreen
