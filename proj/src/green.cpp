#include "edgegreen/green.hpp"

#include <sstream>

namespace edgegreen {

namespace {

Coefficient t_pow(int k) { return Coefficient(Rational(1), mono_gen(Gen::T, k)); }

} // namespace

std::string green_id_name(GreenId id) {
    switch (id) {
    case GreenId::GA: return "ga";
    case GreenId::G02: return "g02";
    case GreenId::G03: return "g03";
    case GreenId::G12: return "g12";
    case GreenId::G13: return "g13";
    case GreenId::G22: return "g22";
    case GreenId::G23: return "g23";
    }
    throw std::logic_error("green_id_name");
}

std::optional<GreenId> parse_green_id(const std::string& name) {
    for (GreenId id : {GreenId::GA, GreenId::G02, GreenId::G03, GreenId::G12, GreenId::G13,
                       GreenId::G22, GreenId::G23})
        if (green_id_name(id) == name) return id;
    return std::nullopt;
}

std::string base_fn_name(BaseFn b) {
    switch (b) {
    case BaseFn::OpA: return "(s's-1)op(a)";
    case BaseFn::BC0: return "r^2*C0/2t^2";
    case BaseFn::BC1: return "i*r^2*C1/2t^2";
    case BaseFn::BC2: return "r^4*C2/2t^2";
    case BaseFn::Oa1: return "op(r*a1)";
    case BaseFn::Oa2: return "op(r^2*a2)";
    case BaseFn::Os3: return "op(r^3*s3)";
    case BaseFn::OZ1: return "r*Z1/t";
    case BaseFn::Oa2W: return "op(r^2*a2-w-part)";
    case BaseFn::Os1: return "op(r*s1)";
    case BaseFn::Os2: return "op(r^2*s2)";
    }
    throw std::logic_error("base_fn_name");
}

int base_fn_rpower(BaseFn b) {
    switch (b) {
    case BaseFn::OpA: return 0;
    case BaseFn::BC0:
    case BaseFn::BC1:
    case BaseFn::Oa2:
    case BaseFn::Oa2W:
    case BaseFn::Os2: return 2;
    case BaseFn::BC2: return 4;
    case BaseFn::Oa1:
    case BaseFn::OZ1:
    case BaseFn::Os1: return 1;
    case BaseFn::Os3: return 3;
    }
    throw std::logic_error("base_fn_rpower");
}

std::string GreenAtom::str() const {
    std::string s;
    switch (alpha) {
    case AlphaTag::Plain: break;
    case AlphaTag::XC0: s += "S_a d^a(C0) o "; break;
    case AlphaTag::X4it: s += "S_a d^a(-4it*tau) o "; break;
    case AlphaTag::XC1: s += "S_a d^a(i*C1) o "; break;
    }
    s += "M(" + base_fn_name(base) + " s~u)(" + std::to_string(point) + ")";
    return s;
}

bool PolyR::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

PolyR operator+(PolyR a, const PolyR& b) {
    for (int k = 0; k < 3; ++k) a.c_[k] += b.c_[k];
    return a;
}

PolyR operator-(PolyR a, const PolyR& b) {
    for (int k = 0; k < 3; ++k) a.c_[k] -= b.c_[k];
    return a;
}

PolyR operator*(const Coefficient& c, PolyR p) {
    for (int k = 0; k < 3; ++k) p.c_[k] *= c;
    return p;
}

PolyR PolyR::substitute(const std::map<Gen, Coefficient>& repl) const {
    PolyR r;
    for (int k = 0; k < 3; ++k) r.c_[k] = c_[k].substitute(repl);
    return r;
}

std::string PolyR::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 3; ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[k].str() << ")";
        if (k == 1) os << "*r";
        if (k == 2) os << "*r^2";
    }
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// Assembly data: the structural content of the Green symbol displays.
// ---------------------------------------------------------------------------

namespace {

struct Family {
    const char* symbol;
    int level, n, j;
    AlphaTag x;
    int jx; // covariable degree of the X factor
};

const std::vector<Family>& family_list(int level) {
    static const std::vector<Family> L0 = {{"d0_00", 0, 0, 0, AlphaTag::Plain, 0},
                                           {"d0_02", 0, 0, 2, AlphaTag::XC0, 2},
                                           {"d0_11", 0, 1, 1, AlphaTag::X4it, 1},
                                           {"d0_20", 0, 2, 0, AlphaTag::Plain, 0}};
    static const std::vector<Family> L1 = {{"d1_00", 1, 0, 0, AlphaTag::Plain, 0},
                                           {"d1_01", 1, 0, 1, AlphaTag::XC1, 1},
                                           {"d1_10", 1, 1, 0, AlphaTag::Plain, 0}};
    static const std::vector<Family> L2 = {{"d2_00", 2, 0, 0, AlphaTag::Plain, 0}};
    switch (level) {
    case 0: return L0;
    case 1: return L1;
    case 2: return L2;
    }
    throw std::logic_error("family_list");
}

struct Block {
    GreenId id;
    int level_list;
    int rho_eff; // combined flatness offset of the block and its multiplier
    int shift;   // T^m applied to the symbols
    bool atype;  // a-type picks the poles <= 0; b-type a contour strip
    int strip_lo = 0;
    int strip_hi = 0;
    BaseFn base = BaseFn::OpA;
};

const std::vector<Block>& block_table() {
    static const std::vector<Block> blocks = {
        {GreenId::GA, 0, 0, 2, true, 0, 0, BaseFn::OpA},
        {GreenId::GA, 1, 1, 2, true, 0, 0, BaseFn::OpA},
        {GreenId::GA, 2, 2, 2, true, 0, 0, BaseFn::OpA},
        {GreenId::G02, 0, 2, 0, false, 1, 2, BaseFn::BC0},
        {GreenId::G03, 0, 3, -1, false, 1, 3, BaseFn::Os3},
        {GreenId::G12, 1, 3, 0, false, 1, 2, BaseFn::BC0},
        {GreenId::G12, 0, 1, 1, false, 1, 1, BaseFn::OZ1},
        {GreenId::G12, 0, 2, 0, false, 1, 2, BaseFn::BC1},
        {GreenId::G13, 1, 3, 0, false, 1, 2, BaseFn::Os2},
        {GreenId::G22, 0, 2, 0, false, 1, 2, BaseFn::Oa2W},
        {GreenId::G22, 0, 4, -2, false, 1, 4, BaseFn::BC2},
        {GreenId::G22, 1, 2, 1, false, 1, 1, BaseFn::OZ1},
        {GreenId::G22, 1, 3, 0, false, 1, 2, BaseFn::BC1},
        {GreenId::G22, 2, 4, 0, false, 1, 2, BaseFn::BC0},
        {GreenId::G23, 2, 3, 1, false, 1, 1, BaseFn::Os1},
    };
    return blocks;
}

std::vector<GreenTerm> assemble_blocks(const std::vector<Block>& blocks, int l_max) {
    std::vector<GreenTerm> out;
    for (const auto& block : blocks) {
        for (const Family& fam : family_list(block.level_list)) {
            for (int l = 0; l <= l_max; ++l) {
                RatFuncW core = compute_d(fam.level, fam.n, fam.j, l).core;
                if (core.is_zero()) continue;
                RatFuncW shifted = shift(core, Rational(block.shift));
                for (const auto& [root, mult] : pole_set(shifted)) {
                    if (!root.is_integer()) continue;
                    long long p = root.num().convert_to<long long>();
                    if (block.atype) {
                        if (p > 0) continue;
                    } else {
                        if (p < block.strip_lo || p > block.strip_hi) continue;
                    }
                    int net = block.rho_eff + fam.n + fam.jx - static_cast<int>(p);
                    if (net < 0 || net > 2) continue;
                    GreenTerm term;
                    term.id = block.id;
                    term.sector = l;
                    term.rpow = net;
                    term.scalar = -residue_at(shifted, root);
                    term.atom.alpha = fam.x;
                    term.atom.base = block.base;
                    term.atom.point = static_cast<int>(p) - base_fn_rpower(block.base);
                    out.push_back(std::move(term));
                }
            }
        }
    }
    return out;
}

const std::map<std::string, std::array<int, 3>>& symbol_index() {
    static const std::map<std::string, std::array<int, 3>> idx = {
        {"d0_00", {0, 0, 0}}, {"d0_02", {0, 0, 2}}, {"d0_11", {0, 1, 1}},
        {"d0_20", {0, 2, 0}}, {"d1_00", {1, 0, 0}}, {"d1_01", {1, 0, 1}},
        {"d1_10", {1, 1, 0}}, {"d2_00", {2, 0, 0}}};
    return idx;
}

std::string family_cov_factor(const std::string& symbol) {
    if (symbol == "d0_02") return "r^2*d^a(C0)";
    if (symbol == "d0_11") return "r*d^a(-4*i*t*tau)";
    if (symbol == "d1_01") return "r*d^a(i*C1)";
    return "";
}

// Base rewrites into the canonical comparison set.
std::vector<std::pair<BaseFn, int>> rewrite_base(BaseFn b, bool expand_sk) {
    switch (b) {
    case BaseFn::OZ1: return {{BaseFn::Oa1, 1}, {BaseFn::BC1, -1}};
    case BaseFn::Oa2W: return {{BaseFn::Oa2, 1}, {BaseFn::BC2, -1}};
    case BaseFn::Os1:
        if (expand_sk) return {{BaseFn::Oa1, 1}, {BaseFn::Oa2, 1}, {BaseFn::Os3, 1}};
        return {{b, 1}};
    case BaseFn::Os2:
        if (expand_sk) return {{BaseFn::Oa2, 1}, {BaseFn::Os3, 1}};
        return {{b, 1}};
    default: return {{b, 1}};
    }
}

} // namespace

Coefficient residue_value(const std::string& symbol, int shift_m, const Rational& pole,
                          int sector) {
    auto it = symbol_index().find(symbol);
    if (it == symbol_index().end()) throw UnknownGreenId("residue_value: unknown symbol " + symbol);
    auto [k, n, j] = it->second;
    RatFuncW core = compute_d(k, n, j, sector).core;
    return residue_at(shift(core, Rational(shift_m)), pole);
}

std::vector<ResidueRecord> residue_table(int l_max) {
    std::vector<ResidueRecord> out;
    for (const auto& block : block_table()) {
        for (const Family& fam : family_list(block.level_list)) {
            for (int l = 0; l <= l_max; ++l) {
                RatFuncW core = compute_d(fam.level, fam.n, fam.j, l).core;
                if (core.is_zero()) continue;
                RatFuncW shifted = shift(core, Rational(block.shift));
                for (const auto& [root, mult] : pole_set(shifted)) {
                    long long p = root.num().convert_to<long long>();
                    if (block.atype) {
                        if (p > 0) continue;
                    } else {
                        if (p < block.strip_lo || p > block.strip_hi) continue;
                    }
                    int net = block.rho_eff + fam.n + fam.jx - static_cast<int>(p);
                    if (net < 0 || net > 2) continue;
                    ResidueRecord rec;
                    rec.id = block.id;
                    rec.symbol = fam.symbol;
                    rec.shift = block.shift;
                    rec.pole = root;
                    rec.sector = l;
                    rec.value = residue_at(shifted, root);
                    rec.cov_factor = family_cov_factor(fam.symbol);
                    out.push_back(std::move(rec));
                }
            }
        }
    }
    return out;
}

std::vector<GreenTerm> assemble_atype(int l_max) {
    std::vector<Block> ga;
    for (const auto& b : block_table())
        if (b.id == GreenId::GA) ga.push_back(b);
    return assemble_blocks(ga, l_max);
}

std::vector<GreenTerm> assemble_btype(GreenId id, int l_max) {
    if (id == GreenId::GA) throw UnknownGreenId("assemble_btype: ga is a-type");
    std::vector<Block> blocks;
    for (const auto& b : block_table())
        if (b.id == id) blocks.push_back(b);
    if (blocks.empty()) throw UnknownGreenId("assemble_btype: unknown id");
    return assemble_blocks(blocks, l_max);
}

std::vector<GreenTerm> assemble_all(int l_max) { return assemble_blocks(block_table(), l_max); }

std::vector<GreenTerm> project_sector(const std::vector<GreenTerm>& terms, int l) {
    std::vector<GreenTerm> out;
    for (const auto& term : terms) {
        if (term.sector != l) continue;
        for (const auto& [base, sign] : rewrite_base(term.atom.base, /*expand_sk=*/false)) {
            GreenTerm t = term;
            t.atom.base = base;
            t.atom.point = term.atom.point + base_fn_rpower(term.atom.base) - base_fn_rpower(base);
            if (sign < 0) t.scalar = -t.scalar;
            out.push_back(std::move(t));
        }
    }
    return out;
}

AtomMap derived_atom_map(int sector) {
    AtomMap map;
    for (const auto& term : assemble_all(sector)) {
        if (term.sector != sector) continue;
        for (const auto& [base, sign] : rewrite_base(term.atom.base, /*expand_sk=*/true)) {
            GreenAtom atom = term.atom;
            atom.base = base;
            atom.point = term.atom.point + base_fn_rpower(term.atom.base) - base_fn_rpower(base);
            Coefficient c = sign < 0 ? -term.scalar : term.scalar;
            map[atom].add(term.rpow, c);
        }
    }
    for (auto it = map.begin(); it != map.end();)
        it = it->second.is_zero() ? map.erase(it) : std::next(it);
    return map;
}

// ---------------------------------------------------------------------------
// Theorem-1 comparison
// ---------------------------------------------------------------------------

namespace {

std::vector<BaseFn> point_basis(int point) {
    switch (point) {
    case 0: return {BaseFn::OpA, BaseFn::BC0, BaseFn::Oa1, BaseFn::Oa2, BaseFn::Os3};
    case -1: return {BaseFn::OpA, BaseFn::BC0, BaseFn::BC1, BaseFn::Oa2, BaseFn::Os3};
    case -2: return {BaseFn::OpA, BaseFn::BC2, BaseFn::Os3};
    }
    throw std::logic_error("point_basis");
}

} // namespace

AtomMap q_atoms(int l, int n, const PrintedTheorem1& printed) {
    AtomMap map;
    auto it = printed.q_groups.find({l, n});
    if (it == printed.q_groups.end()) throw UnknownGreenId("q_atoms: no such Q functional");
    for (const auto& [point, factor] : it->second) {
        if (n == 1) {
            for (BaseFn base : point_basis(point)) map[{AlphaTag::Plain, base, point}].add(0, factor);
        } else {
            for (AlphaTag x : {AlphaTag::XC0, AlphaTag::X4it, AlphaTag::XC1})
                for (BaseFn base : point_basis(point)) map[{x, base, point}].add(0, factor);
        }
    }
    return map;
}

bool Theorem1Table::exact() const {
    if (!residual.empty()) return false;
    for (const auto& row : rows)
        if (!row.difference.is_zero()) return false;
    return true;
}

Theorem1Table theorem1_table(Edge edge, const PrintedTheorem1& printed) {
    Theorem1Table table;
    table.edge = edge;
    std::map<Gen, Coefficient> subst{{Gen::Z1, edge_Z1(edge)}, {Gen::Z2, edge_Z2(edge)}};

    static const std::vector<std::pair<int, int>> q_list = {{0, 1}, {0, 2}, {1, 1}, {2, 1}, {2, 2}};
    static const std::map<std::pair<int, int>, GreenAtom> markers = {
        {{0, 1}, {AlphaTag::Plain, BaseFn::OpA, 0}},
        {{0, 2}, {AlphaTag::XC0, BaseFn::OpA, 0}},
        {{1, 1}, {AlphaTag::Plain, BaseFn::OpA, -1}},
        {{2, 1}, {AlphaTag::Plain, BaseFn::OpA, -2}},
        {{2, 2}, {AlphaTag::XC0, BaseFn::OpA, 0}}};

    for (int sector = 0; sector <= 2; ++sector) {
        AtomMap derived = derived_atom_map(sector);
        AtomMap printed_map;
        for (const auto& [lq, q] : q_list) {
            if (lq != sector) continue;
            PolyR mult = printed.multipliers.at({lq, q});
            AtomMap atoms = q_atoms(lq, q, printed);
            for (const auto& [atom, inner] : atoms) {
                // multiplier (in r) times the inner scalar
                for (int k = 0; k < 3; ++k)
                    printed_map[atom].add(k, mult.coeff(k) * inner.coeff(0));
            }
            Theorem1Row row;
            row.sector = sector;
            row.qindex = q;
            row.printed = mult.substitute(subst);
            auto mk = derived.find(markers.at({lq, q}));
            PolyR derived_mult = mk == derived.end() ? PolyR() : mk->second;
            row.derived = derived_mult.substitute(subst);
            row.difference = row.derived - row.printed;
            table.rows.push_back(std::move(row));
        }
        // atom-level residual
        AtomMap res = derived;
        for (const auto& [atom, poly] : printed_map) {
            PolyR d = res.count(atom) ? res[atom] : PolyR();
            res[atom] = d - poly;
        }
        for (const auto& [atom, poly] : res) {
            PolyR sub = poly.substitute(subst);
            if (!sub.is_zero()) {
                GreenAtom tagged = atom;
                table.residual[tagged] = table.residual.count(tagged)
                                             ? table.residual[tagged] + sub
                                             : sub;
            }
        }
    }
    return table;
}

// ---------------------------------------------------------------------------
// Simplified Q forms
// ---------------------------------------------------------------------------

OpSymbol build_h(int k, int l) {
    if (k < 1 || k > 3) throw RangeError("build_h: k must be 1, 2 or 3");
    OpSymbol acc;
    for (int m = 0; m < k && m <= 2; ++m) acc -= build_a(m, Edge::Generic).mul_rpow(m);
    // add back the covariable multiplier parts that the raw Q forms carry as
    // separate functionals
    auto cov_part = [](const OpSymbol& s, int deg) {
        OpSymbol out;
        for (const auto& [key, p] : s.terms())
            if (key.cov.degree() == deg) out.add(key, p);
        return out;
    };
    if (k == 1) {
        acc += cov_part(build_a(0, Edge::Generic), 2);
    } else if (k == 2) {
        acc += cov_part(build_a(0, Edge::Generic), 2);
        acc += cov_part(build_a(1, Edge::Generic), 1).mul_rpow(1);
    } else {
        acc += cov_part(build_a(2, Edge::Generic), 2).mul_rpow(2);
    }
    return sector_restrict(acc, l);
}

QDescriptor q_descriptor(int l, int n, const PrintedTheorem1& printed) {
    QDescriptor q;
    q.l = l;
    q.n = n;
    AtomMap atoms = q_atoms(l, n, printed);
    for (const auto& [atom, poly] : atoms) q.raw.push_back({poly.coeff(0), atom});
    const auto& groups = printed.q_groups.at({l, n});
    for (const auto& [point, factor] : groups) {
        QSimplifiedPiece eigen;
        eigen.eigen_part = true;
        eigen.contracted = (n == 2);
        eigen.point = point;
        eigen.coeff = factor;
        q.simplified.push_back(eigen);
        QSimplifiedPiece hpiece;
        hpiece.eigen_part = false;
        hpiece.contracted = (n == 2);
        hpiece.point = point;
        hpiece.coeff = factor;
        hpiece.h = build_h(1 - point, l);
        q.simplified.push_back(hpiece);
    }
    return q;
}

} // namespace edgegreen
