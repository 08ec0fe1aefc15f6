#include "skelcat/morita.hpp"

#include "skelcat/instances.hpp"

#include <memory>
#include <numbers>
#include <numeric>

namespace skelcat {

namespace {

inline Lab la(int a) { return {Cell::A, a}; }
inline Lab lm(int m) { return {Cell::M, m}; }
inline Lab lb(int b) { return {Cell::B, b}; }
inline Lab ln(int n) { return {Cell::N, n}; }

// the thirteen mixed associator patterns stored on the context (the two base
// corners and the left-action pattern live in A.F, B.F and M.L)
constexpr std::array<std::array<Cell, 3>, 13> kStoredPatterns{{
    {Cell::A, Cell::M, Cell::B}, {Cell::A, Cell::M, Cell::N},
    {Cell::M, Cell::B, Cell::B}, {Cell::M, Cell::B, Cell::N},
    {Cell::M, Cell::N, Cell::A}, {Cell::M, Cell::N, Cell::M},
    {Cell::N, Cell::A, Cell::A}, {Cell::N, Cell::A, Cell::M},
    {Cell::N, Cell::M, Cell::B}, {Cell::N, Cell::M, Cell::N},
    {Cell::B, Cell::B, Cell::N}, {Cell::B, Cell::N, Cell::A},
    {Cell::B, Cell::N, Cell::M},
}};

// multiplicity tables only; enough for channel/admissibility queries
Calculus mult_calculus(const MoritaContextData& ctx) {
    Calculus C;
    C.nlab = {ctx.na(), ctx.nm(), ctx.nb(), ctx.nn()};
    C.unitA = ctx.A.unit;
    C.unitB = ctx.B.unit;
    C.dual[int(Cell::A)] = ctx.A.dual;
    C.dual[int(Cell::B)] = ctx.B.dual;
    C.dual[int(Cell::M)].resize(ctx.nm());
    std::iota(C.dual[int(Cell::M)].begin(), C.dual[int(Cell::M)].end(), 0);
    C.dual[int(Cell::N)].resize(ctx.nn());
    std::iota(C.dual[int(Cell::N)].begin(), C.dual[int(Cell::N)].end(), 0);
    for (int a = 0; a < ctx.na(); ++a)
        for (int b = 0; b < ctx.na(); ++b)
            for (int c = 0; c < ctx.na(); ++c)
                if (ctx.A.N(a, b, c) > 0)
                    C.set_mult(la(a), la(b), c, ctx.A.N(a, b, c));
    for (int a = 0; a < ctx.nb(); ++a)
        for (int b = 0; b < ctx.nb(); ++b)
            for (int c = 0; c < ctx.nb(); ++c)
                if (ctx.B.N(a, b, c) > 0)
                    C.set_mult(lb(a), lb(b), c, ctx.B.N(a, b, c));
    for (int a = 0; a < ctx.na(); ++a)
        for (int m = 0; m < ctx.nm(); ++m)
            for (int m2 = 0; m2 < ctx.nm(); ++m2)
                if (ctx.M.act(a, m, m2) > 0)
                    C.set_mult(la(a), lm(m), m2, ctx.M.act(a, m, m2));
    for (int m = 0; m < ctx.nm(); ++m)
        for (int b = 0; b < ctx.nb(); ++b)
            for (int m2 = 0; m2 < ctx.nm(); ++m2)
                if (ctx.mb(m, b, m2) > 0)
                    C.set_mult(lm(m), lb(b), m2, ctx.mb(m, b, m2));
    for (int b = 0; b < ctx.nb(); ++b)
        for (int n = 0; n < ctx.nn(); ++n)
            for (int n2 = 0; n2 < ctx.nn(); ++n2)
                if (ctx.bn(b, n, n2) > 0)
                    C.set_mult(lb(b), ln(n), n2, ctx.bn(b, n, n2));
    for (int n = 0; n < ctx.nn(); ++n)
        for (int a = 0; a < ctx.na(); ++a)
            for (int n2 = 0; n2 < ctx.nn(); ++n2)
                if (ctx.na_(n, a, n2) > 0)
                    C.set_mult(ln(n), la(a), n2, ctx.na_(n, a, n2));
    for (int m = 0; m < ctx.nm(); ++m)
        for (int n = 0; n < ctx.nn(); ++n)
            for (int a = 0; a < ctx.na(); ++a) {
                int v = ctx.mixt_[(std::size_t(m) * ctx.nn() + n) * ctx.na() + a];
                if (v > 0) C.set_mult(lm(m), ln(n), a, v);
            }
    for (int n = 0; n < ctx.nn(); ++n)
        for (int m = 0; m < ctx.nm(); ++m)
            for (int b = 0; b < ctx.nb(); ++b) {
                int v = ctx.mixtd_[(std::size_t(n) * ctx.nm() + m) * ctx.nb() + b];
                if (v > 0) C.set_mult(ln(n), lm(m), b, v);
            }
    return C;
}

const char* cell_tag(Cell c) {
    switch (c) {
        case Cell::A: return "a";
        case Cell::M: return "m";
        case Cell::B: return "b";
        default: return "n";
    }
}

std::string pair_tag(Cell x, Cell y) {
    return std::string(cell_tag(x)) + cell_tag(y);
}

// the eight composable pair patterns, in the itemization order of the
// pivotal condition families
constexpr std::array<std::array<Cell, 2>, 8> kPairPatterns{{
    {Cell::A, Cell::A}, {Cell::B, Cell::B}, {Cell::A, Cell::M},
    {Cell::M, Cell::B}, {Cell::B, Cell::N}, {Cell::N, Cell::A},
    {Cell::M, Cell::N}, {Cell::N, Cell::M},
}};

void require_structure(const MoritaContextData& ctx, const char* what) {
    if (!ctx.structure_tier)
        throw UnsupportedMultiplicity(std::string(what) +
                                      ": context carries dimension-tier data "
                                      "only (" + ctx.warning + ")");
}

}  // namespace

Scalar MoritaContextData::alpha(int m, int n, int m2, int d, int e,
                                int f) const {
    auto it = assoc.find({int(Cell::M), int(Cell::N), int(Cell::M),
                          m, n, m2, d, e, f});
    return it == assoc.end() ? Scalar(0) : it->second;
}

Scalar MoritaContextData::beta(int n, int m, int n2, int d, int e,
                               int f) const {
    auto it = assoc.find({int(Cell::N), int(Cell::M), int(Cell::N),
                          n, m, n2, d, e, f});
    return it == assoc.end() ? Scalar(0) : it->second;
}

Calculus morita_calculus(const MoritaContextData& ctx) {
    require_structure(ctx, "morita_calculus");
    Calculus C = mult_calculus(ctx);
    for (auto& [k, v] : ctx.A.F)
        C.set_assoc(la(k[0]), la(k[1]), la(k[2]), k[3], k[4], k[5], v);
    for (auto& [k, v] : ctx.B.F)
        C.set_assoc(lb(k[0]), lb(k[1]), lb(k[2]), k[3], k[4], k[5], v);
    for (auto& [k, v] : ctx.M.L)
        C.set_assoc(la(k[0]), la(k[1]), lm(k[2]), k[3], k[4], k[5], v);
    for (auto& [k, v] : ctx.assoc)
        C.set_assoc({Cell(k[0]), k[3]}, {Cell(k[1]), k[4]}, {Cell(k[2]), k[5]},
                    k[6], k[7], k[8], v);
    C.solve_duals();
    return C;
}

MoritaContextData build_canonical_context(
    const ModuleData& md, const FusionData& B,
    const std::vector<int>& right_action,
    const std::function<Scalar(Lab, Lab, Lab, int, int, int)>& assoc_fn) {
    validate_fusion(md.base);
    validate_fusion(B);
    MoritaContextData ctx;
    ctx.name = md.name + "|" + B.name;
    ctx.A = md.base;
    ctx.B = B;
    ctx.M = md;
    const int na = ctx.na(), nb = ctx.nb(), nm = ctx.nm();
    if (int(right_action.size()) != nm * nb * nm)
        throw ValidationError("context: bad right-action tensor shape");
    auto ra = [&](int m, int b, int m2) {
        return right_action[(std::size_t(m) * nb + b) * nm + m2];
    };
    for (int m = 0; m < nm; ++m)
        for (int m2 = 0; m2 < nm; ++m2)
            if (ra(m, B.unit, m2) != (m == m2 ? 1 : 0))
                throw ValidationError("context: right unit action violated");
    for (int b1 = 0; b1 < nb; ++b1)
        for (int b2 = 0; b2 < nb; ++b2)
            for (int m = 0; m < nm; ++m)
                for (int m2 = 0; m2 < nm; ++m2) {
                    long lhs = 0, rhs = 0;
                    for (int k = 0; k < nm; ++k)
                        lhs += long(ra(m, b1, k)) * ra(k, b2, m2);
                    for (int c = 0; c < nb; ++c)
                        rhs += long(B.N(b1, b2, c)) * ra(m, c, m2);
                    if (lhs != rhs)
                        throw ValidationError(
                            "context: right action multiplicities not "
                            "associative");
                }
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b)
            for (int m = 0; m < nm; ++m)
                for (int m2 = 0; m2 < nm; ++m2) {
                    long lhs = 0, rhs = 0;
                    for (int k = 0; k < nm; ++k) {
                        lhs += long(md.act(a, m, k)) * ra(k, b, m2);
                        rhs += long(ra(m, b, k)) * md.act(a, k, m2);
                    }
                    if (lhs != rhs)
                        throw ActionsDoNotCommute(
                            "context: the two actions on the bridge do not "
                            "commute at the multiplicity level");
                }
    // the opposite bridge mirrors the bridge labels as representable
    // functionals; its products come from the Hom-duality of the actions
    ctx.nlabels.reserve(nm);
    for (auto& s : md.mlabels) ctx.nlabels.push_back(s + "^");
    ctx.act_mb = right_action;
    ctx.mixt_.assign(std::size_t(nm) * nm * na, 0);
    ctx.mixtd_.assign(std::size_t(nm) * nm * nb, 0);
    ctx.act_bn.assign(std::size_t(nb) * nm * nm, 0);
    ctx.act_na.assign(std::size_t(nm) * na * nm, 0);
    for (int m = 0; m < nm; ++m)
        for (int k = 0; k < nm; ++k)
            for (int a = 0; a < na; ++a)
                ctx.mixt_[(std::size_t(m) * nm + k) * na + a] =
                    md.act(a, k, m);
    for (int k = 0; k < nm; ++k)
        for (int m = 0; m < nm; ++m)
            for (int b = 0; b < nb; ++b)
                ctx.mixtd_[(std::size_t(k) * nm + m) * nb + b] = ra(k, b, m);
    for (int b = 0; b < nb; ++b)
        for (int k1 = 0; k1 < nm; ++k1)
            for (int k2 = 0; k2 < nm; ++k2)
                ctx.act_bn[(std::size_t(b) * nm + k1) * nm + k2] =
                    ra(k2, b, k1);
    for (int k1 = 0; k1 < nm; ++k1)
        for (int a = 0; a < na; ++a)
            for (int k2 = 0; k2 < nm; ++k2)
                ctx.act_na[(std::size_t(k1) * na + a) * nm + k2] =
                    md.act(a, k2, k1);
    // structure scalars on every admissible non-unit tuple of the stored
    // patterns; absent or multiplicity-blocked, the context stays at the
    // dimension tier
    if (!assoc_fn) {
        ctx.structure_tier = false;
        ctx.warning = "no structure scalars supplied";
        return ctx;
    }
    Calculus C = mult_calculus(ctx);
    bool mfree = md.multiplicity_free() && B.multiplicity_free();
    for (auto& [k, v] : C.mult_)
        if (v > 1) mfree = false;
    if (!mfree) {
        ctx.structure_tier = false;
        ctx.warning = "products are not multiplicity-free";
        return ctx;
    }
    for (auto [cx, cy, cz] : kStoredPatterns) {
        Cell ct = cell_of(cell_src(cx), cell_tgt(cz));
        for (int x = 0; x < C.count(cx); ++x)
            for (int y = 0; y < C.count(cy); ++y)
                for (int z = 0; z < C.count(cz); ++z) {
                    Lab lx{cx, x}, ly{cy, y}, lz{cz, z};
                    if (C.is_unit(lx) || C.is_unit(ly) || C.is_unit(lz))
                        continue;
                    for (int d = 0; d < C.count(ct); ++d)
                        for (int e : C.elist(lx, ly, lz, d))
                            for (int f : C.flist(lx, ly, lz, d))
                                ctx.assoc[{int(cx), int(cy), int(cz),
                                           x, y, z, d, e, f}] =
                                    assoc_fn(lx, ly, lz, d, e, f);
                }
    }
    return ctx;
}

MoritaContextData make_regular_context(const FusionData& A) {
    ModuleData md = make_regular_module(A);
    const int n = A.n();
    std::vector<int> ra(std::size_t(n) * n * n);
    for (int m = 0; m < n; ++m)
        for (int b = 0; b < n; ++b)
            for (int m2 = 0; m2 < n; ++m2)
                ra[(std::size_t(m) * n + b) * n + m2] = A.N(m, b, m2);
    // every cell realizes inside the base; the opposite bridge realizes
    // through the dual involution, and channel indices realize through the
    // realization of their own cell
    auto CA = std::make_shared<Calculus>(fusion_calculus(A));
    auto dual = A.dual;
    auto real = [dual](Cell c, int i) {
        return c == Cell::N ? dual[i] : i;
    };
    auto fn = [CA, real](Lab x, Lab y, Lab z, int d, int e, int f) {
        Cell ct = cell_of(cell_src(x.cell), cell_tgt(z.cell));
        Cell ce = cell_of(cell_src(x.cell), cell_tgt(y.cell));
        Cell cf = cell_of(cell_src(y.cell), cell_tgt(z.cell));
        return CA->assoc(la(real(x.cell, x.idx)), la(real(y.cell, y.idx)),
                         la(real(z.cell, z.idx)), real(ct, d), real(ce, e),
                         real(cf, f));
    };
    FusionData B = A;
    B.name = A.name + ":2nd";
    MoritaContextData ctx = build_canonical_context(md, B, ra, fn);
    ctx.name = A.name + ":regular-context";
    return ctx;
}

MoritaContextData make_pointed_context(int n) {
    FusionData A = make_pointed_cyclic(n, 0);
    FusionData B = make_pointed_cyclic(n, 0);
    B.name += ":chars";
    for (int c = 1; c < n; ++c) B.labels[c] = "x" + std::to_string(c);
    ModuleData md = make_vec_module(A);
    std::vector<int> ra(std::size_t(n), 1);  // nm = 1
    const Scalar omega =
        std::exp(Scalar(0, 2.0 * std::numbers::pi / double(n)));
    auto chi = [omega, n](int c, int g) {
        return std::pow(omega, double((c * g) % n));
    };
    // Structure scalars of the coboundary pointed context.  The two bridge
    // crossings carry the character pairing; four single-index patterns
    // carry a character value, the rest are identities.
    auto fn = [chi, n](Lab x, Lab y, Lab z, int d, int e, int f) -> Scalar {
        auto pat = std::array{x.cell, y.cell, z.cell};
        if (pat == std::array{Cell::M, Cell::N, Cell::M})
            return chi((n - f) % n, e) / Scalar(double(n));  // e in A, f in B
        if (pat == std::array{Cell::N, Cell::M, Cell::N})
            return chi((n - e) % n, f);                      // e in B, f in A
        if (pat == std::array{Cell::A, Cell::M, Cell::B})
            return chi(z.idx, x.idx);
        if (pat == std::array{Cell::M, Cell::B, Cell::N})
            return chi(y.idx, d);
        if (pat == std::array{Cell::N, Cell::A, Cell::M})
            return chi(d, y.idx);
        if (pat == std::array{Cell::B, Cell::N, Cell::A})
            return chi(x.idx, z.idx);
        return Scalar(1);
    };
    MoritaContextData ctx = build_canonical_context(md, B, ra, fn);
    ctx.name = "pointed-Z" + std::to_string(n) + ":context";
    return ctx;
}

MoritaContextData relabel_context(const MoritaContextData& ctx,
                                  const std::vector<int>& perm_a,
                                  const std::vector<int>& perm_m,
                                  const std::vector<int>& perm_b) {
    auto check_perm = [](const std::vector<int>& p, int n) {
        if (int(p.size()) != n) throw ValidationError("relabel: bad size");
        std::vector<char> seen(n, 0);
        for (int v : p) {
            if (v < 0 || v >= n || seen[v])
                throw ValidationError("relabel: not a permutation");
            seen[v] = 1;
        }
    };
    const int na = ctx.na(), nb = ctx.nb(), nm = ctx.nm();
    check_perm(perm_a, na);
    check_perm(perm_m, nm);
    check_perm(perm_b, nb);
    auto relabel_fusion = [](const FusionData& fd, const std::vector<int>& p) {
        FusionData out;
        out.name = fd.name;
        out.labels.resize(fd.n());
        out.dual.resize(fd.n());
        out.unit = p[fd.unit];
        out.Nmult.dims = fd.Nmult.dims;
        out.Nmult.data.assign(fd.Nmult.data.size(), 0);
        for (int a = 0; a < fd.n(); ++a) {
            out.labels[p[a]] = fd.labels[a];
            out.dual[p[a]] = p[fd.dual[a]];
            for (int b = 0; b < fd.n(); ++b)
                for (int c = 0; c < fd.n(); ++c)
                    out.Nmult.at({p[a], p[b], p[c]}) = fd.N(a, b, c);
        }
        for (auto& [k, v] : fd.F)
            out.F[{p[k[0]], p[k[1]], p[k[2]], p[k[3]], p[k[4]], p[k[5]]}] = v;
        return out;
    };
    MoritaContextData out;
    out.name = ctx.name + ":relabeled";
    out.A = relabel_fusion(ctx.A, perm_a);
    out.B = relabel_fusion(ctx.B, perm_b);
    out.M.name = ctx.M.name;
    out.M.base = out.A;
    out.M.mlabels.resize(nm);
    out.nlabels.resize(nm);
    for (int m = 0; m < nm; ++m) {
        out.M.mlabels[perm_m[m]] = ctx.M.mlabels[m];
        out.nlabels[perm_m[m]] = ctx.nlabels[m];
    }
    out.M.action.assign(ctx.M.action.size(), 0);
    for (int a = 0; a < na; ++a)
        for (int m = 0; m < nm; ++m)
            for (int m2 = 0; m2 < nm; ++m2)
                out.M.action[(std::size_t(perm_a[a]) * nm + perm_m[m]) * nm +
                             perm_m[m2]] = ctx.M.act(a, m, m2);
    for (auto& [k, v] : ctx.M.L)
        out.M.L[{perm_a[k[0]], perm_a[k[1]], perm_m[k[2]], perm_m[k[3]],
                 perm_a[k[4]], perm_m[k[5]]}] = v;
    out.act_mb.assign(ctx.act_mb.size(), 0);
    out.act_bn.assign(ctx.act_bn.size(), 0);
    out.act_na.assign(ctx.act_na.size(), 0);
    out.mixt_.assign(ctx.mixt_.size(), 0);
    out.mixtd_.assign(ctx.mixtd_.size(), 0);
    for (int m = 0; m < nm; ++m)
        for (int b = 0; b < nb; ++b)
            for (int m2 = 0; m2 < nm; ++m2)
                out.act_mb[(std::size_t(perm_m[m]) * nb + perm_b[b]) * nm +
                           perm_m[m2]] = ctx.mb(m, b, m2);
    for (int b = 0; b < nb; ++b)
        for (int k1 = 0; k1 < nm; ++k1)
            for (int k2 = 0; k2 < nm; ++k2)
                out.act_bn[(std::size_t(perm_b[b]) * nm + perm_m[k1]) * nm +
                           perm_m[k2]] = ctx.bn(b, k1, k2);
    for (int k1 = 0; k1 < nm; ++k1)
        for (int a = 0; a < na; ++a)
            for (int k2 = 0; k2 < nm; ++k2)
                out.act_na[(std::size_t(perm_m[k1]) * na + perm_a[a]) * nm +
                           perm_m[k2]] = ctx.na_(k1, a, k2);
    for (int m = 0; m < nm; ++m)
        for (int k = 0; k < nm; ++k) {
            for (int a = 0; a < na; ++a)
                out.mixt_[(std::size_t(perm_m[m]) * nm + perm_m[k]) * na +
                          perm_a[a]] =
                    ctx.mixt_[(std::size_t(m) * nm + k) * na + a];
            for (int b = 0; b < nb; ++b)
                out.mixtd_[(std::size_t(perm_m[k]) * nm + perm_m[m]) * nb +
                           perm_b[b]] =
                    ctx.mixtd_[(std::size_t(k) * nm + m) * nb + b];
        }
    auto perm_for = [&](Cell c) -> const std::vector<int>& {
        switch (c) {
            case Cell::A: return perm_a;
            case Cell::B: return perm_b;
            default: return perm_m;  // both bridges share the mirror labels
        }
    };
    for (auto& [k, v] : ctx.assoc) {
        Cell cx = Cell(k[0]), cy = Cell(k[1]), cz = Cell(k[2]);
        Cell ct = cell_of(cell_src(cx), cell_tgt(cz));
        Cell ce = cell_of(cell_src(cx), cell_tgt(cy));
        Cell cf = cell_of(cell_src(cy), cell_tgt(cz));
        out.assoc[{k[0], k[1], k[2], perm_for(cx)[k[3]], perm_for(cy)[k[4]],
                   perm_for(cz)[k[5]], perm_for(ct)[k[6]], perm_for(ce)[k[7]],
                   perm_for(cf)[k[8]]}] = v;
    }
    out.structure_tier = ctx.structure_tier;
    out.warning = ctx.warning;
    return out;
}

CheckReport verify_context_coherence(const MoritaContextData& ctx,
                                     const Tolerance& tol, int jobs) {
    Calculus C = morita_calculus(ctx);
    CheckReport rep;
    rep.suite = "morita-coherence";
    rep.instance = ctx.name;
    rep.tol = tol;
    verify_pentagons(C, tol, [](const std::string&) { return true; }, rep,
                     jobs);
    return rep;
}

DualResult dual_1morphism(const MoritaContextData& ctx, const OneMorphism& x,
                          DualSide side) {
    Calculus C = morita_calculus(ctx);
    DualResult out;
    out.dual.cell = dual_cell(x.cell);
    for (int i : x.labels) {
        Lab l{x.cell, i};
        Lab d = C.dual_lab(l);
        out.dual.labels.push_back(d.idx);
        if (side == DualSide::Right) {
            out.ev.push_back(C.ev(l));
            out.coev.push_back(C.coev(l));
            Engine E(C, {l});
            E.coev_at(0, l);  // (l, l^v, l)
            E.ev_pair(1);
            out.snake_residual.push_back(
                std::max(C.snake_residual(l),
                         std::abs(E.scalar({i}) - Scalar(1))));
        } else {
            out.ev.push_back(C.lev(l));
            out.coev.push_back(C.lcoev(l));
            Engine E(C, {l});
            E.lcoev_at(1, l);  // (l, l^v, l)
            E.lev_pair(0);
            out.snake_residual.push_back(
                std::max(C.snake_residual(l),
                         std::abs(E.scalar({i}) - Scalar(1))));
        }
    }
    return out;
}

CheckReport snake_suite(const MoritaContextData& ctx, const Tolerance& tol) {
    Calculus C = morita_calculus(ctx);
    CheckReport rep;
    rep.suite = "morita-snake";
    rep.instance = ctx.name;
    rep.tol = tol;
    for (int c = 0; c < 4; ++c)
        for (int i = 0; i < C.nlab[c]; ++i) {
            Lab x{Cell(c), i};
            Lab xd = C.dual_lab(x);
            rep.note("snake:solve", {c, i}, C.snake_residual(x), tol);
            Engine E1(C, {x});
            E1.coev_at(0, x);
            E1.ev_pair(1);
            rep.note_cmp("snake:right1", {c, i}, E1.scalar({i}), Scalar(1),
                         tol);
            Engine E2(C, {x});
            E2.coev_at(1, xd);
            E2.ev_pair(0);
            rep.note_cmp("snake:right2", {c, i}, E2.scalar({i}), Scalar(1),
                         tol);
            Engine E3(C, {x});
            E3.lcoev_at(1, x);
            E3.lev_pair(0);
            rep.note_cmp("snake:left1", {c, i}, E3.scalar({i}), Scalar(1),
                         tol);
            Engine E4(C, {x});
            E4.lcoev_at(0, xd);
            E4.lev_pair(1);
            rep.note_cmp("snake:left2", {c, i}, E4.scalar({i}), Scalar(1),
                         tol);
        }
    rep.sort_failures();
    return rep;
}

CheckReport duality_dim_suite(const MoritaContextData& ctx) {
    Calculus C = mult_calculus(ctx);
    CheckReport rep;
    rep.suite = "morita-duality-dim";
    rep.instance = ctx.name;
    rep.tol = Tolerance{0.0, 0.0};
    for (auto [cx, cy] : kPairPatterns) {
        Cell cz = cell_of(cell_src(cx), cell_tgt(cy));
        std::string tag = pair_tag(cx, cy);
        for (int x = 0; x < C.count(cx); ++x)
            for (int y = 0; y < C.count(cy); ++y)
                for (int z = 0; z < C.count(cz); ++z) {
                    Lab lx{cx, x}, ly{cy, y}, lz{cz, z};
                    Lab dx = C.dual_lab(lx), dy = C.dual_lab(ly),
                        dz = C.dual_lab(lz);
                    int lhs = C.mult(lx, ly, z);
                    // the dual of a product is the reversed product of duals
                    rep.note_cmp("dualprod:" + tag, {x, y, z},
                                 Scalar(double(lhs)),
                                 Scalar(double(C.mult(dy, dx, dz.idx))),
                                 rep.tol);
                    // Hom adjunction of the left factor
                    rep.note_cmp("homadj:" + tag, {x, y, z},
                                 Scalar(double(lhs)),
                                 Scalar(double(C.mult(dx, lz, y))), rep.tol);
                    // internal-Hom form of the right factor
                    rep.note_cmp("ihom:" + tag, {x, y, z},
                                 Scalar(double(lhs)),
                                 Scalar(double(C.mult(lz, dy, x))), rep.tol);
                }
    }
    rep.sort_failures();
    return rep;
}

Scalar oriented_double_dual(const Calculus& C, Lab x, Lab y, Lab z) {
    return Scalar(1) / double_dual_scalar(C, x, y, z);
}

CheckReport double_dual_suite(const MoritaContextData& ctx,
                              const Tolerance& tol) {
    require_structure(ctx, "double_dual_suite");
    Calculus C = morita_calculus(ctx);
    CheckReport rep;
    rep.suite = "morita-double-dual";
    rep.instance = ctx.name;
    rep.tol = tol;
    // label level: the double dual of every 1-morphism is itself, matching
    // an identity relative Serre object map on both bridges
    for (int c = 0; c < 4; ++c)
        for (int i = 0; i < C.nlab[c]; ++i) {
            Lab x{Cell(c), i};
            Lab dd = C.dual_lab(C.dual_lab(x));
            rep.note("dualdual:label", {c, i}, dd == x ? 0.0 : 1.0, tol, 0.5);
        }
    // bridge structure scalars against the relative Serre twists computed
    // from the two module corners independently
    SerreData sl = serre_data(ctx.M, tol);
    rep.merge(sl.report);
    for (auto& [k, t] : sl.twist)
        rep.note_cmp("doubledual:bridge-left", {k[0], k[1], k[2]},
                     oriented_double_dual(C, la(k[0]), lm(k[1]), lm(k[2])), t,
                     tol);
    ModuleData mdn;
    mdn.name = ctx.name + ":opposite-bridge";
    mdn.base = ctx.B;
    mdn.mlabels = ctx.nlabels;
    mdn.action = ctx.act_bn;
    for (auto& [k, v] : ctx.assoc)
        if (Cell(k[0]) == Cell::B && Cell(k[1]) == Cell::B)
            mdn.L[{k[3], k[4], k[5], k[6], k[7], k[8]}] = v;
    SerreData sr = serre_data(mdn, tol);
    rep.merge(sr.report);
    for (auto& [k, t] : sr.twist)
        rep.note_cmp("doubledual:bridge-right", {k[0], k[1], k[2]},
                     oriented_double_dual(C, lb(k[0]), ln(k[1]), ln(k[2])), t,
                     tol);
    rep.sort_failures();
    return rep;
}

PivotalTransport pivotal_transport(const MoritaContextData& ctx,
                                   const Assignment& p, const Assignment& pt,
                                   const Tolerance& tol) {
    require_structure(ctx, "pivotal_transport");
    if (int(p.size()) != ctx.na() || int(pt.size()) != ctx.nm())
        throw ValidationError("pivotal_transport: wrong component count");
    Calculus C = morita_calculus(ctx);
    PivotalTransport out;
    out.report.suite = "morita-transport";
    out.report.instance = ctx.name;
    out.report.tol = tol;
    out.q.assign(ctx.nb(), Scalar(0));
    out.phat.assign(ctx.nn(), Scalar(0));
    // second-base components from the right-action condition family; the
    // value must not depend on the chosen bridge channel
    for (int b = 0; b < ctx.nb(); ++b) {
        bool first = true;
        for (int m = 0; m < ctx.nm(); ++m)
            for (int m2 = 0; m2 < ctx.nm(); ++m2) {
                if (ctx.mb(m, b, m2) == 0) continue;
                Scalar cand =
                    oriented_double_dual(C, lm(m), lb(b), lm(m2)) * pt[m2] /
                    pt[m];
                if (first) {
                    out.q[b] = cand;
                    first = false;
                } else {
                    out.report.note_cmp("transport:q-consistency", {b, m, m2},
                                        cand, out.q[b], tol);
                }
            }
        if (first)
            throw ValidationError("pivotal_transport: idle second-base label");
    }
    // opposite-bridge components from the pairing condition family
    for (int k = 0; k < ctx.nn(); ++k) {
        bool first = true;
        for (int m = 0; m < ctx.nm(); ++m)
            for (int a = 0; a < ctx.na(); ++a) {
                if (ctx.mixt(m, k).mult(a) == 0) continue;
                Scalar cand =
                    oriented_double_dual(C, lm(m), ln(k), la(a)) * p[a] /
                    pt[m];
                if (first) {
                    out.phat[k] = cand;
                    first = false;
                } else {
                    out.report.note_cmp("transport:phat-consistency",
                                        {k, m, a}, cand, out.phat[k], tol);
                }
            }
        if (first)
            throw ValidationError("pivotal_transport: idle opposite-bridge "
                                  "label");
    }
    out.report.sort_failures();
    return out;
}

CheckReport pivotal_morita_suite(const MoritaContextData& ctx,
                                 const Assignment& p, const Assignment& pt,
                                 const Assignment& q, const Assignment& phat,
                                 const Tolerance& tol) {
    require_structure(ctx, "pivotal_morita_suite");
    Calculus C = morita_calculus(ctx);
    CheckReport rep;
    rep.suite = "morita-pivotal";
    rep.instance = ctx.name;
    rep.tol = tol;
    if (int(p.size()) != ctx.na() || int(pt.size()) != ctx.nm() ||
        int(q.size()) != ctx.nb() || int(phat.size()) != ctx.nn())
        throw ValidationError("pivotal_morita_suite: wrong component count");
    auto comp = [&](Lab x) -> Scalar {
        switch (x.cell) {
            case Cell::A: return p[x.idx];
            case Cell::M: return pt[x.idx];
            case Cell::B: return q[x.idx];
            default: return phat[x.idx];
        }
    };
    rep.note_cmp("pivotal:unit-a", {C.unitA}, p[C.unitA], Scalar(1), tol);
    rep.note_cmp("pivotal:unit-b", {C.unitB}, q[C.unitB], Scalar(1), tol);
    for (auto [cx, cy] : kPairPatterns) {
        Cell cz = cell_of(cell_src(cx), cell_tgt(cy));
        std::string tag = "pivotal:" + pair_tag(cx, cy);
        for (int x = 0; x < C.count(cx); ++x)
            for (int y = 0; y < C.count(cy); ++y) {
                Lab lx{cx, x}, ly{cy, y};
                for (int z : C.channels(lx, ly))
                    rep.note_cmp(tag, {x, y, z}, comp(lx) * comp(ly),
                                 oriented_double_dual(C, lx, ly, {cz, z}) *
                                     comp(Lab{cz, z}),
                                 tol);
            }
    }
    rep.sort_failures();
    return rep;
}

RadfordPseudoData radford_pseudo_suite(const MoritaContextData& ctx,
                                       const Tolerance& tol) {
    require_structure(ctx, "radford_pseudo_suite");
    Calculus C = morita_calculus(ctx);
    RadfordPseudoData out;
    out.report.suite = "morita-radford";
    out.report.instance = ctx.name;
    out.report.tol = tol;
    auto fill = [&](Cell c, std::vector<Scalar>& dst) {
        dst.resize(C.count(c));
        for (int i = 0; i < C.count(c); ++i)
            dst[i] = C.radford_component({c, i});
    };
    fill(Cell::A, out.ra);
    fill(Cell::M, out.rm);
    fill(Cell::B, out.rb);
    fill(Cell::N, out.rn);
    auto comp = [&](Lab x) -> Scalar {
        switch (x.cell) {
            case Cell::A: return out.ra[x.idx];
            case Cell::M: return out.rm[x.idx];
            case Cell::B: return out.rb[x.idx];
            default: return out.rn[x.idx];
        }
    };
    // pseudo-naturality square over every composable pair: the component at
    // a composite matches the two-sided component through the squared
    // double-dual structure scalar of the pair
    for (auto [cx, cy] : kPairPatterns) {
        Cell cz = cell_of(cell_src(cx), cell_tgt(cy));
        std::string tag = "radford:" + pair_tag(cx, cy);
        for (int x = 0; x < C.count(cx); ++x)
            for (int y = 0; y < C.count(cy); ++y) {
                Lab lx{cx, x}, ly{cy, y};
                for (int z : C.channels(lx, ly)) {
                    Scalar dd = oriented_double_dual(C, lx, ly, {cz, z});
                    out.report.note_cmp(tag, {x, y, z}, comp(lx) * comp(ly),
                                        dd * dd * comp(Lab{cz, z}), tol);
                }
            }
    }
    out.report.sort_failures();
    return out;
}

CheckReport strong_context_suite(const MoritaContextData& ctx) {
    Calculus C = mult_calculus(ctx);
    CheckReport rep;
    rep.suite = "morita-strong";
    rep.instance = ctx.name;
    rep.tol = Tolerance{0.0, 0.0};
    const int na = ctx.na(), nb = ctx.nb(), nm = ctx.nm(), nn = ctx.nn();
    // the two base actions on the bridge are matrix ring maps
    for (int a1 = 0; a1 < na; ++a1)
        for (int a2 = 0; a2 < na; ++a2)
            for (int m = 0; m < nm; ++m)
                for (int m2 = 0; m2 < nm; ++m2) {
                    long lhs = 0, rhs = 0;
                    for (int k = 0; k < nm; ++k)
                        lhs += long(ctx.M.act(a2, m, k)) * ctx.M.act(a1, k, m2);
                    for (int c = 0; c < na; ++c)
                        rhs += long(ctx.A.N(a1, a2, c)) * ctx.M.act(c, m, m2);
                    rep.note_cmp("strong:ring-a", {a1, a2, m, m2},
                                 Scalar(double(lhs)), Scalar(double(rhs)),
                                 rep.tol);
                }
    for (int b1 = 0; b1 < nb; ++b1)
        for (int b2 = 0; b2 < nb; ++b2)
            for (int m = 0; m < nm; ++m)
                for (int m2 = 0; m2 < nm; ++m2) {
                    long lhs = 0, rhs = 0;
                    for (int k = 0; k < nm; ++k)
                        lhs += long(ctx.mb(m, b1, k)) * ctx.mb(k, b2, m2);
                    for (int c = 0; c < nb; ++c)
                        rhs += long(ctx.B.N(b1, b2, c)) * ctx.mb(m, c, m2);
                    rep.note_cmp("strong:ring-b", {b1, b2, m, m2},
                                 Scalar(double(lhs)), Scalar(double(rhs)),
                                 rep.tol);
                }
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b)
            for (int m = 0; m < nm; ++m)
                for (int m2 = 0; m2 < nm; ++m2) {
                    long lhs = 0, rhs = 0;
                    for (int k = 0; k < nm; ++k) {
                        lhs += long(ctx.M.act(a, m, k)) * ctx.mb(k, b, m2);
                        rhs += long(ctx.mb(m, b, k)) * ctx.M.act(a, k, m2);
                    }
                    rep.note_cmp("strong:commute", {a, b, m, m2},
                                 Scalar(double(lhs)), Scalar(double(rhs)),
                                 rep.tol);
                }
    // the representable assignments of the bridges are injective on labels
    for (int n1 = 0; n1 < nn; ++n1)
        for (int n2 = n1 + 1; n2 < nn; ++n2) {
            bool distinct = false;
            for (int m = 0; m < nm && !distinct; ++m)
                for (int a = 0; a < na && !distinct; ++a)
                    if (ctx.mixt(m, n1).mult(a) != ctx.mixt(m, n2).mult(a))
                        distinct = true;
            rep.note_cmp("strong:inj-n", {n1, n2}, Scalar(distinct ? 1 : 0),
                         Scalar(1), rep.tol);
        }
    for (int m1 = 0; m1 < nm; ++m1)
        for (int m2 = m1 + 1; m2 < nm; ++m2) {
            bool distinct = false;
            for (int n = 0; n < nn && !distinct; ++n)
                for (int b = 0; b < nb && !distinct; ++b)
                    if (ctx.mixtd(n, m1).mult(b) != ctx.mixtd(n, m2).mult(b))
                        distinct = true;
            rep.note_cmp("strong:inj-m", {m1, m2}, Scalar(distinct ? 1 : 0),
                         Scalar(1), rep.tol);
        }
    // multiplicity associativity across every composable triple pattern
    for (int o0 = 0; o0 < 2; ++o0)
        for (int o1 = 0; o1 < 2; ++o1)
            for (int o2 = 0; o2 < 2; ++o2)
                for (int o3 = 0; o3 < 2; ++o3) {
                    Cell cx = cell_of(o0, o1), cy = cell_of(o1, o2),
                         cz = cell_of(o2, o3);
                    Cell cxy = cell_of(o0, o2), cyz = cell_of(o1, o3);
                    Cell ct = cell_of(o0, o3);
                    for (int x = 0; x < C.count(cx); ++x)
                        for (int y = 0; y < C.count(cy); ++y)
                            for (int z = 0; z < C.count(cz); ++z)
                                for (int d = 0; d < C.count(ct); ++d) {
                                    long lhs = 0, rhs = 0;
                                    for (int e = 0; e < C.count(cxy); ++e)
                                        lhs += long(C.mult({cx, x}, {cy, y},
                                                           e)) *
                                               C.mult({cxy, e}, {cz, z}, d);
                                    for (int f = 0; f < C.count(cyz); ++f)
                                        rhs += long(C.mult({cy, y}, {cz, z},
                                                           f)) *
                                               C.mult({cx, x}, {cyz, f}, d);
                                    rep.note_cmp("strong:mixed-assoc",
                                                 {o0 * 8 + o1 * 4 + o2 * 2 + o3,
                                                  x, y, z, d},
                                                 Scalar(double(lhs)),
                                                 Scalar(double(rhs)), rep.tol);
                                }
                }
    rep.sort_failures();
    return rep;
}

}  // namespace skelcat
