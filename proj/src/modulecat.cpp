#include "skelcat/modulecat.hpp"

namespace skelcat {

namespace {

Lab la(int a) { return {Cell::A, a}; }
Lab lm(int m) { return {Cell::M, m}; }

Scalar coefficient(const Engine& E, const std::vector<int>& tree,
                   const std::vector<int>& start) {
    auto it = E.amp.find(tree);
    if (it == E.amp.end()) return Scalar(0);
    auto jt = it->second.find(start);
    return jt == it->second.end() ? Scalar(0) : jt->second;
}

// closure of the action projector a |> m -> m' -> a |> m through the
// (lcoev_a, ev_a) pairing
Scalar closure_right(const Calculus& C, int a, int m, int mp) {
    Engine E(C, {lm(m)});
    E.lcoev_at(0, la(a));   // (a^v, a, m)
    E.fuse(1, lm(mp));      // (a^v, m')
    E.split(1, la(a), lm(m));
    E.ev_pair(0);           // (m)
    return E.scalar({m});
}

// the same closure through the (coev_{a^v}, lev_{a^v}) pairing
Scalar closure_left(const Calculus& C, int a, int m, int mp) {
    Lab ad = C.dual_lab(la(a));
    Engine E(C, {lm(m)});
    E.coev_at(0, ad);       // (a^v, a, m)
    E.fuse(1, lm(mp));
    E.split(1, la(a), lm(m));
    E.lev_pair(0);
    return E.scalar({m});
}

}  // namespace

Calculus module_calculus(const ModuleData& md) {
    Calculus C = fusion_calculus(md.base);
    C.nlab[int(Cell::M)] = md.nm();
    C.nlab[int(Cell::B)] = 1;  // only the unit; the module corner has no duals
    C.dual[int(Cell::B)] = {0};
    for (int a = 0; a < md.base.n(); ++a)
        for (int m = 0; m < md.nm(); ++m)
            for (int n = 0; n < md.nm(); ++n)
                if (md.act(a, m, n) > 0)
                    C.set_mult(la(a), lm(m), n, md.act(a, m, n));
    for (auto& [k, v] : md.L)
        C.set_assoc(la(k[0]), la(k[1]), lm(k[2]), k[3], k[4], k[5], v);
    C.solve_duals();
    return C;
}

CheckReport validate_module(const ModuleData& md, const Tolerance& tol,
                            int jobs) {
    validate_fusion(md.base);
    const int na = md.base.n(), nm = md.nm();
    if (nm <= 0) throw ValidationError("module: empty label set");
    if (int(md.action.size()) != na * nm * nm)
        throw ValidationError("module: bad action tensor shape");
    for (int v : md.action)
        if (v < 0) throw ValidationError("module: negative multiplicity");
    for (int m = 0; m < nm; ++m)
        for (int n = 0; n < nm; ++n)
            if (md.act(md.base.unit, m, n) != (m == n ? 1 : 0))
                throw ValidationError("module: unit action violated");
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b)
            for (int m = 0; m < nm; ++m)
                for (int k = 0; k < nm; ++k) {
                    long lhs = 0, rhs = 0;
                    for (int e = 0; e < na; ++e)
                        lhs += long(md.base.N(a, b, e)) * md.act(e, m, k);
                    for (int f = 0; f < nm; ++f)
                        rhs += long(md.act(b, m, f)) * md.act(a, f, k);
                    if (lhs != rhs)
                        throw ValidationError(
                            "module: action multiplicities not associative");
                }
    auto admissible = [&](int a, int b, int m, int n, int e, int k) {
        return md.base.N(a, b, e) > 0 && md.act(e, m, n) > 0 &&
               md.act(b, m, k) > 0 && md.act(a, k, n) > 0;
    };
    for (auto& [key, v] : md.L) {
        auto [a, b, m, n, e, k] =
            std::tuple(key[0], key[1], key[2], key[3], key[4], key[5]);
        if (a == md.base.unit || b == md.base.unit)
            throw ValidationError("module: L entry on a unit slot");
        if (!admissible(a, b, m, n, e, k))
            throw ValidationError("module: L entry on inadmissible tuple");
        (void)v;
    }
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b) {
            if (a == md.base.unit || b == md.base.unit) continue;
            for (int m = 0; m < nm; ++m)
                for (int n = 0; n < nm; ++n)
                    for (int e = 0; e < na; ++e)
                        for (int k = 0; k < nm; ++k)
                            if (admissible(a, b, m, n, e, k) &&
                                !md.L.count({a, b, m, n, e, k}))
                                throw ValidationError(
                                    "module: missing L entry on admissible "
                                    "tuple");
        }
    Calculus C = module_calculus(md);
    CheckReport rep;
    rep.suite = "module-pentagon";
    rep.instance = md.name;
    rep.tol = tol;
    verify_pentagons(
        C, tol,
        [](const std::string& p) { return p == "00000" || p == "00001"; },
        rep, jobs);
    return rep;
}

ObjectDecomposition internal_hom(const ModuleData& md, int m, int n) {
    ObjectDecomposition d;
    for (int a = 0; a < md.base.n(); ++a)
        if (md.act(a, m, n) > 0) d.mults[a] = md.act(a, m, n);
    return d;
}

ObjectDecomposition internal_cohom(const ModuleData& md, int m, int n) {
    ObjectDecomposition d;
    for (int a = 0; a < md.base.n(); ++a) {
        int v = md.act(md.base.dual[a], n, m);
        if (v > 0) d.mults[a] = v;
    }
    return d;
}

IhomMaps ihom_structure_maps(const ModuleData& md, int m,
                             const Tolerance& tol) {
    if (!md.multiplicity_free())
        throw UnsupportedMultiplicity(
            "ihom_structure_maps: multiplicity-free data required");
    Calculus C = module_calculus(md);
    const int na = md.base.n(), nm = md.nm();
    IhomMaps out;
    out.m = m;
    out.report.suite = "ihom-structure";
    out.report.instance = md.name;
    out.report.tol = tol;
    for (int a = 0; a < na; ++a) {
        Lab ad = C.dual_lab(la(a));
        // adjunction components: transport a channel basis a |> m -> n to
        // m -> a^v |> n and back; the round trip detects pentagon defects
        for (int n = 0; n < nm; ++n) {
            if (md.act(a, m, n) == 0) continue;
            Engine E1(C, {lm(m)});
            E1.lcoev_at(0, la(a));  // (a^v, a, m)
            E1.fuse(1, lm(n));      // (a^v, n)
            Scalar fwd = coefficient(E1, {m, n}, {m});
            out.adjunction[{a, n}] = fwd;
            Engine E2(C, {la(a), lm(m)});
            E2.split(1, ad, lm(n));  // (a, a^v, n)
            E2.lev_pair(0);          // (n)
            Scalar bwd = E2.scalar({n, m});
            out.report.note_cmp("ihom:adjunction", {a, m, n}, fwd * bwd,
                                Scalar(1), tol);
        }
        // triangle identity of the adjunction (a |> -) -| (a^v |> -)
        for (int mp = 0; mp < nm; ++mp) {
            if (md.act(a, m, mp) == 0) continue;
            Engine E(C, {la(a), lm(m)});
            E.lcoev_at(1, la(a));  // (a, a^v, a, m)
            E.lev_pair(0);         // (a, m)
            out.report.note_cmp("ihom:triangle", {a, m, mp},
                                coefficient(E, {mp, m}, {mp, m}), Scalar(1),
                                tol);
        }
        if (a == md.base.unit) continue;
        // tensor form Hom(m,n) (x) a^v -> (+)_{m'} Hom(m',n), componentwise
        for (int n = 0; n < nm; ++n)
            for (int c = 0; c < na; ++c) {
                if (md.act(c, m, n) == 0) continue;
                for (int b = 0; b < na; ++b) {
                    if (md.base.N(c, ad.idx, b) == 0) continue;
                    for (int mp = 0; mp < nm; ++mp) {
                        if (md.act(a, m, mp) == 0 || md.act(b, mp, n) == 0)
                            continue;
                        Engine E(C, {la(b), lm(mp)});
                        E.split(0, la(c), ad);    // (c, a^v, m')
                        E.split(2, la(a), lm(m));  // (c, a^v, a, m)
                        E.ev_pair(1);              // (c, m)
                        E.fuse(0, lm(n));          // (n)
                        out.tensor_form[{a, n, c, b, mp}] =
                            E.scalar({n, mp});
                    }
                }
            }
    }
    out.report.sort_failures();
    return out;
}

SerreData serre_data(const ModuleData& md, const Tolerance& tol) {
    if (!md.multiplicity_free())
        throw UnsupportedMultiplicity(
            "serre_data: multiplicity-free data required");
    const int na = md.base.n(), nm = md.nm();
    SerreData sd;
    sd.report.suite = "serre";
    sd.report.instance = md.name;
    sd.report.tol = tol;
    // object map from the Hom-duality at multiplicity level:
    //   act(a, n, S(m)) = act(a^v, m, n) for all a, n
    sd.object_map.assign(nm, -1);
    for (int m = 0; m < nm; ++m) {
        for (int cand = 0; cand < nm; ++cand) {
            bool ok = true;
            for (int a = 0; a < na && ok; ++a)
                for (int n = 0; n < nm && ok; ++n)
                    if (md.act(a, n, cand) != md.act(md.base.dual[a], m, n))
                        ok = false;
            if (ok) {
                if (sd.object_map[m] >= 0)
                    throw ValidationError(
                        "serre: object map not unique at label " +
                        md.mlabels[m]);
                sd.object_map[m] = cand;
            }
        }
        if (sd.object_map[m] < 0)
            throw ValidationError("serre: no object map value at label " +
                                  md.mlabels[m]);
    }
    for (int m = 0; m < nm; ++m)
        if (sd.object_map[m] != m)
            throw ValidationError(
                "serre: non-identity object map is unsupported; Hom-duality "
                "residual localizes at label " + md.mlabels[m]);
    // twist scalars: ratio of the two mixed duality closures of the action
    // projector, oriented to match the double-dual structure of the base on
    // regular modules
    Calculus C = module_calculus(md);
    for (int a = 0; a < na; ++a)
        for (int m = 0; m < nm; ++m)
            for (int mp = 0; mp < nm; ++mp) {
                if (md.act(a, m, mp) == 0) continue;
                Scalar s1 = closure_right(C, a, m, mp);
                Scalar s2 = closure_left(C, a, m, mp);
                sd.twist[{a, m, mp}] = s1 / s2;
            }
    // coherence pentagon of the twisted module structure:
    //   twist[e,m,m'] * delta[a,b,e] = twist[a,m'',m'] * twist[b,m,m'']
    auto delta = double_dual_structure(md.base);
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b)
            for (int e = 0; e < na; ++e) {
                if (md.base.N(a, b, e) == 0) continue;
                for (int m = 0; m < nm; ++m)
                    for (int mpp = 0; mpp < nm; ++mpp) {
                        if (md.act(b, m, mpp) == 0) continue;
                        for (int mp = 0; mp < nm; ++mp) {
                            if (md.act(a, mpp, mp) == 0 ||
                                md.act(e, m, mp) == 0)
                                continue;
                            sd.report.note_cmp(
                                "serre:coherence", {a, b, e, m, mpp, mp},
                                sd.twist[{e, m, mp}] * delta[{a, b, e}],
                                sd.twist[{a, mpp, mp}] *
                                    sd.twist[{b, m, mpp}],
                                tol);
                        }
                    }
            }
    sd.report.sort_failures();
    return sd;
}

static MultiplicativeSystem module_pivotal_system(const ModuleData& md,
                                                  const SerreData& sd,
                                                  const Assignment& p,
                                                  int root_order_bound) {
    MultiplicativeSystem sys;
    for (int m = 0; m < md.nm(); ++m)
        sys.unknowns.push_back("q_" + md.mlabels[m]);
    for (auto& u : sys.unknowns) sys.root_orders[u] = root_order_bound;
    sys.pins[sys.unknowns[0]] = Scalar(1);
    for (auto& [k, t] : sd.twist) {
        auto [a, m, mp] = std::tuple(k[0], k[1], k[2]);
        if (a == md.base.unit) continue;
        std::map<std::string, int> expo;
        expo[sys.unknowns[mp]] += 1;
        expo[sys.unknowns[m]] -= 1;
        sys.add(expo, p[a] / t, "module-pivotal");
    }
    return sys;
}

std::vector<Assignment> solve_module_pivotal(const ModuleData& md,
                                             const Assignment& p,
                                             const Tolerance& tol,
                                             int root_order_bound) {
    SerreData sd = serre_data(md, tol);
    return solve_multiplicative(
        module_pivotal_system(md, sd, p, root_order_bound), tol);
}

CheckReport verify_module_pivotal(const ModuleData& md, const Assignment& p,
                                  const Assignment& pt, const Tolerance& tol) {
    SerreData sd = serre_data(md, tol);
    CheckReport rep;
    rep.suite = "module-pivotal";
    rep.instance = md.name;
    rep.tol = tol;
    for (auto& [k, t] : sd.twist) {
        auto [a, m, mp] = std::tuple(k[0], k[1], k[2]);
        rep.note_cmp("module-pivotal:action", {a, m, mp}, t * pt[mp],
                     p[a] * pt[m], tol);
    }
    rep.sort_failures();
    return rep;
}

std::pair<std::vector<Scalar>, CheckReport> radford_module_components(
    const ModuleData& md, const Tolerance& tol) {
    SerreData sd = serre_data(md, tol);
    auto rA = radford_components(md.base);
    MultiplicativeSystem sys;
    for (int m = 0; m < md.nm(); ++m)
        sys.unknowns.push_back("r_" + md.mlabels[m]);
    for (auto& u : sys.unknowns) sys.root_orders[u] = 24;
    sys.pins[sys.unknowns[0]] = Scalar(1);
    for (auto& [k, t] : sd.twist) {
        auto [a, m, mp] = std::tuple(k[0], k[1], k[2]);
        if (a == md.base.unit) continue;
        std::map<std::string, int> expo;
        expo[sys.unknowns[mp]] += 1;
        expo[sys.unknowns[m]] -= 1;
        sys.add(expo, rA[a] / (t * t), "module-radford");
    }
    auto sols = solve_multiplicative(sys, tol);
    if (sols.empty())
        throw InconsistentSystem(
            "module radford components: no trivialization exists");
    std::vector<Scalar> r = sols.front();
    CheckReport rep;
    rep.suite = "module-radford";
    rep.instance = md.name;
    rep.tol = tol;
    for (auto& [k, t] : sd.twist) {
        auto [a, m, mp] = std::tuple(k[0], k[1], k[2]);
        rep.note_cmp("module-radford:naturality", {a, m, mp}, r[mp] * t * t,
                     rA[a] * r[m], tol);
    }
    rep.sort_failures();
    return {r, rep};
}

CheckReport check_spherical_module(const ModuleData& md, const Assignment& p,
                                   const Assignment& pt,
                                   const Tolerance& tol) {
    SerreData sd = serre_data(md, tol);
    auto [r, rrep] = radford_module_components(md, tol);
    CheckReport rep;
    rep.suite = "module-spherical";
    rep.instance = md.name;
    rep.tol = tol;
    rep.merge(rrep);
    for (int m = 0; m < md.nm(); ++m)
        rep.note_cmp("module-spherical:square", {m},
                     pt[sd.object_map[m]] * pt[m], r[m], tol);
    (void)p;
    rep.sort_failures();
    return rep;
}

ModuleData make_regular_module(const FusionData& fd) {
    ModuleData md;
    md.name = fd.name + ":regular";
    md.base = fd;
    md.mlabels = fd.labels;
    const int n = fd.n();
    md.action.assign(std::size_t(n) * n * n, 0);
    for (int a = 0; a < n; ++a)
        for (int m = 0; m < n; ++m)
            for (int c = 0; c < n; ++c)
                md.action[std::size_t(a) * n * n + std::size_t(m) * n + c] =
                    fd.N(a, m, c);
    md.L = fd.F;
    // tuples with the unit label in the module slot are unit-coherence
    // identities in the base, but genuine table entries as module data
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == fd.unit || b == fd.unit) continue;
            for (int e = 0; e < n; ++e)
                if (fd.N(a, b, e) > 0)
                    md.L[{a, b, fd.unit, e, e, b}] = Scalar(1);
        }
    return md;
}

ModuleData make_vec_module(const FusionData& fd) {
    ModuleData md;
    md.name = fd.name + ":vec";
    md.base = fd;
    md.mlabels = {"*"};
    md.action.assign(fd.n(), 1);
    for (int a = 0; a < fd.n(); ++a)
        for (int b = 0; b < fd.n(); ++b) {
            if (a == fd.unit || b == fd.unit) continue;
            for (int e = 0; e < fd.n(); ++e)
                if (fd.N(a, b, e) > 0) md.L[{a, b, 0, 0, e, 0}] = Scalar(1);
        }
    return md;
}

}  // namespace skelcat
