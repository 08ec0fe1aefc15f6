#include "skelcat/graded.hpp"

namespace skelcat {

namespace {

void note_int(CheckReport& rep, const std::string& diagram,
              std::vector<int> idx, bool ok) {
    rep.note(diagram, std::move(idx), ok ? 0.0 : 1.0, rep.tol, 0.5);
}

}  // namespace

int GroupTable::identity() const {
    for (int e = 0; e < order(); ++e) {
        bool ok = true;
        for (int g = 0; g < order() && ok; ++g)
            if (op(e, g) != g || op(g, e) != g) ok = false;
        if (ok) return e;
    }
    throw ValidationError("group: no identity element");
}

int GroupTable::inverse(int g) const {
    int e = identity();
    for (int h = 0; h < order(); ++h)
        if (op(g, h) == e && op(h, g) == e) return h;
    throw ValidationError("group: element without inverse");
}

GroupTable make_cyclic_group(int n) {
    GroupTable G;
    G.elems.push_back("e");
    for (int i = 1; i < n; ++i) G.elems.push_back("c" + std::to_string(i));
    G.mul.resize(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) G.mul[std::size_t(a) * n + b] = (a + b) % n;
    return G;
}

void validate_group(const GroupTable& G) {
    const int n = G.order();
    if (n <= 0) throw ValidationError("group: empty");
    if (int(G.mul.size()) != n * n)
        throw ValidationError("group: bad table shape");
    for (int v : G.mul)
        if (v < 0 || v >= n) throw ValidationError("group: entry out of range");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (G.op(G.op(a, b), c) != G.op(a, G.op(b, c)))
                    throw ValidationError("group: not associative");
    G.identity();
    for (int g = 0; g < n; ++g) G.inverse(g);
}

CheckReport validate_grading(const FusionData& fd, const GradingData& g) {
    validate_group(g.group);
    CheckReport rep;
    rep.suite = "grading";
    rep.instance = fd.name;
    rep.tol = Tolerance{0.0, 0.0};
    if (int(g.deg.size()) != fd.n())
        throw ValidationError("grading: wrong degree count");
    for (int d : g.deg)
        if (d < 0 || d >= g.group.order())
            throw ValidationError("grading: degree out of range");
    note_int(rep, "grading:unit", {fd.unit},
             g.deg[fd.unit] == g.group.identity());
    std::vector<char> hit(g.group.order(), 0);
    for (int d : g.deg) hit[d] = 1;
    for (int e = 0; e < g.group.order(); ++e)
        note_int(rep, "grading:faithful", {e}, hit[e] == 1);
    for (int a = 0; a < fd.n(); ++a)
        for (int b = 0; b < fd.n(); ++b)
            for (int c = 0; c < fd.n(); ++c)
                if (fd.N(a, b, c) > 0)
                    note_int(rep, "grading:multiplicative", {a, b, c},
                             g.group.op(g.deg[a], g.deg[b]) == g.deg[c]);
    rep.sort_failures();
    return rep;
}

CheckReport validate_grading(const ModuleData& md, const GradingData& gbase,
                             const std::vector<int>& deg_m) {
    CheckReport rep = validate_grading(md.base, gbase);
    rep.instance = md.name;
    if (int(deg_m.size()) != md.nm())
        throw ValidationError("grading: wrong module degree count");
    for (int a = 0; a < md.base.n(); ++a)
        for (int m = 0; m < md.nm(); ++m)
            for (int k = 0; k < md.nm(); ++k)
                if (md.act(a, m, k) > 0)
                    note_int(rep, "grading:action", {a, m, k},
                             gbase.group.op(gbase.deg[a], deg_m[m]) ==
                                 deg_m[k]);
    rep.sort_failures();
    return rep;
}

CheckReport validate_grading(const MoritaContextData& ctx,
                             const ContextGrading& g) {
    GradingData ga{g.group, g.deg_a};
    CheckReport rep = validate_grading(ctx.A, ga);
    rep.instance = ctx.name;
    if (int(g.deg_m.size()) != ctx.nm() || int(g.deg_b.size()) != ctx.nb() ||
        int(g.deg_n.size()) != ctx.nn())
        throw ValidationError("grading: wrong degree count on a cell");
    CheckReport repb = validate_grading(ctx.B, GradingData{g.group, g.deg_b});
    rep.merge(repb);
    auto degree = [&](Cell c, int i) {
        switch (c) {
            case Cell::A: return g.deg_a[i];
            case Cell::M: return g.deg_m[i];
            case Cell::B: return g.deg_b[i];
            default: return g.deg_n[i];
        }
    };
    auto mults = [&](Cell cx, int x, Cell cy, int y, int z) {
        switch (int(cx) * 4 + int(cy)) {
            case 0 * 4 + 0: return ctx.A.N(x, y, z);
            case 0 * 4 + 1: return ctx.M.act(x, y, z);
            case 1 * 4 + 2: return ctx.mb(x, y, z);
            case 1 * 4 + 3: return ctx.mixt(x, y).mult(z);
            case 3 * 4 + 1: return ctx.mixtd(x, y).mult(z);
            case 2 * 4 + 2: return ctx.B.N(x, y, z);
            case 2 * 4 + 3: return ctx.bn(x, y, z);
            default: return ctx.na_(x, y, z);
        }
    };
    const std::array<std::array<Cell, 2>, 6> mixed{{
        {Cell::A, Cell::M}, {Cell::M, Cell::B}, {Cell::M, Cell::N},
        {Cell::N, Cell::M}, {Cell::B, Cell::N}, {Cell::N, Cell::A},
    }};
    auto count = [&](Cell c) {
        switch (c) {
            case Cell::A: return ctx.na();
            case Cell::M: return ctx.nm();
            case Cell::B: return ctx.nb();
            default: return ctx.nn();
        }
    };
    for (auto [cx, cy] : mixed) {
        Cell cz = cell_of(cell_src(cx), cell_tgt(cy));
        for (int x = 0; x < count(cx); ++x)
            for (int y = 0; y < count(cy); ++y)
                for (int z = 0; z < count(cz); ++z)
                    if (mults(cx, x, cy, y, z) > 0) {
                        const char* tags = "ambn";
                        std::string tag = std::string("grading:mixed-") +
                                          tags[int(cx)] + tags[int(cy)];
                        note_int(rep, tag, {x, y, z},
                                 g.group.op(degree(cx, x), degree(cy, y)) ==
                                     degree(cz, z));
                    }
    }
    rep.sort_failures();
    return rep;
}

CheckReport graded_dual_degree_check(const MoritaContextData& ctx,
                                     const ContextGrading& g) {
    CheckReport rep;
    rep.suite = "graded-duals";
    rep.instance = ctx.name;
    rep.tol = Tolerance{0.0, 0.0};
    auto check = [&](const char* tag, int deg_x, int deg_dual,
                     std::vector<int> idx) {
        note_int(rep, tag, std::move(idx),
                 deg_dual == g.group.inverse(deg_x));
    };
    for (int a = 0; a < ctx.na(); ++a)
        check("dualdeg:a", g.deg_a[a], g.deg_a[ctx.A.dual[a]], {a});
    for (int b = 0; b < ctx.nb(); ++b)
        check("dualdeg:b", g.deg_b[b], g.deg_b[ctx.B.dual[b]], {b});
    // bridge duals mirror labels across the two bridges, on both sides
    for (int m = 0; m < ctx.nm(); ++m) {
        check("dualdeg:m", g.deg_m[m], g.deg_n[m], {m});
        check("dualdeg:n", g.deg_n[m], g.deg_m[m], {m});
    }
    rep.sort_failures();
    return rep;
}

CheckReport graded_object_map_check(const std::vector<int>& object_map,
                                    const GroupTable& G,
                                    const std::vector<int>& deg_m) {
    validate_group(G);
    if (object_map.size() != deg_m.size())
        throw ValidationError("graded object map: size mismatch");
    CheckReport rep;
    rep.suite = "graded-serre";
    rep.tol = Tolerance{0.0, 0.0};
    for (std::size_t m = 0; m < object_map.size(); ++m)
        note_int(rep, "serredeg:preserved", {int(m), object_map[m]},
                 deg_m[object_map[m]] == deg_m[m]);
    rep.sort_failures();
    return rep;
}

CheckReport graded_serre_check(const ModuleData& md,
                               const std::vector<int>& deg_m,
                               const GroupTable& G, const Tolerance& tol) {
    SerreData sd = serre_data(md, tol);
    CheckReport rep = graded_object_map_check(sd.object_map, G, deg_m);
    rep.instance = md.name;
    return rep;
}

FusionData restrict_degree(const FusionData& fd, const GradingData& g,
                           int element) {
    if (element != g.group.identity())
        throw ValidationError(
            "restrict_degree: only the identity component is closed");
    FusionData out;
    out.name = fd.name + ":deg-e";
    std::vector<int> keep, pos(fd.n(), -1);
    for (int a = 0; a < fd.n(); ++a)
        if (g.deg[a] == element) {
            pos[a] = int(keep.size());
            keep.push_back(a);
            out.labels.push_back(fd.labels[a]);
        }
    const int n = int(keep.size());
    out.unit = pos[fd.unit];
    out.dual.resize(n);
    out.Nmult.dims = {n, n, n};
    out.Nmult.data.assign(std::size_t(n) * n * n, 0);
    for (int i = 0; i < n; ++i) {
        if (pos[fd.dual[keep[i]]] < 0)
            throw ValidationError("restrict_degree: component not self-dual");
        out.dual[i] = pos[fd.dual[keep[i]]];
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                out.Nmult.at({i, j, k}) = fd.N(keep[i], keep[j], keep[k]);
    }
    for (auto& [k, v] : fd.F)
        if (pos[k[0]] >= 0 && pos[k[1]] >= 0 && pos[k[2]] >= 0 &&
            pos[k[3]] >= 0 && pos[k[4]] >= 0 && pos[k[5]] >= 0)
            out.F[{pos[k[0]], pos[k[1]], pos[k[2]], pos[k[3]], pos[k[4]],
                   pos[k[5]]}] = v;
    return out;
}

ContextGrading make_cyclic_context_grading(const MoritaContextData& ctx) {
    const int n = ctx.na();
    if (ctx.nm() != n || ctx.nb() != n)
        throw ValidationError(
            "cyclic context grading: needs the regular context of a pointed "
            "cyclic base");
    ContextGrading g;
    g.group = make_cyclic_group(n);
    g.deg_a.resize(n);
    g.deg_m.resize(n);
    g.deg_b.resize(n);
    g.deg_n.resize(n);
    for (int i = 0; i < n; ++i) {
        g.deg_a[i] = i;
        g.deg_m[i] = i;
        g.deg_b[i] = i;
        g.deg_n[i] = (n - i) % n;
    }
    return g;
}

}  // namespace skelcat
