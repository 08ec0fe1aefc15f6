#include "skelcat/fusion.hpp"

namespace skelcat {

void validate_fusion(const FusionData& fd) {
    const int n = fd.n();
    if (n <= 0) throw ValidationError("fusion: empty label set");
    if (fd.unit < 0 || fd.unit >= n) throw ValidationError("fusion: bad unit");
    if (int(fd.dual.size()) != n) throw ValidationError("fusion: bad dual map");
    if (fd.Nmult.dims != std::vector<int>{n, n, n})
        throw ValidationError("fusion: bad multiplicity tensor shape");
    for (int a = 0; a < n; ++a) {
        int ad = fd.dual[a];
        if (ad < 0 || ad >= n || fd.dual[ad] != a)
            throw ValidationError("fusion: dual map is not an involution");
        for (int b = 0; b < n; ++b) {
            if (fd.N(fd.unit, a, b) != (a == b ? 1 : 0) ||
                fd.N(a, fd.unit, b) != (a == b ? 1 : 0))
                throw ValidationError("fusion: unit constraint violated");
            int want = (b == ad) ? 1 : 0;
            if (fd.N(a, b, fd.unit) != want || fd.N(b, a, fd.unit) != want)
                throw ValidationError("fusion: dual/unit multiplicities wrong");
            for (int c = 0; c < n; ++c)
                if (fd.N(a, b, c) < 0)
                    throw ValidationError("fusion: negative multiplicity");
        }
    }
    // associativity of multiplicities
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    long lhs = 0, rhs = 0;
                    for (int e = 0; e < n; ++e) {
                        lhs += long(fd.N(a, b, e)) * fd.N(e, c, d);
                        rhs += long(fd.N(b, c, e)) * fd.N(a, e, d);
                    }
                    if (lhs != rhs)
                        throw ValidationError(
                            "fusion: multiplicities not associative");
                }
    // F coverage on admissible non-unit tuples
    for (auto& [k, v] : fd.F) {
        auto [a, b, c, d, e, f] = std::tuple(k[0], k[1], k[2], k[3], k[4], k[5]);
        if (!fd.admissible(a, b, c, d, e, f))
            throw ValidationError("fusion: F entry on inadmissible tuple");
        (void)v;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (a == fd.unit || b == fd.unit || c == fd.unit) continue;
                for (int d = 0; d < n; ++d)
                    for (int e = 0; e < n; ++e)
                        for (int f = 0; f < n; ++f)
                            if (fd.admissible(a, b, c, d, e, f) &&
                                !fd.F.count({a, b, c, d, e, f}))
                                throw ValidationError(
                                    "fusion: missing F entry on admissible "
                                    "tuple");
            }
}

Calculus fusion_calculus(const FusionData& fd) {
    Calculus C;
    const int n = fd.n();
    C.nlab = {n, 0, 0, 0};
    C.unitA = fd.unit;
    C.dual[0] = fd.dual;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (fd.N(a, b, c) > 0)
                    C.set_mult({Cell::A, a}, {Cell::A, b}, c, fd.N(a, b, c));
    for (auto& [k, v] : fd.F)
        C.set_assoc({Cell::A, k[0]}, {Cell::A, k[1]}, {Cell::A, k[2]}, k[3],
                    k[4], k[5], v);
    C.solve_duals();
    return C;
}

CheckReport verify_pentagon(const FusionData& fd, const Tolerance& tol,
                            int jobs) {
    validate_fusion(fd);
    Calculus C = fusion_calculus(fd);
    CheckReport rep;
    rep.suite = "pentagon";
    rep.instance = fd.name;
    rep.tol = tol;
    verify_pentagons(C, tol, [](const std::string& p) { return p == "00000"; },
                     rep, jobs);
    return rep;
}

DualityData ev_coev_data(const FusionData& fd) {
    Calculus C = fusion_calculus(fd);
    DualityData d;
    d.ev = C.ev_[0];
    d.coev = C.coev_[0];
    d.lev = C.lev_[0];
    d.lcoev = C.lcoev_[0];
    d.snake_residual = C.snake_resid_[0];
    return d;
}

std::map<std::array<int, 3>, Scalar> double_dual_structure(
    const FusionData& fd) {
    if (!fd.multiplicity_free())
        throw UnsupportedMultiplicity(
            "double_dual_structure: multiplicity-free data required");
    Calculus C = fusion_calculus(fd);
    std::map<std::array<int, 3>, Scalar> out;
    for (int a = 0; a < fd.n(); ++a)
        for (int b = 0; b < fd.n(); ++b)
            for (int c = 0; c < fd.n(); ++c)
                if (fd.N(a, b, c) == 1)
                    out[{a, b, c}] =
                        Scalar(1) / double_dual_scalar(C, {Cell::A, a},
                                                       {Cell::A, b},
                                                       {Cell::A, c});
    return out;
}

std::vector<Scalar> radford_components(const FusionData& fd, CheckReport* rep,
                                       const Tolerance& tol) {
    Calculus C = fusion_calculus(fd);
    std::vector<Scalar> r(fd.n());
    for (int a = 0; a < fd.n(); ++a)
        r[a] = C.radford_component({Cell::A, a});
    if (rep) {
        rep->suite = "radford-monoidality";
        rep->instance = fd.name;
        rep->tol = tol;
        auto delta = double_dual_structure(fd);
        for (auto& [k, d] : delta)
            rep->note_cmp("radford:monoidality", {k[0], k[1], k[2]},
                          r[k[0]] * r[k[1]], d * d * r[k[2]], tol);
        rep->sort_failures();
    }
    return r;
}

static MultiplicativeSystem pivotal_system(const FusionData& fd,
                                           int root_order_bound) {
    auto delta = double_dual_structure(fd);
    MultiplicativeSystem sys;
    for (int a = 0; a < fd.n(); ++a) sys.unknowns.push_back("p_" + fd.labels[a]);
    for (int a = 0; a < fd.n(); ++a)
        sys.root_orders[sys.unknowns[a]] = root_order_bound;
    sys.pins[sys.unknowns[fd.unit]] = Scalar(1);
    for (auto& [k, d] : delta) {
        std::map<std::string, int> expo;
        expo[sys.unknowns[k[0]]] += 1;
        expo[sys.unknowns[k[1]]] += 1;
        expo[sys.unknowns[k[2]]] -= 1;
        sys.add(expo, d, "pivotal");
    }
    return sys;
}

std::vector<Assignment> solve_pivotal(const FusionData& fd,
                                      const Tolerance& tol,
                                      int root_order_bound) {
    return solve_multiplicative(pivotal_system(fd, root_order_bound), tol);
}

std::vector<Assignment> solve_pivotal_brute(const FusionData& fd,
                                            const Tolerance& tol,
                                            int root_order_bound) {
    return solve_multiplicative_brute(pivotal_system(fd, root_order_bound),
                                      tol);
}

CheckReport verify_pivotal(const FusionData& fd, const std::vector<Scalar>& p,
                           const Tolerance& tol) {
    CheckReport rep;
    rep.suite = "pivotal";
    rep.instance = fd.name;
    rep.tol = tol;
    if (int(p.size()) != fd.n())
        throw ValidationError("verify_pivotal: wrong length");
    auto delta = double_dual_structure(fd);
    rep.note_cmp("pivotal:unit", {fd.unit}, p[fd.unit], Scalar(1), tol);
    for (auto& [k, d] : delta)
        rep.note_cmp("pivotal:monoidality", {k[0], k[1], k[2]},
                     p[k[0]] * p[k[1]], d * p[k[2]], tol);
    rep.sort_failures();
    return rep;
}

std::pair<std::vector<Scalar>, std::vector<Scalar>> quantum_dimensions(
    const FusionData& fd, const std::vector<Scalar>& p) {
    Calculus C = fusion_calculus(fd);
    std::vector<Scalar> dp(fd.n()), dm(fd.n());
    for (int a = 0; a < fd.n(); ++a) {
        Lab x{Cell::A, a}, xd = C.dual_lab(x);
        dp[a] = C.coev(x) * p[a] * C.ev(xd);
        dm[a] = C.coev(xd) * (Scalar(1) / p[a]) * C.ev(x);
    }
    return {dp, dm};
}

SphericalVerdict check_spherical_tensor(const FusionData& fd,
                                        const std::vector<Scalar>& p,
                                        const Tolerance& tol) {
    SphericalVerdict v;
    auto r = radford_components(fd);
    auto [dp, dm] = quantum_dimensions(fd, p);
    v.dim_plus = dp;
    v.dim_minus = dm;
    for (int a = 0; a < fd.n(); ++a) {
        v.dsps_residual = std::max(v.dsps_residual, residual(p[a] * p[a], r[a]));
        v.trace_residual = std::max(v.trace_residual, residual(dp[a], dm[a]));
    }
    v.dsps = v.dsps_residual <= tol.abs_eps + tol.rel_eps;
    v.trace = v.trace_residual <= tol.abs_eps + tol.rel_eps;
    return v;
}

}  // namespace skelcat
