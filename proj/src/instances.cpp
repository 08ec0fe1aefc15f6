#include "skelcat/instances.hpp"

#include <numbers>

namespace skelcat {

namespace {

Scalar cyc_cocycle(int n, int q, int a, int b, int c) {
    double ang = 2.0 * std::numbers::pi * q * a * ((b + c) / n) / double(n);
    return Scalar(std::cos(ang), std::sin(ang));
}

}  // namespace

FusionData make_vec() {
    FusionData fd;
    fd.name = "vec";
    fd.labels = {"1"};
    fd.unit = 0;
    fd.dual = {0};
    fd.Nmult = LabeledTensor({"a", "b", "c"}, {1, 1, 1});
    fd.Nmult.at({0, 0, 0}) = 1;
    return fd;
}

FusionData make_pointed_cyclic(int n, int q) {
    if (n < 2) throw ValidationError("make_pointed_cyclic: n >= 2 required");
    FusionData fd;
    fd.name = "pointed-z" + std::to_string(n) + "-q" + std::to_string(q % n);
    for (int i = 0; i < n; ++i) fd.labels.push_back("g" + std::to_string(i));
    fd.labels[0] = "1";
    fd.unit = 0;
    fd.dual.resize(n);
    for (int i = 0; i < n; ++i) fd.dual[i] = (n - i) % n;
    fd.Nmult = LabeledTensor({"a", "b", "c"}, {n, n, n});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) fd.Nmult.at({a, b, (a + b) % n}) = 1;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (a == 0 || b == 0 || c == 0) continue;
                int e = (a + b) % n, f = (b + c) % n, d = (a + b + c) % n;
                fd.F[{a, b, c, d, e, f}] = cyc_cocycle(n, q, a, b, c);
            }
    // 3-cocycle sanity
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    Scalar lhs = cyc_cocycle(n, q, b, c, d) *
                                 cyc_cocycle(n, q, a, (b + c) % n, d) *
                                 cyc_cocycle(n, q, a, b, c);
                    Scalar rhs = cyc_cocycle(n, q, (a + b) % n, c, d) *
                                 cyc_cocycle(n, q, a, b, (c + d) % n);
                    if (residual(lhs, rhs) > 1e-12)
                        throw ValidationError("make_pointed_cyclic: not a cocycle");
                }
    return fd;
}

FusionData make_fibonacci() {
    FusionData fd;
    fd.name = "fibonacci";
    fd.labels = {"1", "t"};
    fd.unit = 0;
    fd.dual = {0, 1};
    fd.Nmult = LabeledTensor({"a", "b", "c"}, {2, 2, 2});
    fd.Nmult.at({0, 0, 0}) = 1;
    fd.Nmult.at({0, 1, 1}) = 1;
    fd.Nmult.at({1, 0, 1}) = 1;
    fd.Nmult.at({1, 1, 0}) = 1;
    fd.Nmult.at({1, 1, 1}) = 1;
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    fd.F[{1, 1, 1, 0, 1, 1}] = Scalar(1);
    fd.F[{1, 1, 1, 1, 0, 0}] = Scalar(1.0 / phi);
    fd.F[{1, 1, 1, 1, 0, 1}] = Scalar(1.0 / std::sqrt(phi));
    fd.F[{1, 1, 1, 1, 1, 0}] = Scalar(1.0 / std::sqrt(phi));
    fd.F[{1, 1, 1, 1, 1, 1}] = Scalar(-1.0 / phi);
    return fd;
}

FusionData make_pointed(const GroupTable& G, const std::vector<Scalar>& omega,
                        const Tolerance& tol) {
    validate_group(G);
    const int n = G.order();
    if (int(omega.size()) != n * n * n)
        throw NotACocycle("make_pointed: table needs |G|^3 entries");
    const int e = G.identity();
    auto w = [&](int a, int b, int c) {
        return omega[(std::size_t(a) * n + b) * n + c];
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if ((a == e || b == e || c == e) &&
                    !approx_eq(w(a, b, c), Scalar(1), tol))
                    throw NotACocycle("make_pointed: not normalized");
                for (int d = 0; d < n; ++d) {
                    Scalar lhs = w(b, c, d) * w(a, G.op(b, c), d) * w(a, b, c);
                    Scalar rhs = w(G.op(a, b), c, d) * w(a, b, G.op(c, d));
                    if (!approx_eq(lhs, rhs, tol))
                        throw NotACocycle(
                            "make_pointed: 3-cocycle identity fails");
                }
            }
    FusionData fd;
    fd.name = "pointed";
    fd.labels = G.elems;
    fd.unit = e;
    fd.dual.resize(n);
    for (int a = 0; a < n; ++a) fd.dual[a] = G.inverse(a);
    fd.Nmult = LabeledTensor({"a", "b", "c"}, {n, n, n});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) fd.Nmult.at({a, b, G.op(a, b)}) = 1;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (a == e || b == e || c == e) continue;
                fd.F[{a, b, c, G.op(G.op(a, b), c), G.op(a, b), G.op(b, c)}] =
                    w(a, b, c);
            }
    return fd;
}

std::vector<std::pair<std::string, InstanceFile>> bundled_corpus() {
    std::vector<std::pair<std::string, InstanceFile>> out;

    {
        InstanceFile f;
        f.fusion = {make_vec()};
        f.module = {make_regular_module(f.fusion[0])};
        out.emplace_back("vec.json", std::move(f));
    }

    auto pointed_regular = [](int n, int q, const char* file) {
        InstanceFile f;
        MoritaContextData ctx = make_regular_context(make_pointed_cyclic(n, q));
        f.fusion = {ctx.A, ctx.B};
        f.module = {ctx.M};
        f.context = ctx;
        f.context_grading = make_cyclic_context_grading(ctx);
        return std::pair<std::string, InstanceFile>(file, std::move(f));
    };
    out.push_back(pointed_regular(2, 0, "vec_z2_trivial.json"));
    out.back().second.module.push_back(
        make_vec_module(out.back().second.fusion[0]));
    out.push_back(pointed_regular(2, 1, "vec_z2_nontrivial.json"));
    out.push_back(pointed_regular(3, 1, "vec_z3.json"));

    {
        InstanceFile f;
        MoritaContextData ctx = make_regular_context(make_fibonacci());
        f.fusion = {ctx.A, ctx.B};
        f.module = {ctx.M};
        f.context = ctx;
        out.emplace_back("fib.json", std::move(f));
    }

    {
        InstanceFile f;
        MoritaContextData ctx = make_pointed_context(2);
        f.fusion = {ctx.A, ctx.B};
        f.module = {ctx.M};
        f.context = ctx;
        out.emplace_back("pointed_context.json", std::move(f));
    }

    {
        // deliberately inconsistent associator: structurally valid but the
        // pentagon fails, for exercising failure reporting
        InstanceFile f;
        FusionData fd = make_pointed_cyclic(2, 0);
        fd.name += ":broken";
        fd.F[{1, 1, 1, 1, 0, 0}] = Scalar(1.1);
        f.fusion = {fd};
        out.emplace_back("broken_pentagon.json", std::move(f));
    }

    {
        // grading counterexample: Fibonacci admits no faithful Z/2 grading
        InstanceFile f;
        f.fusion = {make_fibonacci()};
        f.grading = FusionGrading{"fibonacci",
                                  GradingData{make_cyclic_group(2), {0, 1}}};
        out.emplace_back("fib_z2_graded.json", std::move(f));
    }

    return out;
}

}  // namespace skelcat
