#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "skelcat/instances.hpp"
#include "skelcat/morita.hpp"

using namespace skelcat;

namespace {

const Tolerance tol{};

std::vector<MoritaContextData> corpus() {
    return {make_regular_context(make_vec()),
            make_regular_context(make_pointed_cyclic(2, 0)),
            make_regular_context(make_pointed_cyclic(2, 1)),
            make_regular_context(make_pointed_cyclic(3, 1)),
            make_regular_context(make_fibonacci()),
            make_pointed_context(2),
            make_pointed_context(3)};
}

bool close(Scalar a, Scalar b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_CASE("context coherence: all pentagon families on the whole corpus") {
    for (auto& ctx : corpus()) {
        auto rep = verify_context_coherence(ctx, tol);
        CHECK(rep.pass);
        CHECK(rep.checked > 0);
        CHECK(rep.worst.resid < 1e-9);
    }
}

TEST_CASE("perturbed mixed associator fails coherence, localized") {
    auto ctx = make_pointed_context(2);
    for (auto& [k, v] : ctx.assoc)
        if (Cell(k[0]) == Cell::A && Cell(k[1]) == Cell::M &&
            Cell(k[2]) == Cell::B) {
            v = -v;  // negate a one-dimensional mixed component
            break;
        }
    auto rep = verify_context_coherence(ctx, tol);
    CHECK_FALSE(rep.pass);
    CHECK(rep.worst.resid > 1e-3);
    // the two base corners stay coherent; failures live on mixed families
    for (auto& f : rep.failures) {
        auto p = f.diagram.substr(f.diagram.size() - 5);
        CHECK(p != "00000");
        CHECK(p != "11111");
    }
}

TEST_CASE("actions that do not commute are rejected") {
    // Z/2 acting on the regular Z/3 bridge: acting trivially commutes with
    // the left translations, acting by a transposition does not, while both
    // tables are unit-correct and associative
    auto A = make_pointed_cyclic(3, 0);
    auto B = make_pointed_cyclic(2, 0);
    auto md = make_regular_module(A);
    std::vector<int> ra(3 * 2 * 3, 0);
    for (int m = 0; m < 3; ++m)
        for (int b = 0; b < 2; ++b) ra[(m * 2 + b) * 3 + m] = 1;
    CHECK_NOTHROW(build_canonical_context(md, B, ra));
    for (int m = 0; m < 3; ++m) {
        ra[(m * 2 + 1) * 3 + m] = 0;
        int sw = m == 0 ? 1 : (m == 1 ? 0 : 2);  // transposition (0 1)
        ra[(m * 2 + 1) * 3 + sw] = 1;
    }
    CHECK_THROWS_AS(build_canonical_context(md, B, ra), ActionsDoNotCommute);
}

TEST_CASE("dimension tier: no scalars means no structure ops") {
    auto A = make_pointed_cyclic(2, 0);
    auto md = make_regular_module(A);
    std::vector<int> ra(8, 0);
    for (int m = 0; m < 2; ++m)
        for (int b = 0; b < 2; ++b) ra[(m * 2 + b) * 2 + (m + b) % 2] = 1;
    auto ctx = build_canonical_context(md, A, ra);
    CHECK_FALSE(ctx.structure_tier);
    CHECK(duality_dim_suite(ctx).pass);
    CHECK(strong_context_suite(ctx).pass);
    CHECK_THROWS_AS(verify_context_coherence(ctx, tol),
                    UnsupportedMultiplicity);
    CHECK_THROWS_AS(double_dual_suite(ctx, tol), UnsupportedMultiplicity);
}

TEST_CASE("derived products of the pointed context") {
    auto ctx = make_pointed_context(2);
    CHECK(ctx.nm() == 1);
    CHECK(ctx.nn() == 1);
    // <*, *^> = 1 (+) g and [*^, *] = 1 (+) x
    CHECK(ctx.mixt(0, 0).mult(0) == 1);
    CHECK(ctx.mixt(0, 0).mult(1) == 1);
    CHECK(ctx.mixtd(0, 0).mult(0) == 1);
    CHECK(ctx.mixtd(0, 0).mult(1) == 1);
    // alpha carries the Fourier pairing: alpha[e=g, f=x] = chi_x(g)/2
    CHECK(close(ctx.alpha(0, 0, 0, 0, 0, 0), Scalar(0.5)));
    CHECK(close(ctx.alpha(0, 0, 0, 0, 1, 1), Scalar(-0.5)));
    CHECK(close(ctx.beta(0, 0, 0, 0, 1, 1), Scalar(-1)));
    // regular Fibonacci context: <tau, tau^> = 1 (+) tau
    auto fib = make_regular_context(make_fibonacci());
    CHECK(fib.mixt(1, 1).mult(0) == 1);
    CHECK(fib.mixt(1, 1).mult(1) == 1);
}

TEST_CASE("duals of 1-morphisms and snake identities") {
    for (auto& ctx : corpus()) {
        auto rep = snake_suite(ctx, tol);
        CHECK(rep.pass);
        CHECK(rep.worst.resid < 1e-9);
        // the dual of a bridge label is its mirror, elementwise on sums
        OneMorphism all{Cell::M, {}};
        for (int m = 0; m < ctx.nm(); ++m) all.labels.push_back(m);
        for (auto side : {DualSide::Right, DualSide::Left}) {
            auto d = dual_1morphism(ctx, all, side);
            CHECK(d.dual.cell == Cell::N);
            CHECK(d.dual.labels == all.labels);
            for (double r : d.snake_residual) CHECK(r < 1e-9);
        }
    }
    // the pointed bridge evaluation carries the group order
    auto ctx = make_pointed_context(3);
    auto d = dual_1morphism(ctx, {Cell::M, {0}}, DualSide::Right);
    CHECK(close(d.ev[0], Scalar(3)));
    CHECK(close(d.coev[0], Scalar(1)));
}

TEST_CASE("duality dimension families are exact on the corpus") {
    for (auto& ctx : corpus()) {
        auto rep = duality_dim_suite(ctx);
        CHECK(rep.pass);
        CHECK(rep.worst.resid == 0.0);
        CHECK(rep.checked >= 24);
    }
    // an unbalanced right action breaks the families without breaking
    // associativity: Fibonacci bridge against a pointed second base
    auto ctx = make_regular_context(make_fibonacci());
    ctx.B = make_pointed_cyclic(2, 0);
    ctx.act_mb = {1, 0, 0, 1, 0, 1, 1, 0};
    ctx.act_bn = ctx.act_mb;
    auto rep = duality_dim_suite(ctx);
    CHECK_FALSE(rep.pass);
}

TEST_CASE("double duals match the relative Serre data on both bridges") {
    for (auto& ctx : corpus()) {
        auto rep = double_dual_suite(ctx, tol);
        CHECK(rep.pass);
        CHECK(rep.worst.resid < 1e-9);
    }
}

TEST_CASE("pivotal census closes under transport") {
    for (auto& ctx : corpus()) {
        auto ps = solve_pivotal(ctx.A, tol);
        CHECK(!ps.empty());
        bool some_branch = false;
        for (auto& p : ps)
            for (auto& pt : solve_module_pivotal(ctx.M, p, tol)) {
                some_branch = true;
                auto tr = pivotal_transport(ctx, p, pt, tol);
                CHECK(tr.report.pass);
                auto rep = pivotal_morita_suite(ctx, p, pt, tr.q, tr.phat, tol);
                CHECK(rep.pass);
                CHECK(rep.worst.resid < 1e-9);
            }
        CHECK(some_branch);
    }
}

TEST_CASE("regular Z/2 branches transport to the matching character") {
    auto ctx = make_regular_context(make_pointed_cyclic(2, 0));
    auto ps = solve_pivotal(ctx.A, tol);
    REQUIRE(ps.size() == 2);
    for (auto& p : ps) {
        auto pts = solve_module_pivotal(ctx.M, p, tol);
        REQUIRE(pts.size() == 1);
        auto tr = pivotal_transport(ctx, p, pts[0], tol);
        CHECK(close(tr.q[0], Scalar(1)));
        CHECK(close(tr.q[1], p[1]));  // q is the character matching p
        CHECK(close(tr.phat[1], p[1]));
    }
}

TEST_CASE("wrong second-base components fail at the right-action families") {
    auto run = [&](MoritaContextData ctx, const Assignment& p) {
        auto pts = solve_module_pivotal(ctx.M, p, tol);
        REQUIRE(pts.size() == 1);
        auto tr = pivotal_transport(ctx, p, pts[0], tol);
        Assignment bad = tr.q;
        for (std::size_t b = 0; b < bad.size(); ++b)
            if (int(b) != ctx.B.unit) bad[b] = -bad[b];  // the other character
        auto rep = pivotal_morita_suite(ctx, p, pts[0], bad, tr.phat, tol);
        CHECK_FALSE(rep.pass);
        for (auto& f : rep.failures) {
            bool localized = f.diagram == "pivotal:mb" ||
                             f.diagram == "pivotal:bn" ||
                             f.diagram == "pivotal:nm";
            CHECK(localized);
        }
        // the second-base families themselves must appear among failures
        bool hit_bn = false;
        for (auto& f : rep.failures) hit_bn |= f.diagram == "pivotal:bn";
        CHECK(hit_bn);
    };
    run(make_pointed_context(2), {Scalar(1), Scalar(1)});
    run(make_regular_context(make_pointed_cyclic(2, 0)),
        {Scalar(1), Scalar(-1)});
}

TEST_CASE("radford pseudo squares hold; corners match the one-cell layer") {
    for (auto& ctx : corpus()) {
        auto rad = radford_pseudo_suite(ctx, tol);
        CHECK(rad.report.pass);
        CHECK(rad.report.worst.resid < 1e-9);
        // the base-corner components reproduce the one-cell computation
        auto ra = radford_components(ctx.A);
        auto rb = radford_components(ctx.B);
        for (int a = 0; a < ctx.na(); ++a) CHECK(close(rad.ra[a], ra[a]));
        for (int b = 0; b < ctx.nb(); ++b) CHECK(close(rad.rb[b], rb[b]));
    }
}

TEST_CASE("negated radford component breaks exactly its squares") {
    auto ctx = make_regular_context(make_pointed_cyclic(2, 1));
    auto rad = radford_pseudo_suite(ctx, tol);
    REQUIRE(rad.report.pass);
    Calculus C = morita_calculus(ctx);
    auto comp = [&](Lab x, const RadfordPseudoData& d) -> Scalar {
        switch (x.cell) {
            case Cell::A: return d.ra[x.idx];
            case Cell::M: return d.rm[x.idx];
            case Cell::B: return d.rb[x.idx];
            default: return d.rn[x.idx];
        }
    };
    RadfordPseudoData bad = rad;
    bad.rm[1] = -bad.rm[1];
    int broken = 0;
    for (auto cx : {Cell::A, Cell::M}) {
        Lab lx{cx, 1}, ly{cx == Cell::A ? Cell::M : Cell::B, 1};
        for (int z : C.channels(lx, ly)) {
            Lab lz{Calculus::prod_cell(lx, ly), z};
            Scalar dd = oriented_double_dual(C, lx, ly, lz);
            if (std::abs(comp(lx, bad) * comp(ly, bad) -
                         dd * dd * comp(lz, bad)) > 1e-3)
                ++broken;
        }
    }
    CHECK(broken > 0);
}

TEST_CASE("strong context shadows are exact on the corpus") {
    for (auto& ctx : corpus()) {
        auto rep = strong_context_suite(ctx);
        CHECK(rep.pass);
        CHECK(rep.worst.resid == 0.0);
    }
}

TEST_CASE("verdicts are invariant under relabeling of simples") {
    std::mt19937 rng(20240817);
    auto shuffled = [&](int n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    };
    for (auto& ctx : corpus()) {
        auto rel = relabel_context(ctx, shuffled(ctx.na()),
                                   shuffled(ctx.nm()), shuffled(ctx.nb()));
        auto a = verify_context_coherence(ctx, tol);
        auto b = verify_context_coherence(rel, tol);
        CHECK(a.pass == b.pass);
        CHECK(a.checked == b.checked);
        CHECK(duality_dim_suite(rel).pass == duality_dim_suite(ctx).pass);
        CHECK(strong_context_suite(rel).pass == strong_context_suite(ctx).pass);
        CHECK(double_dual_suite(rel, tol).pass ==
              double_dual_suite(ctx, tol).pass);
        CHECK(radford_pseudo_suite(rel, tol).report.pass ==
              radford_pseudo_suite(ctx, tol).report.pass);
        CHECK(snake_suite(rel, tol).pass == snake_suite(ctx, tol).pass);
    }
}

TEST_CASE("coherence is deterministic across job counts") {
    auto ctx = make_regular_context(make_pointed_cyclic(3, 1));
    auto r1 = verify_context_coherence(ctx, tol, 1);
    auto r4 = verify_context_coherence(ctx, tol, 4);
    CHECK(r1.pass == r4.pass);
    CHECK(r1.checked == r4.checked);
    CHECK(r1.worst.resid == r4.worst.resid);
    CHECK(r1.worst.diagram == r4.worst.diagram);
}
