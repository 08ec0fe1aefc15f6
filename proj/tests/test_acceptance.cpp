// End-to-end acceptance gate: one pass/fail line per criterion, nonzero exit
// if any criterion fails.  Tolerances are pinned here on purpose.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "skelcat/cli.hpp"

using namespace skelcat;

namespace {

constexpr double kResid = 1e-9;
const Tolerance kTol{1e-9, 1e-9};

int g_failed = 0;

void report(int k, bool ok, const std::string& what) {
    std::printf("CRITERION %2d: %s — %s\n", k, ok ? "PASS" : "FAIL",
                what.c_str());
    if (!ok) ++g_failed;
}

std::string data(const std::string& name) {
    return std::string(SKELCAT_DATA_DIR) + "/" + name;
}

std::vector<InstanceFile> corpus() {
    std::vector<InstanceFile> out;
    for (const char* f :
         {"vec.json", "vec_z2_trivial.json", "vec_z2_nontrivial.json",
          "vec_z3.json", "fib.json", "pointed_context.json"})
        out.push_back(load_instance(data(f)));
    return out;
}

bool close(Scalar a, Scalar b) { return std::abs(a - b) < kResid; }

// 1: pentagon residuals on the four bases; a 0.1 perturbation fails; < 1 s
void criterion1() {
    bool ok = true;
    std::ostringstream note;
    for (auto fd : {make_pointed_cyclic(2, 0), make_pointed_cyclic(2, 1),
                    make_pointed_cyclic(3, 1), make_fibonacci()}) {
        auto t0 = std::chrono::steady_clock::now();
        auto rep = verify_pentagon(fd, kTol);
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        ok &= rep.pass && rep.worst.resid < kResid && ms < 1000.0;
        note << fd.name << " resid=" << rep.worst.resid << " (" << ms
             << " ms); ";
    }
    auto bad = make_fibonacci();
    bad.F[{1, 1, 1, 1, 1, 1}] += Scalar(0.1);
    ok &= !verify_pentagon(bad, kTol).pass;
    report(1, ok, "pentagon suite: " + note.str() + "0.1 perturbation fails");
}

// 2: internal-Hom dimensions against the brute-force oracle, exactly
void criterion2() {
    std::size_t checked = 0, wrong = 0;
    for (const auto& f : corpus())
        for (const auto& md : f.module)
            for (int a = 0; a < md.base.n(); ++a)
                for (int m = 0; m < md.nm(); ++m)
                    for (int n = 0; n < md.nm(); ++n) {
                        int dim = 0;  // decompose a |> m, count maps to n
                        for (int mp = 0; mp < md.nm(); ++mp)
                            dim += md.act(a, m, mp) * (mp == n ? 1 : 0);
                        ++checked;
                        if (internal_hom(md, m, n).mult(a) != dim) ++wrong;
                    }
    report(2, wrong == 0 && checked > 0,
           "internal-Hom oracle exact on " + std::to_string(checked) +
               " triples");
}

// 3: the 24 duality identity families, plus structure tier on pointed Z/2
void criterion3() {
    bool ok = true;
    int contexts = 0;
    for (const auto& f : corpus())
        if (f.context) {
            ++contexts;
            auto rep = duality_dim_suite(*f.context);
            ok &= rep.pass && rep.worst.resid == 0.0;
        }
    auto ctx = make_pointed_context(2);
    auto snakes = snake_suite(ctx, kTol);
    ok &= contexts == 5 && snakes.pass && snakes.worst.resid < kResid;
    report(3, ok,
           "duality families exact on " + std::to_string(contexts) +
               " contexts; pointed Z/2 structure residual " +
               std::to_string(snakes.worst.resid));
}

// 4: double dual label maps and scalars match the Serre data everywhere
void criterion4() {
    bool ok = true;
    int contexts = 0;
    for (const auto& f : corpus())
        if (f.context) {
            ++contexts;
            auto rep = double_dual_suite(*f.context, kTol);
            ok &= rep.pass && rep.worst.resid < kResid;
        }
    report(4, ok && contexts == 5,
           "double dual equals Serre on " + std::to_string(contexts) +
               " contexts");
}

// 5: pivotal census sizes and set-for-set agreement with the brute oracle
void criterion5() {
    auto census = [](const FusionData& fd, std::size_t expect) {
        auto sols = solve_pivotal(fd, kTol);
        auto brute = solve_pivotal_brute(fd, kTol);
        if (sols.size() != expect || brute.size() != expect) return false;
        for (const auto& s : sols) {
            bool found = false;
            for (const auto& b : brute) {
                bool same = s.size() == b.size();
                for (std::size_t i = 0; same && i < s.size(); ++i)
                    same = close(s[i], b[i]);
                found |= same;
            }
            if (!found) return false;
        }
        return true;
    };
    bool ok = census(make_pointed_cyclic(2, 0), 2) && census(make_vec(), 1) &&
              census(make_fibonacci(), 1);
    report(5, ok,
           "pivotal census: 2 on Z/2 trivial, 1 on Vec and Fibonacci, "
           "matching the brute oracle");
}

// 6: DSPS-style verdict agrees with the trace verdict on every solution
void criterion6() {
    bool ok = true;
    int pairs = 0;
    for (const auto& f : corpus())
        for (const auto& fd : f.fusion) {
            if (!fd.multiplicity_free()) continue;
            for (const auto& p : solve_pivotal(fd, kTol)) {
                auto sv = check_spherical_tensor(fd, p, kTol);
                ok &= sv.dsps == sv.trace;
                ++pairs;
            }
        }
    report(6, ok && pairs > 0,
           "sphericality verdicts agree on " + std::to_string(pairs) +
               " (instance, solution) pairs");
}

// 7: Radford pseudo-naturality on the pointed contexts of both classes;
//    negating one component breaks at least one square
void criterion7() {
    bool ok = true;
    for (int q : {0, 1}) {
        auto ctx = make_regular_context(make_pointed_cyclic(2, q));
        auto rad = radford_pseudo_suite(ctx, kTol);
        ok &= rad.report.pass && rad.report.worst.resid < kResid;
        Calculus C = morita_calculus(ctx);
        auto comp = [&](Lab x, const RadfordPseudoData& d) -> Scalar {
            switch (x.cell) {
                case Cell::A: return d.ra[std::size_t(x.idx)];
                case Cell::M: return d.rm[std::size_t(x.idx)];
                case Cell::B: return d.rb[std::size_t(x.idx)];
                default: return d.rn[std::size_t(x.idx)];
            }
        };
        RadfordPseudoData bad = rad;
        bad.rm[1] = -bad.rm[1];
        int broken = 0;
        for (auto pair : {std::pair{Lab{Cell::A, 1}, Lab{Cell::M, 1}},
                          std::pair{Lab{Cell::M, 1}, Lab{Cell::B, 1}}})
            for (int z : C.channels(pair.first, pair.second)) {
                Lab lz{Calculus::prod_cell(pair.first, pair.second), z};
                Scalar dd = oriented_double_dual(C, pair.first, pair.second,
                                                 lz);
                if (std::abs(comp(pair.first, bad) * comp(pair.second, bad) -
                             dd * dd * comp(lz, bad)) > 1e-3)
                    ++broken;
            }
        ok &= broken > 0;
    }
    report(7, ok,
           "Radford squares pass on both cocycle classes; a negated "
           "component breaks them");
}

// 8: the eight condition families with matched data; single mismatches fail
//    with a localized family name
void criterion8() {
    auto ctx = make_pointed_context(2);
    auto ps = solve_pivotal(ctx.A, kTol);
    bool ok = false;
    std::string note;
    for (const auto& p : ps) {
        auto pts = solve_module_pivotal(ctx.M, p, kTol);
        if (pts.empty()) continue;
        auto tr = pivotal_transport(ctx, p, pts[0], kTol);
        auto rep = pivotal_morita_suite(ctx, p, pts[0], tr.q, tr.phat, kTol);
        ok = rep.pass && tr.report.pass;
        // flip each datum in turn; the failure must name a family
        auto flipped = [&](Assignment a, int i) {
            a[std::size_t(i)] = -a[std::size_t(i)];
            return a;
        };
        const CheckReport mism[] = {
            pivotal_morita_suite(ctx, flipped(p, 1), pts[0], tr.q, tr.phat,
                                 kTol),
            pivotal_morita_suite(ctx, p, flipped(pts[0], 0), tr.q, tr.phat,
                                 kTol),
            pivotal_morita_suite(ctx, p, pts[0], flipped(tr.q, 1), tr.phat,
                                 kTol),
            pivotal_morita_suite(ctx, p, pts[0], tr.q, flipped(tr.phat, 0),
                                 kTol)};
        for (const auto& m : mism) {
            ok &= !m.pass && !m.failures.empty();
            for (const auto& fl : m.failures)
                ok &= fl.diagram.rfind("pivotal:", 0) == 0;
            note += (note.empty() ? "" : ", ") + m.worst.diagram;
        }
        break;
    }
    report(8, ok,
           "eight families pass with matched data; mismatches localize at " +
               note);
}

// 9: dual degrees invert on all graded contexts; the Fibonacci-Z/2 grading
//    is rejected at validation
void criterion9() {
    bool ok = true;
    int graded = 0;
    for (const auto& f : corpus())
        if (f.context && f.context_grading) {
            ++graded;
            ok &= validate_grading(*f.context, *f.context_grading).pass;
            ok &= graded_dual_degree_check(*f.context, *f.context_grading)
                      .pass;
        }
    auto counter = load_instance(data("fib_z2_graded.json"));
    ok &= graded == 3 && counter.grading.has_value() &&
          !validate_grading(counter.fusion[0], counter.grading->g).pass;
    report(9, ok,
           "dual degrees invert on " + std::to_string(graded) +
               " graded contexts; the Fibonacci-Z/2 grading is rejected");
}

// 10: full corpus, all suites, under 10 s; parallel reports bit-identical
void criterion10() {
    const char* files[] = {"vec.json",
                           "vec_z2_trivial.json",
                           "vec_z2_nontrivial.json",
                           "vec_z3.json",
                           "fib.json",
                           "pointed_context.json",
                           "broken_pentagon.json",
                           "fib_z2_graded.json"};
    bool ok = true;
    auto run = [&](int jobs, const char* f) {
        CliOptions opt;
        opt.path = data(f);
        opt.emit = "json";
        opt.jobs = jobs;
        opt.out = std::string("/tmp/skelcat_accept_") + std::to_string(jobs) +
                  "_" + f;
        std::ostringstream err;
        cmd_check(opt, err);
        std::ifstream in(opt.out);
        std::ostringstream body;
        body << in.rdbuf();
        return body.str();
    };
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> serial;
    for (const char* f : files) serial.push_back(run(1, f));
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    ok &= secs < 10.0;
    for (std::size_t i = 0; i < std::size(files); ++i) {
        std::string par = run(8, files[i]);
        ok &= !serial[i].empty() && par == serial[i];
    }
    std::ostringstream note;
    note << "full corpus, all suites, jobs=1 in " << secs
         << " s; jobs=8 reports bit-identical";
    report(10, ok, note.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (g_failed) std::printf("%d criterion(s) failed\n", g_failed);
    return g_failed == 0 ? 0 : 1;
}
