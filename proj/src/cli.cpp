#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "skelcat/cli.hpp"

namespace skelcat {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::size_t kFailureCap = 50;

struct SuiteResult {
    std::string suite;
    std::string tier;  // dimension | structure
    CheckReport rep;
    bool skipped = false;
    std::string skip_reason;
};

void note_int(CheckReport& rep, const std::string& diagram,
              std::vector<int> idx, bool ok) {
    rep.note(diagram, std::move(idx), ok ? 0.0 : 1.0, {}, 0.5);
}

bool match_assignment(const Assignment& x, const Assignment& y,
                      const Tolerance& tol) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!approx_eq(x[i], y[i], tol)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// suite runners over a loaded file

struct Runner {
    const InstanceFile& f;
    const CliOptions& opt;
    std::vector<SuiteResult> results;

    void add(const std::string& suite, const std::string& tier,
             CheckReport rep) {
        rep.suite = suite;
        rep.sort_failures();
        results.push_back({suite, tier, std::move(rep), false, {}});
    }
    void skip(const std::string& suite, const std::string& tier,
              const std::string& instance, const std::string& why) {
        CheckReport rep;
        rep.suite = suite;
        rep.instance = instance;
        results.push_back({suite, tier, std::move(rep), true, why});
    }

    void pentagon() {
        for (const auto& fd : f.fusion) {
            if (!fd.multiplicity_free()) {
                skip("pentagon", "structure", fd.name,
                     "multiplicity-free data required");
                continue;
            }
            add("pentagon", "structure", verify_pentagon(fd, opt.tol, opt.jobs));
        }
    }

    void module_suite() {
        for (const auto& md : f.module) {
            if (!md.multiplicity_free()) {
                skip("module", "structure", md.name,
                     "multiplicity-free data required");
                continue;
            }
            add("module", "structure", validate_module(md, opt.tol, opt.jobs));
        }
    }

    void ihom() {
        for (const auto& md : f.module) {
            CheckReport rep;
            rep.instance = md.name;
            rep.tol = {0.0, 0.0};
            const int na = md.base.n(), nm = md.nm();
            for (int m = 0; m < nm; ++m)
                for (int n = 0; n < nm; ++n) {
                    auto h = internal_hom(md, m, n);
                    auto ch = internal_cohom(md, m, n);
                    for (int a = 0; a < na; ++a) {
                        note_int(rep, "ihom:dim", {a, m, n},
                                 h.mult(a) == md.act(a, m, n));
                        note_int(rep, "ihom:cohom", {a, m, n},
                                 ch.mult(a) ==
                                     internal_hom(md, n, m).mult(
                                         md.base.dual[std::size_t(a)]));
                    }
                }
            if (md.multiplicity_free())
                for (int m = 0; m < nm; ++m)
                    rep.merge(ihom_structure_maps(md, m, opt.tol).report);
            add("ihom", "dimension", std::move(rep));
        }
    }

    void serre() {
        for (const auto& md : f.module) {
            if (!md.multiplicity_free()) {
                skip("serre", "structure", md.name,
                     "multiplicity-free data required");
                continue;
            }
            auto sd = serre_data(md, opt.tol);
            CheckReport rep = sd.report;
            rep.instance = md.name;
            for (const auto& seed : f.serre)
                if (seed.target == md.name)
                    for (int m = 0; m < md.nm(); ++m)
                        note_int(rep, "serre:object-map", {m},
                                 m < int(seed.object_map.size()) &&
                                     seed.object_map[std::size_t(m)] ==
                                         sd.object_map[std::size_t(m)]);
            add("serre", "structure", std::move(rep));
        }
    }

    void pivotal() {
        for (const auto& fd : f.fusion) {
            if (!fd.multiplicity_free()) {
                skip("pivotal", "structure", fd.name,
                     "multiplicity-free data required");
                continue;
            }
            CheckReport rep;
            rep.instance = fd.name;
            rep.tol = opt.tol;
            auto sols = solve_pivotal(fd, opt.tol);
            if (fd.n() <= 4) {
                auto brute = solve_pivotal_brute(fd, opt.tol);
                note_int(rep, "pivotal:census-size", {int(sols.size())},
                         sols.size() == brute.size());
                for (int i = 0; i < int(sols.size()); ++i) {
                    bool found = false;
                    for (const auto& b : brute)
                        found |= match_assignment(sols[std::size_t(i)], b,
                                                  opt.tol);
                    note_int(rep, "pivotal:census-member", {i}, found);
                }
            }
            for (int i = 0; i < int(sols.size()); ++i) {
                const auto& p = sols[std::size_t(i)];
                rep.merge(verify_pivotal(fd, p, opt.tol));
                auto sv = check_spherical_tensor(fd, p, opt.tol);
                note_int(rep, "spherical:agreement", {i}, sv.dsps == sv.trace);
            }
            for (const auto& seed : f.pivotal)
                if (seed.target == fd.name)
                    rep.merge(verify_pivotal(fd, seed.p, opt.tol));
            add("pivotal", "structure", std::move(rep));
        }
        if (f.context && f.context->structure_tier) {
            const auto& ctx = *f.context;
            CheckReport rep;
            rep.instance = ctx.name;
            rep.tol = opt.tol;
            auto ps = solve_pivotal(ctx.A, opt.tol);
            int branch = 0;
            for (const auto& p : ps) {
                auto pts = solve_module_pivotal(ctx.M, p, opt.tol);
                for (const auto& pt : pts) {
                    auto tr = pivotal_transport(ctx, p, pt, opt.tol);
                    rep.merge(tr.report);
                    rep.merge(pivotal_morita_suite(ctx, p, pt, tr.q, tr.phat,
                                                   opt.tol));
                }
                note_int(rep, "pivotal:bridge-branches", {branch++},
                         true);  // census bookkeeping
            }
            add("pivotal", "structure", std::move(rep));
        }
    }

    void coherence() {
        if (!f.context) return;
        if (!f.context->structure_tier) {
            skip("coherence", "structure", f.context->name,
                 "context holds dimension-tier data only");
            return;
        }
        add("coherence", "structure",
            verify_context_coherence(*f.context, opt.tol, opt.jobs));
    }

    void duality() {
        if (!f.context) return;
        add("duality", "dimension", duality_dim_suite(*f.context));
        if (f.context->structure_tier)
            add("duality", "structure", snake_suite(*f.context, opt.tol));
        else
            skip("duality", "structure", f.context->name,
                 "context holds dimension-tier data only");
    }

    void doubledual() {
        if (!f.context) return;
        if (!f.context->structure_tier) {
            skip("doubledual", "structure", f.context->name,
                 "context holds dimension-tier data only");
            return;
        }
        add("doubledual", "structure", double_dual_suite(*f.context, opt.tol));
    }

    void strong() {
        if (!f.context) return;
        add("strong", "dimension", strong_context_suite(*f.context));
    }

    void radford() {
        for (const auto& fd : f.fusion) {
            if (!fd.multiplicity_free()) {
                skip("radford", "structure", fd.name,
                     "multiplicity-free data required");
                continue;
            }
            CheckReport rep;
            rep.instance = fd.name;
            rep.tol = opt.tol;
            radford_components(fd, &rep, opt.tol);
            add("radford", "structure", std::move(rep));
        }
        if (f.context && f.context->structure_tier)
            add("radford", "structure",
                radford_pseudo_suite(*f.context, opt.tol).report);
    }

    void graded() {
        if (f.grading) {
            const auto* fd = &f.fusion.front();
            for (const auto& b : f.fusion)
                if (b.name == f.grading->target) fd = &b;
            add("graded", "dimension", validate_grading(*fd, f.grading->g));
        }
        if (f.context_grading && f.context) {
            const auto& g = *f.context_grading;
            CheckReport rep = validate_grading(*f.context, g);
            rep.merge(graded_dual_degree_check(*f.context, g));
            rep.merge(graded_serre_check(f.context->M, g.deg_m, g.group,
                                         opt.tol));
            add("graded", "dimension", std::move(rep));
        }
    }

    void relabel() {
        if (!f.context || !f.context->structure_tier) return;
        const auto& ctx = *f.context;
        std::mt19937 rng(opt.seed);
        auto perm = [&rng](int n) {
            std::vector<int> p(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) p[std::size_t(i)] = i;
            std::shuffle(p.begin(), p.end(), rng);
            return p;
        };
        auto re = relabel_context(ctx, perm(ctx.na()), perm(ctx.nm()),
                                  perm(ctx.nb()));
        auto a = verify_context_coherence(ctx, opt.tol, opt.jobs);
        auto b = verify_context_coherence(re, opt.tol, opt.jobs);
        CheckReport rep;
        rep.instance = ctx.name;
        rep.tol = opt.tol;
        note_int(rep, "relabel:verdict", {int(opt.seed)}, a.pass == b.pass);
        note_int(rep, "relabel:checked", {int(opt.seed)},
                 a.checked == b.checked);
        add("relabel", "structure", std::move(rep));
    }
};

const std::vector<std::pair<std::string, void (Runner::*)()>>& suite_table() {
    static const std::vector<std::pair<std::string, void (Runner::*)()>> t = {
        {"pentagon", &Runner::pentagon},   {"module", &Runner::module_suite},
        {"ihom", &Runner::ihom},           {"serre", &Runner::serre},
        {"pivotal", &Runner::pivotal},     {"coherence", &Runner::coherence},
        {"duality", &Runner::duality},     {"doubledual", &Runner::doubledual},
        {"strong", &Runner::strong},       {"radford", &Runner::radford},
        {"graded", &Runner::graded},       {"relabel", &Runner::relabel},
    };
    return t;
}

// ---------------------------------------------------------------------------
// report emission

std::string fmt_resid(double r) {
    std::ostringstream ss;
    ss << std::scientific << std::setprecision(3) << r;
    return ss.str();
}

std::string fmt_indices(const std::vector<int>& idx) {
    std::string s = "[";
    for (std::size_t i = 0; i < idx.size(); ++i)
        s += (i ? "," : "") + std::to_string(idx[std::size_t(i)]);
    return s + "]";
}

void emit_text(const std::vector<SuiteResult>& results, bool pass,
               const CliOptions& opt, std::ostream& os) {
    os << "input: " << opt.path << "\n";
    os << "tolerance: abs=" << fmt_resid(opt.tol.abs_eps)
       << " rel=" << fmt_resid(opt.tol.rel_eps) << " tier=" << opt.tier
       << "\n";
    for (const auto& r : results) {
        if (r.skipped) {
            os << "SKIP " << r.suite << " " << r.rep.instance << " ("
               << r.skip_reason << ")\n";
            continue;
        }
        os << (r.rep.pass ? "PASS " : "FAIL ") << r.suite << " "
           << r.rep.instance << " checked=" << r.rep.checked
           << " failed=" << r.rep.failed;
        if (r.rep.checked)
            os << " worst=" << r.rep.worst.diagram
               << fmt_indices(r.rep.worst.indices)
               << " resid=" << fmt_resid(r.rep.worst.resid);
        os << "\n";
        std::size_t shown = 0;
        for (const auto& fl : r.rep.failures) {
            if (shown++ == kFailureCap) {
                os << "    ... " << (r.rep.failures.size() - kFailureCap)
                   << " more failures\n";
                break;
            }
            os << "    fail " << fl.diagram << fmt_indices(fl.indices)
               << " resid=" << fmt_resid(fl.resid) << "\n";
        }
    }
    os << (pass ? "RESULT: PASS" : "RESULT: FAIL") << "\n";
}

ojson record_json(const CheckRecord& r) {
    ojson j;
    j["diagram"] = r.diagram;
    j["indices"] = r.indices;
    j["resid"] = r.resid;
    return j;
}

ojson report_json(const std::vector<SuiteResult>& results, bool pass,
                  const CliOptions& opt) {
    ojson j;
    j["schema_version"] = "1.0";
    j["input"] = opt.path;
    j["tolerance"] = {{"abs", opt.tol.abs_eps}, {"rel", opt.tol.rel_eps}};
    j["tier"] = opt.tier;
    ojson suites = ojson::array();
    for (const auto& r : results) {
        ojson s;
        s["suite"] = r.suite;
        s["instance"] = r.rep.instance;
        s["tier"] = r.tier;
        if (r.skipped) {
            s["skipped"] = r.skip_reason;
            suites.push_back(std::move(s));
            continue;
        }
        s["pass"] = r.rep.pass;
        s["checked"] = r.rep.checked;
        s["failed"] = r.rep.failed;
        if (r.rep.checked) s["worst"] = record_json(r.rep.worst);
        ojson fl = ojson::array();
        for (std::size_t i = 0; i < r.rep.failures.size() && i < kFailureCap;
             ++i)
            fl.push_back(record_json(r.rep.failures[i]));
        s["failures"] = std::move(fl);
        if (r.rep.failures.size() > kFailureCap)
            s["failures_truncated"] = true;
        suites.push_back(std::move(s));
    }
    j["suites"] = std::move(suites);
    j["pass"] = pass;
    return j;
}

int write_out(const std::string& text, const CliOptions& opt,
              std::ostream& err) {
    if (opt.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
        err << "error: cannot write '" << opt.out << "'\n";
        return 2;
    }
    f << text;
    return 0;
}

}  // namespace

const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, fn] : suite_table()) v.push_back(n);
        return v;
    }();
    return names;
}

int cmd_check(const CliOptions& opt, std::ostream& err) {
    InstanceFile f;
    try {
        f = load_instance(opt.path, !opt.lenient);
    } catch (const SkelError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    std::vector<std::string> wanted = opt.suites;
    for (const auto& s : wanted)
        if (std::find(known_suites().begin(), known_suites().end(), s) ==
            known_suites().end()) {
            err << "error: unknown suite '" << s << "'\n";
            return 2;
        }
    if (opt.tier != "auto" && opt.tier != "dimension" &&
        opt.tier != "structure") {
        err << "error: unknown tier '" << opt.tier << "'\n";
        return 2;
    }
    Runner run{f, opt, {}};
    for (const auto& [name, fn] : suite_table()) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), name) ==
                                   wanted.end())
            continue;
        (run.*fn)();
    }
    // tier filtering happens on the collected results so suite selection and
    // skip bookkeeping stay uniform
    std::vector<SuiteResult> results;
    for (auto& r : run.results) {
        if (opt.tier != "auto" && r.tier != opt.tier) continue;
        if (opt.tier == "structure" && r.skipped) r.rep.pass = false;
        results.push_back(std::move(r));
    }
    bool pass = true;
    for (const auto& r : results)
        if (!r.skipped || opt.tier == "structure") pass &= r.rep.pass;
    std::string text = opt.emit == "json"
                           ? report_json(results, pass, opt).dump(2) + "\n"
                           : [&] {
                                 std::ostringstream ss;
                                 emit_text(results, pass, opt, ss);
                                 return ss.str();
                             }();
    int rc = write_out(text, opt, err);
    if (rc != 0) return rc;
    return pass ? 0 : 1;
}

int cmd_solve(const CliOptions& opt, std::ostream& err) {
    InstanceFile f;
    try {
        f = load_instance(opt.path, !opt.lenient);
    } catch (const SkelError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (opt.target != "pivotal" && opt.target != "module-pivotal") {
        err << "error: unknown target '" << opt.target << "'\n";
        return 2;
    }
    std::size_t total = 0;
    ojson jout;
    jout["schema_version"] = "1.0";
    jout["input"] = opt.path;
    jout["target"] = opt.target;
    ojson blocks = ojson::array();
    std::ostringstream text;
    text << "input: " << opt.path << " target=" << opt.target << "\n";

    auto emit_solution = [&](ojson& list, std::ostringstream& ts,
                             const std::vector<std::string>& labels,
                             const Assignment& sol, const std::string& kind,
                             bool spherical_known, bool dsps, bool trace) {
        ojson s;
        ojson comps = ojson::array();
        ts << "  " << kind << " solution:";
        for (std::size_t i = 0; i < sol.size(); ++i) {
            comps.push_back({sol[i].real(), sol[i].imag()});
            ts << " " << labels[i] << "=(" << sol[i].real() << ","
               << sol[i].imag() << ")";
        }
        s["components"] = std::move(comps);
        if (spherical_known) {
            s["spherical_dsps"] = dsps;
            s["spherical_trace"] = trace;
            ts << " spherical: dsps=" << (dsps ? "yes" : "no")
               << " trace=" << (trace ? "yes" : "no")
               << (dsps == trace ? " (agree)" : " (DISAGREE)");
        }
        ts << "\n";
        list.push_back(std::move(s));
        ++total;
    };

    if (opt.target == "pivotal") {
        for (const auto& fd : f.fusion) {
            if (!fd.multiplicity_free()) continue;
            ojson b;
            b["instance"] = fd.name;
            ojson list = ojson::array();
            text << fd.name << ":\n";
            for (const auto& p : solve_pivotal(fd, opt.tol)) {
                auto sv = check_spherical_tensor(fd, p, opt.tol);
                emit_solution(list, text, fd.labels, p, "pivotal", true,
                              sv.dsps, sv.trace);
            }
            b["solutions"] = std::move(list);
            blocks.push_back(std::move(b));
        }
    } else {
        for (const auto& md : f.module) {
            if (!md.multiplicity_free()) continue;
            ojson b;
            b["instance"] = md.name;
            ojson list = ojson::array();
            text << md.name << ":\n";
            std::vector<Assignment> base;
            for (const auto& seed : f.pivotal)
                if (seed.target == md.base.name) base.push_back(seed.p);
            if (base.empty()) base = solve_pivotal(md.base, opt.tol);
            for (const auto& p : base)
                for (const auto& pt : solve_module_pivotal(md, p, opt.tol)) {
                    auto sph = check_spherical_module(md, p, pt, opt.tol);
                    emit_solution(list, text, md.mlabels, pt, "module-pivotal",
                                  true, sph.pass, sph.pass);
                }
            b["solutions"] = std::move(list);
            blocks.push_back(std::move(b));
        }
    }
    jout["blocks"] = std::move(blocks);
    jout["solutions_found"] = total;
    text << "solutions: " << total << "\n";
    std::string out = opt.emit == "json" ? jout.dump(2) + "\n" : text.str();
    int rc = write_out(out, opt, err);
    if (rc != 0) return rc;
    return total > 0 ? 0 : 3;
}

}  // namespace skelcat
