#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "skelcat/core.hpp"

namespace skelcat {

// A system of constraints  prod_i x_i^{e_i} = t  over nonzero complex unknowns.
struct MultiplicativeSystem {
    std::vector<std::string> unknowns;
    struct Constraint {
        std::vector<int> expo;  // one exponent per unknown
        Scalar target;          // nonzero
        std::string tag;        // provenance of the equation (for reports)
    };
    std::vector<Constraint> constraints;
    std::map<std::string, int> root_orders;  // branch bound per unknown
    std::map<std::string, Scalar> pins;      // pre-assigned unknowns

    int index_of(const std::string& u) const {
        auto it = std::find(unknowns.begin(), unknowns.end(), u);
        return it == unknowns.end() ? -1 : int(it - unknowns.begin());
    }

    void add(const std::map<std::string, int>& expo_by_name, Scalar target,
             std::string tag = {}) {
        if (std::abs(target) == 0.0)
            throw InconsistentSystem("zero target in multiplicative system");
        Constraint c;
        c.expo.assign(unknowns.size(), 0);
        for (auto& [name, e] : expo_by_name) {
            int i = index_of(name);
            if (i < 0) throw ValidationError("unknown name: " + name);
            c.expo[i] += e;
        }
        c.target = target;
        c.tag = std::move(tag);
        constraints.push_back(std::move(c));
    }
};

using Assignment = std::vector<Scalar>;  // parallel to system.unknowns

namespace detail {

inline std::vector<Scalar> kth_roots(Scalar v, int k) {
    // all k-th roots of v (k >= 1)
    std::vector<Scalar> out;
    double r = std::pow(std::abs(v), 1.0 / k);
    double th = std::arg(v) / k;
    for (int j = 0; j < k; ++j) {
        double ang = th + 2.0 * std::numbers::pi * j / k;
        out.push_back(Scalar(r * std::cos(ang), r * std::sin(ang)));
    }
    return out;
}

inline bool same_assignment(const Assignment& a, const Assignment& b,
                            const Tolerance& tol) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!approx_eq(a[i], b[i], tol)) return false;
    return true;
}

inline bool assignment_less(const Assignment& a, const Assignment& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
}

// Exact elimination over the exponent lattice.  Unknowns are tracked as
// monomials  coeff * prod(generator^e)  in a shrinking set of generators;
// constraints are rewritten in generator exponents, reduced by Euclidean
// column steps, and resolved either by direct elimination (unit exponent)
// or by bounded root branching.
struct EliminationState {
    struct Expr {
        Scalar c{1.0, 0.0};
        std::map<int, int> mono;  // generator -> exponent
    };
    std::vector<Expr> unknowns;  // expression of each unknown
    struct Con {
        Expr lhs;       // monomial side
        Scalar target;  // scalar side
        std::string tag;
    };
    std::vector<Con> cons;

    static void mul_into(Expr& into, const Expr& e, int power) {
        into.c *= std::pow(e.c, power);
        for (auto& [g, k] : e.mono) {
            into.mono[g] += k * power;
            if (into.mono[g] == 0) into.mono.erase(g);
        }
    }

    // replace generator j by expression e everywhere
    void substitute(int j, const Expr& e) {
        auto apply = [&](Expr& x) {
            auto it = x.mono.find(j);
            if (it == x.mono.end()) return;
            int p = it->second;
            x.mono.erase(it);
            mul_into(x, e, p);
        };
        for (auto& u : unknowns) apply(u);
        for (auto& c : cons) apply(c.lhs);
    }
};

inline void solve_rec(const MultiplicativeSystem& sys, const Tolerance& tol,
                      EliminationState st, std::vector<Assignment>& out) {
    using Expr = EliminationState::Expr;
    for (;;) {
        // find a constraint still carrying generators
        int ci = -1;
        for (std::size_t i = 0; i < st.cons.size(); ++i)
            if (!st.cons[i].lhs.mono.empty()) { ci = int(i); break; }
        if (ci < 0) break;
        auto& con = st.cons[ci];
        // Euclidean reduction: make all but one exponent vanish
        for (;;) {
            int j = 0, kj = 0;
            for (auto& [g, k] : con.lhs.mono)
                if (kj == 0 || std::abs(k) < std::abs(kj)) { j = g; kj = k; }
            bool others = false;
            std::vector<std::pair<int, int>> rest(con.lhs.mono.begin(),
                                                  con.lhs.mono.end());
            Expr repl;  // g_j -> g_j * prod g_l^{-q_l}
            repl.mono[j] = 1;
            for (auto& [l, kl] : rest) {
                if (l == j) continue;
                others = true;
                int q = kl / kj;  // truncated division: Euclid step
                if (q != 0) repl.mono[l] = -q;
            }
            if (!others) break;
            if (repl.mono.size() == 1) {
                // all other exponents already smaller than |kj| in magnitude;
                // swap roles by choosing that generator next round
                // (guaranteed progress because |k_l| < |k_j| for some l)
                bool reducible = false;
                for (auto& [l, kl] : rest)
                    if (l != j && kl % kj != 0) reducible = true;
                if (!reducible) {
                    // constraint is  (g_j * prod g_l^{k_l/k_j})^{k_j} = v
                    for (auto& [l, kl] : rest)
                        if (l != j) repl.mono[l] = kl / kj;
                    // change of variable: u := g_j * prod g_l^{k_l/k_j}
                    // then substitute g_j = u * prod g_l^{-k_l/k_j}
                    Expr back;
                    back.mono[j] = 1;
                    for (auto& [l, kl] : rest)
                        if (l != j) back.mono[l] = -(kl / kj);
                    // rename: keep index j for u
                    st.substitute(j, back);
                    break;
                }
            } else {
                st.substitute(j, repl);
            }
        }
        // now exactly one generator remains in this constraint
        int j = con.lhs.mono.begin()->first;
        int kj = con.lhs.mono.begin()->second;
        Scalar v = con.target / con.lhs.c;
        if (std::abs(kj) == 1) {
            Expr e;
            e.c = (kj == 1) ? v : Scalar(1.0, 0.0) / v;
            auto& c2 = st.cons[ci];
            c2.lhs = Expr{};
            c2.target = Scalar(1.0, 0.0);
            st.substitute(j, e);
            continue;
        }
        // bounded root branching
        bool bounded = false;
        for (std::size_t u = 0; u < sys.unknowns.size(); ++u)
            if (st.unknowns[u].mono.count(j) &&
                sys.root_orders.count(sys.unknowns[u]))
                bounded = true;
        if (!bounded)
            throw UnboundedBranching(
                "root branching without a root_orders bound");
        Scalar base = (kj > 0) ? v : Scalar(1.0, 0.0) / v;
        auto& c3 = st.cons[ci];
        c3.lhs = Expr{};
        c3.target = Scalar(1.0, 0.0);
        for (Scalar root : kth_roots(base, std::abs(kj))) {
            EliminationState branch = st;
            Expr e;
            e.c = root;
            branch.substitute(j, e);
            solve_rec(sys, tol, std::move(branch), out);
        }
        return;
    }
    // all constraints reduced to scalars: consistency filter
    for (auto& c : st.cons)
        if (!approx_eq(c.lhs.c, c.target, tol)) return;
    for (std::size_t i = 0; i < st.unknowns.size(); ++i)
        if (!st.unknowns[i].mono.empty())
            throw UnboundedBranching("unknown " + sys.unknowns[i] +
                                     " is not determined by any constraint");
    Assignment a(st.unknowns.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = st.unknowns[i].c;
    out.push_back(std::move(a));
}

}  // namespace detail

// Exhaustive, deterministic solution set (deduplicated, sorted).
inline std::vector<Assignment> solve_multiplicative(
    const MultiplicativeSystem& sys, const Tolerance& tol) {
    detail::EliminationState st;
    st.unknowns.resize(sys.unknowns.size());
    for (std::size_t i = 0; i < sys.unknowns.size(); ++i)
        st.unknowns[i].mono[int(i)] = 1;  // generator i == unknown i initially
    for (auto& c : sys.constraints) {
        detail::EliminationState::Con con;
        for (std::size_t i = 0; i < sys.unknowns.size(); ++i)
            if (c.expo[i] != 0) con.lhs.mono[int(i)] = c.expo[i];
        con.target = c.target;
        con.tag = c.tag;
        st.cons.push_back(std::move(con));
    }
    for (auto& [name, v] : sys.pins) {
        int i = sys.index_of(name);
        if (i < 0) throw ValidationError("pinned unknown not present: " + name);
        detail::EliminationState::Con con;
        con.lhs.mono[i] = 1;
        con.target = v;
        con.tag = "pin:" + name;
        st.cons.push_back(std::move(con));
    }
    std::vector<Assignment> out;
    detail::solve_rec(sys, tol, std::move(st), out);
    // dedupe + deterministic order
    std::sort(out.begin(), out.end(), detail::assignment_less);
    std::vector<Assignment> uniq;
    for (auto& a : out) {
        bool dup = false;
        for (auto& b : uniq)
            if (detail::same_assignment(a, b, tol)) { dup = true; break; }
        if (!dup) uniq.push_back(a);
    }
    return uniq;
}

// Independent brute-force search: candidate values for each unknown are
// gathered from the roots every constraint could force on it, then the full
// product set is filtered against all constraints.  Intended for small oracle
// systems only.
inline std::vector<Assignment> solve_multiplicative_brute(
    const MultiplicativeSystem& sys, const Tolerance& tol,
    std::size_t max_unknowns = 4) {
    const std::size_t n = sys.unknowns.size();
    if (n > max_unknowns)
        throw ValidationError("brute-force solver limited to small systems");
    std::vector<std::vector<Scalar>> cand(n);
    std::vector<bool> have(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = sys.pins.find(sys.unknowns[i]);
        if (it != sys.pins.end()) {
            cand[i] = {it->second};
            have[i] = true;
        }
    }
    auto widen = [&](std::size_t i, std::vector<Scalar> vals) {
        auto ro = sys.root_orders.find(sys.unknowns[i]);
        int order = ro == sys.root_orders.end() ? 1 : ro->second;
        for (Scalar v : vals)
            for (Scalar u :
                 detail::kth_roots(Scalar(1.0, 0.0), std::max(order, 1)))
                cand[i].push_back(v * u);
        have[i] = true;
    };
    // candidate propagation: resolve unknowns from constraints whose other
    // unknowns already have candidate sets, over all combinations
    for (;;) {
        bool progressed = false;
        for (auto& c : sys.constraints) {
            int open = -1;
            bool blocked = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (c.expo[i] == 0 || have[i]) continue;
                if (open >= 0) { blocked = true; break; }
                open = int(i);
            }
            if (blocked || open < 0) continue;
            std::vector<std::size_t> others;
            for (std::size_t i = 0; i < n; ++i)
                if (c.expo[i] != 0 && int(i) != open) others.push_back(i);
            std::vector<std::size_t> pos(others.size(), 0);
            std::vector<Scalar> vals;
            for (;;) {
                Scalar known(1.0, 0.0);
                for (std::size_t oi = 0; oi < others.size(); ++oi)
                    known *= std::pow(cand[others[oi]][pos[oi]],
                                      c.expo[others[oi]]);
                Scalar v = c.target / known;
                int e = c.expo[open];
                Scalar base = (e > 0) ? v : Scalar(1.0, 0.0) / v;
                for (Scalar r : detail::kth_roots(base, std::abs(e)))
                    vals.push_back(r);
                std::size_t d = 0;
                while (d < others.size() &&
                       ++pos[d] == cand[others[d]].size())
                    pos[d++] = 0;
                if (d == others.size()) break;
            }
            widen(open, std::move(vals));
            progressed = true;
        }
        if (progressed) continue;
        // stuck: seed one open unknown from raw constraint targets, widened
        int seed = -1;
        for (std::size_t i = 0; i < n && seed < 0; ++i)
            if (!have[i])
                for (auto& c : sys.constraints)
                    if (c.expo[i] != 0) { seed = int(i); break; }
        if (seed < 0) break;
        std::vector<Scalar> vals;
        for (auto& c : sys.constraints) {
            if (c.expo[seed] == 0) continue;
            int k = std::abs(c.expo[seed]);
            for (auto& t : {c.target, Scalar(1.0, 0.0) / c.target})
                for (Scalar r : detail::kth_roots(t, k)) vals.push_back(r);
        }
        widen(std::size_t(seed), std::move(vals));
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!have[i] || cand[i].empty())
            throw UnboundedBranching("no candidates for unknown " +
                                     sys.unknowns[i]);
    std::vector<Assignment> out;
    Assignment a(n);
    std::vector<std::size_t> pos(n, 0);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i) a[i] = cand[i][pos[i]];
        bool ok = true;
        for (auto& c : sys.constraints) {
            Scalar lhs(1.0, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                if (c.expo[i] != 0) lhs *= std::pow(a[i], c.expo[i]);
            if (!approx_eq(lhs, c.target, tol)) { ok = false; break; }
        }
        if (ok) out.push_back(a);
        std::size_t i = 0;
        while (i < n && ++pos[i] == cand[i].size()) pos[i++] = 0;
        if (i == n) break;
    }
    std::sort(out.begin(), out.end(), detail::assignment_less);
    std::vector<Assignment> uniq;
    for (auto& x : out) {
        bool dup = false;
        for (auto& b : uniq)
            if (detail::same_assignment(x, b, tol)) { dup = true; break; }
        if (!dup) uniq.push_back(x);
    }
    return uniq;
}

}  // namespace skelcat
