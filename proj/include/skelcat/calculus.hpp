#pragma once

#include <functional>

#include "skelcat/core.hpp"
#include "skelcat/smallmat.hpp"

namespace skelcat {

// Two-object bicategory calculus.  Hom-cells are label sets:
//   A : 0 -> 0,  M : 0 -> 1,  B : 1 -> 1,  N : 1 -> 0
// Juxtaposition (x, y) is composable when tgt(x) == src(y); the eight
// products and sixteen associativity tables live here.  A plain fusion
// category is the A-corner; a left module category is the A/M corner.
enum class Cell : int { A = 0, M = 1, B = 2, N = 3 };

inline int cell_src(Cell c) { return (c == Cell::A || c == Cell::M) ? 0 : 1; }
inline int cell_tgt(Cell c) { return (c == Cell::A || c == Cell::N) ? 0 : 1; }

inline Cell cell_of(int s, int t) {
    if (s == 0) return t == 0 ? Cell::A : Cell::M;
    return t == 1 ? Cell::B : Cell::N;
}

inline Cell dual_cell(Cell c) { return cell_of(cell_tgt(c), cell_src(c)); }

struct Lab {
    Cell cell;
    int idx;
    auto operator<=>(const Lab&) const = default;
};

struct Calculus {
    std::array<int, 4> nlab{0, 0, 0, 0};
    int unitA = 0, unitB = 0;
    std::array<std::vector<int>, 4> dual;  // label-level dual involution

    // multiplicities of z in x*y; key {cell(x), x, cell(y), y, z}
    std::map<std::array<int, 5>, int> mult_;
    // associator entries; key {cell x, cell y, cell z, x, y, z, d, e, f}
    std::map<std::array<int, 9>, Scalar> assoc_;

    // duality scalars per label (gauge: coev = lcoev = 1 unless re-solved)
    std::array<std::vector<Scalar>, 4> ev_, coev_, lev_, lcoev_;
    std::array<std::vector<double>, 4> snake_resid_;

    int count(Cell c) const { return nlab[int(c)]; }
    Lab unit(int object) const {
        return object == 0 ? Lab{Cell::A, unitA} : Lab{Cell::B, unitB};
    }
    bool is_unit(Lab x) const {
        return (x.cell == Cell::A && x.idx == unitA) ||
               (x.cell == Cell::B && x.idx == unitB);
    }
    Lab dual_lab(Lab x) const {
        return Lab{dual_cell(x.cell), dual[int(x.cell)][x.idx]};
    }

    static bool composable(Lab x, Lab y) {
        return cell_tgt(x.cell) == cell_src(y.cell);
    }
    static Cell prod_cell(Lab x, Lab y) {
        return cell_of(cell_src(x.cell), cell_tgt(y.cell));
    }

    void set_mult(Lab x, Lab y, int z, int m) {
        if (!composable(x, y)) throw ValidationError("set_mult: incomposable");
        mult_[{int(x.cell), x.idx, int(y.cell), y.idx, z}] = m;
    }
    int mult(Lab x, Lab y, int z) const {
        if (!composable(x, y)) return 0;
        if (is_unit(x)) return y.idx == z ? 1 : 0;
        if (is_unit(y)) return x.idx == z ? 1 : 0;
        auto it = mult_.find({int(x.cell), x.idx, int(y.cell), y.idx, z});
        return it == mult_.end() ? 0 : it->second;
    }
    std::vector<int> channels(Lab x, Lab y) const {
        std::vector<int> out;
        for (int z = 0; z < count(prod_cell(x, y)); ++z)
            if (mult(x, y, z) > 0) out.push_back(z);
        return out;
    }

    void set_assoc(Lab x, Lab y, Lab z, int d, int e, int f, Scalar v) {
        assoc_[{int(x.cell), int(y.cell), int(z.cell),
                x.idx, y.idx, z.idx, d, e, f}] = v;
    }

    // Convention: basis((x y) z -> d via e in x*y) =
    //   sum_f assoc(x,y,z;d)[e,f] * basis(x (y z) -> d via f in y*z)
    Scalar assoc(Lab x, Lab y, Lab z, int d, int e, int f) const {
        if (is_unit(x)) return (e == y.idx && f == d) ? Scalar(1) : Scalar(0);
        if (is_unit(y)) return (e == x.idx && f == z.idx) ? Scalar(1) : Scalar(0);
        if (is_unit(z)) return (e == d && f == y.idx) ? Scalar(1) : Scalar(0);
        Cell pxy = prod_cell(x, y), pyz = prod_cell(y, z);
        if (mult(x, y, e) <= 0 || mult(Lab{pxy, e}, z, d) <= 0 ||
            mult(y, z, f) <= 0 || mult(x, Lab{pyz, f}, d) <= 0)
            return Scalar(0);
        auto it = assoc_.find({int(x.cell), int(y.cell), int(z.cell),
                               x.idx, y.idx, z.idx, d, e, f});
        if (it == assoc_.end())
            throw ValidationError("missing associator entry for pattern " +
                                  std::to_string(int(x.cell)) +
                                  std::to_string(int(y.cell)) +
                                  std::to_string(int(z.cell)));
        return it->second;
    }

    bool has_assoc_entry(Lab x, Lab y, Lab z, int d, int e, int f) const {
        if (is_unit(x) || is_unit(y) || is_unit(z)) return true;
        return assoc_.count({int(x.cell), int(y.cell), int(z.cell),
                             x.idx, y.idx, z.idx, d, e, f}) > 0;
    }

    // admissible index lists for the associator matrix of (x,y,z; d)
    std::vector<int> elist(Lab x, Lab y, Lab z, int d) const {
        std::vector<int> out;
        Cell pc = prod_cell(x, y);
        for (int e = 0; e < count(pc); ++e)
            if (mult(x, y, e) > 0 && mult(Lab{pc, e}, z, d) > 0)
                out.push_back(e);
        return out;
    }
    std::vector<int> flist(Lab x, Lab y, Lab z, int d) const {
        std::vector<int> out;
        Cell pc = prod_cell(y, z);
        for (int f = 0; f < count(pc); ++f)
            if (mult(y, z, f) > 0 && mult(x, Lab{pc, f}, d) > 0)
                out.push_back(f);
        return out;
    }

    CMat gamma(Lab x, Lab y, Lab z, int d) const {
        auto es = elist(x, y, z, d);
        auto fs = flist(x, y, z, d);
        if (es.size() != fs.size())
            throw ValidationError("associator matrix is not square");
        CMat m(int(es.size()), int(fs.size()));
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = 0; j < fs.size(); ++j)
                m.at(int(i), int(j)) = assoc(x, y, z, d, es[i], fs[j]);
        return m;
    }

    Scalar gamma_entry(Lab x, Lab y, Lab z, int d, int e, int f) const {
        return assoc(x, y, z, d, e, f);
    }

    // entry of the inverse associator matrix at (row f, col e)
    Scalar gamma_inv_entry(Lab x, Lab y, Lab z, int d, int f, int e) const {
        if (is_unit(x) || is_unit(y) || is_unit(z))
            return assoc(x, y, z, d, e, f);  // unit associators are identities
        auto es = elist(x, y, z, d);
        auto fs = flist(x, y, z, d);
        auto ei = std::find(es.begin(), es.end(), e);
        auto fi = std::find(fs.begin(), fs.end(), f);
        if (ei == es.end() || fi == fs.end())
            throw ValidationError("gamma_inv_entry: inadmissible index");
        CMat inv = gamma(x, y, z, d).inverse();
        return inv.at(int(fi - fs.begin()), int(ei - es.begin()));
    }

    Scalar ev(Lab x) const { return ev_[int(x.cell)][x.idx]; }
    Scalar coev(Lab x) const { return coev_[int(x.cell)][x.idx]; }
    Scalar lev(Lab x) const { return lev_[int(x.cell)][x.idx]; }
    Scalar lcoev(Lab x) const { return lcoev_[int(x.cell)][x.idx]; }
    double snake_residual(Lab x) const {
        return snake_resid_[int(x.cell)][x.idx];
    }

    // Solve the four snake identities per label in the gauge coev = lcoev = 1.
    // Residuals record the discrepancy between the two snake determinations,
    // which must coincide for coherent data.
    void solve_duals() {
        for (int c = 0; c < 4; ++c) {
            int n = nlab[c];
            ev_[c].assign(n, Scalar(1));
            coev_[c].assign(n, Scalar(1));
            lev_[c].assign(n, Scalar(1));
            lcoev_[c].assign(n, Scalar(1));
            snake_resid_[c].assign(n, 0.0);
            if (dual[c].empty()) continue;
            for (int i = 0; i < n; ++i) {
                Lab x{Cell(c), i};
                Lab xd = dual_lab(x);
                Lab u_src = unit(cell_src(x.cell));
                Lab u_tgt = unit(cell_tgt(x.cell));
                // right duality: ev: (x^v, x) -> unit_tgt, coev: unit_src -> (x, x^v)
                Scalar t1 = assoc(x, xd, x, x.idx, u_src.idx, u_tgt.idx);
                Scalar t2 =
                    gamma_inv_entry(xd, x, xd, xd.idx, u_src.idx, u_tgt.idx);
                ev_[c][i] = Scalar(1) / t1;
                double r1 = std::abs(t1 - t2);
                // left duality: lev: (x, x^v) -> unit_src, lcoev: unit_tgt -> (x^v, x)
                Scalar s1 = gamma_inv_entry(x, xd, x, x.idx, u_tgt.idx, u_src.idx);
                Scalar s2 = assoc(xd, x, xd, xd.idx, u_tgt.idx, u_src.idx);
                lev_[c][i] = Scalar(1) / s1;
                snake_resid_[c][i] = std::max(r1, std::abs(s1 - s2));
            }
        }
    }

    // canonical square-of-double-dual trivialization component
    Scalar radford_component(Lab x) const {
        Lab xd = dual_lab(x);
        return coev(xd) * ev(x) / (coev(x) * ev(xd));
    }
};

// ---------------------------------------------------------------------------
// word engine: linear combinations of fusion trees over a composable word.
// The tree for word w[0..n-1] stores t[k] = simple channel of the composite
// of the suffix w[k..n-1] (right-associated), with t[n-1] = w[n-1].

struct Engine {
    const Calculus* C = nullptr;
    std::vector<Lab> w;
    // amp[current tree][start tree] -> coefficient
    std::map<std::vector<int>, std::map<std::vector<int>, Scalar>> amp;

    Engine(const Calculus& calc, std::vector<Lab> word) : C(&calc), w(std::move(word)) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (!Calculus::composable(w[i], w[i + 1]))
                throw ValidationError("Engine: word not composable");
        std::vector<int> t(w.size(), 0);
        seed(t, int(w.size()) - 1);
    }

    Cell suffix_cell(std::size_t k) const {
        return cell_of(cell_src(w[k].cell), cell_tgt(w.back().cell));
    }

    void seed(std::vector<int>& t, int k) {
        if (k < 0) { amp[t][t] = Scalar(1); return; }
        if (k == int(w.size()) - 1) {
            t[k] = w[k].idx;
            seed(t, k - 1);
            return;
        }
        Lab suff{suffix_cell(k + 1), t[std::size_t(k) + 1]};
        for (int z : C->channels(w[k], suff)) {
            t[k] = z;
            seed(t, k - 1);
        }
    }

    // apply the fusion basis morphism w[i]*w[i+1] -> y
    void fuse(std::size_t i, Lab y) {
        if (i + 1 >= w.size()) throw ValidationError("fuse: bad position");
        if (C->mult(w[i], w[i + 1], y.idx) <= 0)
            throw ValidationError("fuse: inadmissible channel");
        std::map<std::vector<int>, std::map<std::vector<int>, Scalar>> out;
        const std::size_t n = w.size();
        for (auto& [t, starts] : amp) {
            Scalar coeff;
            if (i + 1 == n - 1) {
                if (t[i] != y.idx) continue;
                coeff = Scalar(1);
            } else {
                Lab suff{suffix_cell(i + 2), t[i + 2]};
                if (C->mult(y, suff, t[i]) <= 0) continue;
                coeff = C->gamma_inv_entry(w[i], w[i + 1], suff, t[i],
                                           t[i + 1], y.idx);
            }
            if (coeff == Scalar(0)) continue;
            std::vector<int> nt = t;
            nt.erase(nt.begin() + long(i) + 1);
            for (auto& [s, v] : starts) out[nt][s] += coeff * v;
        }
        w[i] = y;
        w.erase(w.begin() + long(i) + 1);
        amp = std::move(out);
    }

    // apply the splitting basis morphism w[i] -> p*q
    void split(std::size_t i, Lab p, Lab q) {
        if (i >= w.size()) throw ValidationError("split: bad position");
        if (C->mult(p, q, w[i].idx) <= 0)
            throw ValidationError("split: inadmissible channel");
        std::map<std::vector<int>, std::map<std::vector<int>, Scalar>> out;
        const std::size_t n = w.size();
        Lab old = w[i];
        for (auto& [t, starts] : amp) {
            if (i == n - 1) {
                std::vector<int> nt = t;
                nt.push_back(q.idx);
                for (auto& [s, v] : starts) out[nt][s] += v;
            } else {
                Lab suff{suffix_cell(i + 1), t[i + 1]};
                for (int u : C->channels(q, suff)) {
                    if (C->mult(p, Lab{Calculus::prod_cell(q, suff), u},
                                t[i]) <= 0)
                        continue;
                    Scalar coeff =
                        C->gamma_entry(p, q, suff, t[i], old.idx, u);
                    if (coeff == Scalar(0)) continue;
                    std::vector<int> nt = t;
                    nt.insert(nt.begin() + long(i) + 1, u);
                    for (auto& [s, v] : starts) out[nt][s] += coeff * v;
                }
            }
        }
        w[i] = p;
        w.insert(w.begin() + long(i) + 1, q);
        amp = std::move(out);
    }

    void insert_unit(std::size_t j) {
        int object = j < w.size() ? cell_src(w[j].cell)
                                  : cell_tgt(w.back().cell);
        Lab u = C->unit(object);
        std::map<std::vector<int>, std::map<std::vector<int>, Scalar>> out;
        for (auto& [t, starts] : amp) {
            std::vector<int> nt = t;
            int val = j < t.size() ? t[j] : u.idx;
            nt.insert(nt.begin() + long(j), val);
            out[nt] = starts;
        }
        w.insert(w.begin() + long(j), u);
        amp = std::move(out);
    }

    void remove_unit(std::size_t j) {
        if (j >= w.size() || !C->is_unit(w[j]))
            throw ValidationError("remove_unit: not a unit");
        std::map<std::vector<int>, std::map<std::vector<int>, Scalar>> out;
        for (auto& [t, starts] : amp) {
            std::vector<int> nt = t;
            nt.erase(nt.begin() + long(j));
            for (auto& [s, v] : starts) out[nt][s] += v;
        }
        w.erase(w.begin() + long(j));
        amp = std::move(out);
    }

    void scale(Scalar c) {
        for (auto& [t, starts] : amp)
            for (auto& [s, v] : starts) v *= c;
    }

    // evaluation of a right-dual pair: expects (x^v, x) at positions (i, i+1)
    void ev_pair(std::size_t i) {
        Lab x = w[i + 1];
        if (w[i] != C->dual_lab(x)) throw ValidationError("ev_pair: mismatch");
        Lab u = C->unit(cell_tgt(x.cell));
        fuse(i, u);
        scale(C->ev(x));
        remove_unit(i);
    }

    // evaluation of a left-dual pair: expects (x, ^v x) at positions (i, i+1)
    void lev_pair(std::size_t i) {
        Lab x = w[i];
        if (w[i + 1] != C->dual_lab(x)) throw ValidationError("lev_pair: mismatch");
        Lab u = C->unit(cell_src(x.cell));
        fuse(i, u);
        scale(C->lev(x));
        remove_unit(i);
    }

    // coevaluation inserted at boundary j: unit -> (x, x^v)
    void coev_at(std::size_t j, Lab x) {
        insert_unit(j);
        split(j, x, C->dual_lab(x));
        scale(C->coev(x));
    }

    // left coevaluation at boundary j: unit -> (^v x, x)
    void lcoev_at(std::size_t j, Lab x) {
        insert_unit(j);
        split(j, C->dual_lab(x), x);
        scale(C->lcoev(x));
    }

    // after reduction to a single-label word, the coefficient against a start tree
    Scalar scalar(const std::vector<int>& start_tree) const {
        if (w.size() != 1) throw ValidationError("scalar: word not reduced");
        Scalar out(0);
        for (auto& [t, starts] : amp) {
            auto it = starts.find(start_tree);
            if (it != starts.end()) out += it->second;
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// generic coherence pentagon over all composable quadruples whose cell path
// satisfies `take`; the path string ("00010" etc.) names the diagram family.

void verify_pentagons(const Calculus& C, const Tolerance& tol,
                      const std::function<bool(const std::string&)>& take,
                      CheckReport& rep, int jobs = 1);

// scalar of the right double dual of the basis morphism x*y -> z, relative to
// the basis itself, transported through the canonical pair-of-duals chain
Scalar double_dual_scalar(const Calculus& C, Lab x, Lab y, Lab z);

// scalar of the right dual (z^v -> y^v * x^v) of the basis morphism x*y -> z
Scalar dual_of_basis(const Calculus& C, Lab x, Lab y, Lab z);

}  // namespace skelcat
