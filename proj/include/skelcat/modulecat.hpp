#pragma once

#include "skelcat/fusion.hpp"

namespace skelcat {

// finitely supported multiplicity vector over a category's label set
struct ObjectDecomposition {
    std::map<int, int> mults;  // label index -> multiplicity >= 0
    int mult(int a) const {
        auto it = mults.find(a);
        return it == mults.end() ? 0 : it->second;
    }
};

// Skeletal left module category over a fusion base.
//   action[a][m][n]  = multiplicity of simple n in a |> m
//   L(a,b,m; n)[e,k] = mixed associator:
//     basis((a b) |> m -> n via e in a*b) =
//       sum_k L[e,k] * basis(a |> (b |> m) -> n via k in b |> m)
// Entries with a unit slot are implicit identities and must not be stored.
struct ModuleData {
    std::string name;
    FusionData base;
    std::vector<std::string> mlabels;
    std::vector<int> action;               // flattened [a][m][n]
    std::map<std::array<int, 6>, Scalar> L;  // (a,b,m,n,e,k)

    int nm() const { return int(mlabels.size()); }
    int act(int a, int m, int n) const {
        return action[std::size_t(a) * std::size_t(nm()) * std::size_t(nm()) +
                      std::size_t(m) * std::size_t(nm()) + std::size_t(n)];
    }
    bool multiplicity_free() const {
        if (!base.multiplicity_free()) return false;
        for (int v : action)
            if (v > 1) return false;
        return true;
    }
};

struct SerreData {
    std::vector<int> object_map;               // permutation of mlabels
    std::map<std::array<int, 3>, Scalar> twist;  // (a, m, m') with m' in a|>m
    CheckReport report;                        // coherence-pentagon residuals
};

struct IhomMaps {
    int m = 0;
    // (a, n): component of Hom(a|>m, n) ~ Hom(m, a^v |> n)
    std::map<std::array<int, 2>, Scalar> adjunction;
    // (a, n, c, b, m'): component of Hom(m,n) (x) a^v ~ (+)_{m'} Hom(m', n)
    std::map<std::array<int, 5>, Scalar> tensor_form;
    CheckReport report;  // triangle and adjunction round-trip residuals
};

// the A/M corner of the calculus: base fusion data plus the left action
Calculus module_calculus(const ModuleData& md);

// structural invariants plus the base and mixed pentagon identities
CheckReport validate_module(const ModuleData& md, const Tolerance& tol,
                            int jobs = 1);

ObjectDecomposition internal_hom(const ModuleData& md, int m, int n);
ObjectDecomposition internal_cohom(const ModuleData& md, int m, int n);

IhomMaps ihom_structure_maps(const ModuleData& md, int m,
                             const Tolerance& tol);

SerreData serre_data(const ModuleData& md, const Tolerance& tol);

// all assignments p~ over mlabels with p~_{m'} = twist[a,m,m'] * p_a * p~_m,
// normalized by pinning the first module label to 1
std::vector<Assignment> solve_module_pivotal(const ModuleData& md,
                                             const Assignment& p,
                                             const Tolerance& tol,
                                             int root_order_bound = 12);

CheckReport verify_module_pivotal(const ModuleData& md, const Assignment& p,
                                  const Assignment& pt, const Tolerance& tol);

// components of the trivialized square of the relative Serre functor,
// normalized at the first module label; residual report included
std::pair<std::vector<Scalar>, CheckReport> radford_module_components(
    const ModuleData& md, const Tolerance& tol);

// componentwise p~_{S(m)} * p~_m = r(m)
CheckReport check_spherical_module(const ModuleData& md, const Assignment& p,
                                   const Assignment& pt, const Tolerance& tol);

// bundled module constructors
ModuleData make_regular_module(const FusionData& fd);
ModuleData make_vec_module(const FusionData& fd);  // pointed, coboundary only

}  // namespace skelcat
