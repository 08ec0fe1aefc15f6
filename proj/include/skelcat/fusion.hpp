#pragma once

#include "skelcat/calculus.hpp"
#include "skelcat/solver.hpp"

namespace skelcat {

// Skeletal fusion category data: labels, fusion multiplicities, dual
// involution, associator symbols on admissible tuples.
struct FusionData {
    std::string name;
    std::vector<std::string> labels;
    int unit = 0;
    std::vector<int> dual;
    LabeledTensor Nmult;                       // axes a, b, c
    std::map<std::array<int, 6>, Scalar> F;    // (a,b,c,d,e,f)

    int n() const { return int(labels.size()); }
    int N(int a, int b, int c) const { return Nmult.at({a, b, c}); }

    bool admissible(int a, int b, int c, int d, int e, int f) const {
        return N(a, b, e) > 0 && N(e, c, d) > 0 && N(b, c, f) > 0 &&
               N(a, f, d) > 0;
    }
    bool multiplicity_free() const {
        for (int v : Nmult.data)
            if (v > 1) return false;
        return true;
    }
};

struct DualityData {
    // per label: right evaluation/coevaluation, left evaluation/coevaluation,
    // and the residual between the two snake determinations
    std::vector<Scalar> ev, coev, lev, lcoev;
    std::vector<double> snake_residual;
};

struct SphericalVerdict {
    bool dsps = false;    // componentwise p^2 against the canonical square trivialization
    bool trace = false;   // left and right quantum dimensions agree
    double dsps_residual = 0.0;
    double trace_residual = 0.0;
    std::vector<Scalar> dim_plus, dim_minus;
};

// structural sanity of the data; throws ValidationError on defects
void validate_fusion(const FusionData& fd);

// the embedded one-cell calculus (duals solved)
Calculus fusion_calculus(const FusionData& fd);

CheckReport verify_pentagon(const FusionData& fd, const Tolerance& tol,
                            int jobs = 1);

DualityData ev_coev_data(const FusionData& fd);

// tensor structure scalars of the right double dual functor, oriented so that
// a pivotal structure satisfies p_a * p_b = delta[a][b][c] * p_c
std::map<std::array<int, 3>, Scalar> double_dual_structure(const FusionData& fd);

// canonical trivialization components of the square of the double dual;
// the monoidality residual (against delta^-2) is appended to `rep` if given
std::vector<Scalar> radford_components(const FusionData& fd,
                                       CheckReport* rep = nullptr,
                                       const Tolerance& tol = {});

std::vector<Assignment> solve_pivotal(const FusionData& fd,
                                      const Tolerance& tol,
                                      int root_order_bound = 12);

// brute-force census oracle over widened root candidates
std::vector<Assignment> solve_pivotal_brute(const FusionData& fd,
                                            const Tolerance& tol,
                                            int root_order_bound = 12);

CheckReport verify_pivotal(const FusionData& fd, const std::vector<Scalar>& p,
                           const Tolerance& tol);

// d+ and d- for each label under pivotal structure p
std::pair<std::vector<Scalar>, std::vector<Scalar>> quantum_dimensions(
    const FusionData& fd, const std::vector<Scalar>& p);

SphericalVerdict check_spherical_tensor(const FusionData& fd,
                                        const std::vector<Scalar>& p,
                                        const Tolerance& tol);

}  // namespace skelcat
