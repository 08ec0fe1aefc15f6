#pragma once

#include <functional>

#include "skelcat/modulecat.hpp"

namespace skelcat {

struct ActionsDoNotCommute : SkelError {
    using SkelError::SkelError;
};

// A 1-morphism of the two-object bicategory: a formal direct sum of simple
// labels inside one hom-cell.
struct OneMorphism {
    Cell cell = Cell::A;
    std::vector<int> labels;
};

// Assembled data of a two-object bicategory built on a pair of fusion bases
// and a bridging module.  The opposite bridge N mirrors M's labels; the six
// products beyond the two base corners are stored as flattened multiplicity
// tables, and every associator family outside the two base corners lives in
// `assoc`, keyed exactly like Calculus::assoc_.
struct MoritaContextData {
    std::string name;
    FusionData A;
    FusionData B;
    ModuleData M;                      // left action of A on the bridge
    std::vector<std::string> nlabels;  // mirror labels of the opposite bridge

    std::vector<int> act_mb;  // [m][b][m']  m <| b
    std::vector<int> act_bn;  // [b][n][n']  b |> n
    std::vector<int> act_na;  // [n][a][n']  n <| a
    std::vector<int> mixt_;   // [m][n][a]   <m, n> decomposed over A
    std::vector<int> mixtd_;  // [n][m][b]   [n, m] decomposed over B

    // (cell x, cell y, cell z, x, y, z, d, e, f) -> scalar; covers the
    // fourteen patterns not handled by the two base corners
    std::map<std::array<int, 9>, Scalar> assoc;

    bool structure_tier = true;
    std::string warning;

    int na() const { return A.n(); }
    int nb() const { return B.n(); }
    int nm() const { return M.nm(); }
    int nn() const { return int(nlabels.size()); }

    int mb(int m, int b, int m2) const {
        return act_mb[(std::size_t(m) * nb() + b) * nm() + m2];
    }
    int bn(int b, int n, int n2) const {
        return act_bn[(std::size_t(b) * nn() + n) * nn() + n2];
    }
    int na_(int n, int a, int n2) const {
        return act_na[(std::size_t(n) * na() + a) * nn() + n2];
    }
    ObjectDecomposition mixt(int m, int n) const {
        ObjectDecomposition d;
        for (int a = 0; a < na(); ++a) {
            int v = mixt_[(std::size_t(m) * nn() + n) * na() + a];
            if (v > 0) d.mults[a] = v;
        }
        return d;
    }
    ObjectDecomposition mixtd(int n, int m) const {
        ObjectDecomposition d;
        for (int b = 0; b < nb(); ++b) {
            int v = mixtd_[(std::size_t(n) * nm() + m) * nb() + b];
            if (v > 0) d.mults[b] = v;
        }
        return d;
    }

    // coherence-isomorphism components: the two bridge-crossing associator
    // families (middle channel in the first base, resp. second base)
    Scalar alpha(int m, int n, int m2, int d, int e, int f) const;
    Scalar beta(int n, int m, int n2, int d, int e, int f) const;
};

// the full four-cell calculus of the context (duals solved)
Calculus morita_calculus(const MoritaContextData& ctx);

// Derives the opposite bridge and the mixed-product tables from the two
// actions.  Multiplicity tables are always populated; structure scalars are
// taken from `assoc_fn` (labels refer to the assembled calculus) when given
// and when every product is multiplicity-free, otherwise the context
// degrades to the dimension tier with a warning.
MoritaContextData build_canonical_context(
    const ModuleData& md, const FusionData& B,
    const std::vector<int>& right_action,  // [m][b][m']
    const std::function<Scalar(Lab, Lab, Lab, int, int, int)>& assoc_fn = {});

// bundled contexts
MoritaContextData make_regular_context(const FusionData& A);
MoritaContextData make_pointed_context(int n);  // coboundary pointed bases

// relabeling of simples (perm[i] = new index of old label i)
MoritaContextData relabel_context(const MoritaContextData& ctx,
                                  const std::vector<int>& perm_a,
                                  const std::vector<int>& perm_m,
                                  const std::vector<int>& perm_b);

// every coherence-pentagon family of the bicategory, all label instances
CheckReport verify_context_coherence(const MoritaContextData& ctx,
                                     const Tolerance& tol, int jobs = 1);

struct DualResult {
    OneMorphism dual;
    std::vector<Scalar> ev, coev;  // per summand, sides matching `side`
    std::vector<double> snake_residual;
};

enum class DualSide { Right, Left };

DualResult dual_1morphism(const MoritaContextData& ctx, const OneMorphism& x,
                          DualSide side);

// both zig-zag composites per simple 1-morphism, evaluated in the engine
CheckReport snake_suite(const MoritaContextData& ctx, const Tolerance& tol);

// the label-level duality calculus: dual-of-product, hom-adjunction and
// internal-hom identity families, compared exactly as integers
CheckReport duality_dim_suite(const MoritaContextData& ctx);

// double duals against the bridge Serre data: label maps and structure
// scalars on both bridges
CheckReport double_dual_suite(const MoritaContextData& ctx,
                              const Tolerance& tol);

// oriented double-dual structure scalar of the basis morphism x*y -> z in
// the context calculus; a pivotal family satisfies P_x P_y = dd * P_z
Scalar oriented_double_dual(const Calculus& C, Lab x, Lab y, Lab z);

struct PivotalTransport {
    Assignment q;     // second-base components
    Assignment phat;  // opposite-bridge components
    CheckReport report;
};

// transports a bridge pivotal structure across the context; the base pivotal
// structure enters through the mixed-product families
PivotalTransport pivotal_transport(const MoritaContextData& ctx,
                                   const Assignment& p, const Assignment& pt,
                                   const Tolerance& tol);

// the eight condition families of a pivotal structure on the bicategory,
// itemized per composable cell pattern
CheckReport pivotal_morita_suite(const MoritaContextData& ctx,
                                 const Assignment& p, const Assignment& pt,
                                 const Assignment& q, const Assignment& phat,
                                 const Tolerance& tol);

struct RadfordPseudoData {
    std::vector<Scalar> ra, rb, rm, rn;
    CheckReport report;
};

// pseudo-naturality squares of the square-of-Serre trivialization over every
// composable pair of simple 1-morphisms
RadfordPseudoData radford_pseudo_suite(const MoritaContextData& ctx,
                                       const Tolerance& tol);

// Grothendieck-level equivalence checks: ring maps, rank/injectivity of the
// four comparison assignments, commuting actions, mixed-product shadows
CheckReport strong_context_suite(const MoritaContextData& ctx);

}  // namespace skelcat
