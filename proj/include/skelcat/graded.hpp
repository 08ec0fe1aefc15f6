#pragma once

#include "skelcat/morita.hpp"

namespace skelcat {

// finite group presented by its multiplication table
struct GroupTable {
    std::vector<std::string> elems;
    std::vector<int> mul;  // flattened [g][h]

    int order() const { return int(elems.size()); }
    int op(int g, int h) const { return mul[std::size_t(g) * order() + h]; }
    int identity() const;
    int inverse(int g) const;
};

GroupTable make_cyclic_group(int n);

// throws ValidationError unless the table is a group
void validate_group(const GroupTable& G);

// degree assignment on one label set
struct GradingData {
    GroupTable group;
    std::vector<int> deg;
};

// degree assignments on all four hom-cells of a context
struct ContextGrading {
    GroupTable group;
    std::vector<int> deg_a, deg_m, deg_b, deg_n;
};

// faithfulness and multiplicativity on the fusion ring
CheckReport validate_grading(const FusionData& fd, const GradingData& g);

// base grading plus action multiplicativity on the module labels
CheckReport validate_grading(const ModuleData& md, const GradingData& gbase,
                             const std::vector<int>& deg_m);

// multiplicativity across all eight products of the context, with the base
// grading faithful
CheckReport validate_grading(const MoritaContextData& ctx,
                             const ContextGrading& g);

// degree of every dual 1-morphism equals the inverse degree
CheckReport graded_dual_degree_check(const MoritaContextData& ctx,
                                     const ContextGrading& g);

// the relative Serre object map preserves degrees
CheckReport graded_object_map_check(const std::vector<int>& object_map,
                                    const GroupTable& G,
                                    const std::vector<int>& deg_m);
CheckReport graded_serre_check(const ModuleData& md,
                               const std::vector<int>& deg_m,
                               const GroupTable& G, const Tolerance& tol);

// full fusion subcategory spanned by the labels of one degree (closed under
// product and duals exactly when the degree is central and self-inverse;
// callers use the identity degree)
FusionData restrict_degree(const FusionData& fd, const GradingData& g,
                           int element);

// translation grading of the regular context of a pointed cyclic base
ContextGrading make_cyclic_context_grading(const MoritaContextData& ctx);

}  // namespace skelcat
