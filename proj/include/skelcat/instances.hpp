#pragma once

#include <optional>

#include "skelcat/graded.hpp"

namespace skelcat {

struct NotACocycle : SkelError {
    using SkelError::SkelError;
};

// Vec: the one-label category
FusionData make_vec();

// pointed category on Z/n with the standard cocycle
//   w(a,b,c) = exp(2 pi i * q * a * floor((b+c)/n) / n)
FusionData make_pointed_cyclic(int n, int q);

// pointed category on an arbitrary finite group from an explicit normalized
// 3-cocycle table (flattened [a][b][c]); throws NotACocycle
FusionData make_pointed(const GroupTable& G, const std::vector<Scalar>& omega,
                        const Tolerance& tol = {});

// Fibonacci: 1, t with t*t = 1 + t
FusionData make_fibonacci();

// ---------------------------------------------------------------------------
// instance file schema

struct FusionGrading {
    std::string target;  // fusion block name
    GradingData g;
};

struct PivotalSeed {
    std::string target;  // fusion or module block name
    Assignment p;
};

struct SerreSeed {
    std::string target;  // module block name
    std::vector<int> object_map;
};

// In-memory image of one instance file.  Module blocks carry a resolved copy
// of their base; the context carries resolved copies of A, B and M.
struct InstanceFile {
    std::string schema_version = "1.0";
    std::string gauge = "coev=1; ihom counit=1; unit pinned";
    std::vector<FusionData> fusion;  // at least one
    std::vector<ModuleData> module;
    std::optional<MoritaContextData> context;
    std::optional<FusionGrading> grading;           // grading of one base
    std::optional<ContextGrading> context_grading;  // grading of the context
    std::vector<PivotalSeed> pivotal;
    std::vector<SerreSeed> serre;
    std::vector<std::string> warnings;  // lenient-mode notes, not serialized
};

// Parse/serialize the versioned JSON schema.  Strict mode rejects unknown
// fields with SchemaError; lenient mode records them in `warnings`.  Every
// block is structurally validated on load and references must resolve.
InstanceFile parse_instance(const std::string& json_text, bool strict = true);
InstanceFile load_instance(const std::string& path, bool strict = true);
std::string save_instance(const InstanceFile& f);
void save_instance(const InstanceFile& f, const std::string& path);

// the bundled corpus as (file name, content) pairs
std::vector<std::pair<std::string, InstanceFile>> bundled_corpus();

}  // namespace skelcat
