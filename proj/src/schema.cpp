#include <fstream>
#include <sstream>

#include "json.hpp"
#include "skelcat/instances.hpp"

namespace skelcat {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1.0";

// ---------------------------------------------------------------------------
// emit

ojson scalar_entry(std::vector<int> idx, Scalar v) {
    ojson row = ojson::array();
    for (int i : idx) row.push_back(i);
    row.push_back(v.real());
    row.push_back(v.imag());
    return row;
}

ojson int_entry(std::vector<int> idx, int v) {
    ojson row = ojson::array();
    for (int i : idx) row.push_back(i);
    row.push_back(v);
    return row;
}

ojson emit_fusion(const FusionData& fd) {
    ojson j;
    j["name"] = fd.name;
    j["labels"] = fd.labels;
    j["unit"] = fd.unit;
    j["dual"] = fd.dual;
    ojson N = ojson::array();
    for (int a = 0; a < fd.n(); ++a)
        for (int b = 0; b < fd.n(); ++b)
            for (int c = 0; c < fd.n(); ++c)
                if (fd.N(a, b, c) != 0)
                    N.push_back(int_entry({a, b, c}, fd.N(a, b, c)));
    j["N"] = std::move(N);
    ojson F = ojson::array();
    for (const auto& [k, v] : fd.F)
        F.push_back(scalar_entry({k[0], k[1], k[2], k[3], k[4], k[5]}, v));
    j["F"] = std::move(F);
    return j;
}

ojson emit_module(const ModuleData& md) {
    ojson j;
    j["name"] = md.name;
    j["base"] = md.base.name;
    j["mlabels"] = md.mlabels;
    ojson act = ojson::array();
    for (int a = 0; a < md.base.n(); ++a)
        for (int m = 0; m < md.nm(); ++m)
            for (int k = 0; k < md.nm(); ++k)
                if (md.act(a, m, k) != 0)
                    act.push_back(int_entry({a, m, k}, md.act(a, m, k)));
    j["action"] = std::move(act);
    ojson L = ojson::array();
    for (const auto& [k, v] : md.L)
        L.push_back(scalar_entry({k[0], k[1], k[2], k[3], k[4], k[5]}, v));
    j["L"] = std::move(L);
    return j;
}

ojson emit_table(const std::vector<int>& flat, int d0, int d1, int d2) {
    ojson t = ojson::array();
    for (int i = 0; i < d0; ++i)
        for (int j = 0; j < d1; ++j)
            for (int k = 0; k < d2; ++k) {
                int v = flat[(std::size_t(i) * d1 + j) * d2 + k];
                if (v != 0) t.push_back(int_entry({i, j, k}, v));
            }
    return t;
}

ojson emit_context(const MoritaContextData& ctx) {
    ojson j;
    j["name"] = ctx.name;
    j["A"] = ctx.A.name;
    j["B"] = ctx.B.name;
    j["M"] = ctx.M.name;
    j["nlabels"] = ctx.nlabels;
    j["act_mb"] = emit_table(ctx.act_mb, ctx.nm(), ctx.nb(), ctx.nm());
    j["act_bn"] = emit_table(ctx.act_bn, ctx.nb(), ctx.nn(), ctx.nn());
    j["act_na"] = emit_table(ctx.act_na, ctx.nn(), ctx.na(), ctx.nn());
    j["mixt"] = emit_table(ctx.mixt_, ctx.nm(), ctx.nn(), ctx.na());
    j["mixtd"] = emit_table(ctx.mixtd_, ctx.nn(), ctx.nm(), ctx.nb());
    ojson as = ojson::array();
    for (const auto& [k, v] : ctx.assoc)
        as.push_back(scalar_entry(
            {k[0], k[1], k[2], k[3], k[4], k[5], k[6], k[7], k[8]}, v));
    j["assoc"] = std::move(as);
    j["structure_tier"] = ctx.structure_tier;
    if (!ctx.warning.empty()) j["warning"] = ctx.warning;
    return j;
}

ojson emit_group(const GroupTable& G) {
    ojson j;
    j["elems"] = G.elems;
    j["mul"] = G.mul;
    return j;
}

// ---------------------------------------------------------------------------
// parse

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw SchemaError("schema: " + where + ": " + what);
}

void check_keys(const json& j, const std::vector<std::string>& allowed,
                const std::string& where, bool strict,
                std::vector<std::string>& warnings) {
    if (!j.is_object()) fail(where, "expected an object");
    for (const auto& [k, v] : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
            if (strict) fail(where, "unknown field '" + k + "'");
            warnings.push_back(where + ": ignored unknown field '" + k + "'");
        }
    }
}

const json& field(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::vector<std::string> parse_strings(const json& j,
                                       const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) fail(where, "expected an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::vector<int> parse_ints(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of integers");
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) fail(where, "expected integers");
        out.push_back(e.get<int>());
    }
    return out;
}

// rows [i0..i_{rank-1}, re, im]
template <std::size_t Rank>
std::map<std::array<int, Rank>, Scalar> parse_scalar_rows(
    const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of rows");
    std::map<std::array<int, Rank>, Scalar> out;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != Rank + 2)
            fail(where, "each row needs " + std::to_string(Rank) +
                            " indices plus re, im");
        std::array<int, Rank> k{};
        for (std::size_t i = 0; i < Rank; ++i) {
            if (!row[i].is_number_integer()) fail(where, "indices are ints");
            k[i] = row[i].get<int>();
        }
        if (!row[Rank].is_number() || !row[Rank + 1].is_number())
            fail(where, "re/im must be numbers");
        Scalar v(row[Rank].get<double>(), row[Rank + 1].get<double>());
        if (out.count(k)) fail(where, "duplicate index tuple");
        out[k] = v;
    }
    return out;
}

// rows [i,j,k,mult] into a flattened table
std::vector<int> parse_table(const json& j, int d0, int d1, int d2,
                             const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of rows");
    std::vector<int> out(std::size_t(d0) * d1 * d2, 0);
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 4)
            fail(where, "each row is [i, j, k, mult]");
        for (const auto& e : row)
            if (!e.is_number_integer()) fail(where, "entries are ints");
        int i = row[0].get<int>(), jj = row[1].get<int>(),
            k = row[2].get<int>(), v = row[3].get<int>();
        if (i < 0 || i >= d0 || jj < 0 || jj >= d1 || k < 0 || k >= d2)
            fail(where, "index out of range");
        if (v < 0) fail(where, "negative multiplicity");
        out[(std::size_t(i) * d1 + jj) * d2 + k] = v;
    }
    return out;
}

FusionData parse_fusion(const json& j, bool strict,
                        std::vector<std::string>& warnings) {
    check_keys(j, {"name", "labels", "unit", "dual", "N", "F"}, "fusion",
               strict, warnings);
    FusionData fd;
    fd.name = field(j, "name", "fusion").get<std::string>();
    const std::string where = "fusion '" + fd.name + "'";
    fd.labels = parse_strings(field(j, "labels", where), where + ".labels");
    const int n = fd.n();
    if (n == 0) fail(where, "empty label set");
    fd.unit = field(j, "unit", where).get<int>();
    fd.dual = parse_ints(field(j, "dual", where), where + ".dual");
    fd.Nmult = LabeledTensor({"a", "b", "c"}, {n, n, n});
    fd.Nmult.data = parse_table(field(j, "N", where), n, n, n, where + ".N");
    for (const auto& [k, v] :
         parse_scalar_rows<6>(field(j, "F", where), where + ".F")) {
        for (int i : k)
            if (i < 0 || i >= n) fail(where + ".F", "index out of range");
        fd.F[k] = v;
    }
    try {
        validate_fusion(fd);
    } catch (const SkelError& e) {
        fail(where, e.what());
    }
    return fd;
}

ModuleData parse_module(const json& j, const std::vector<FusionData>& bases,
                        bool strict, std::vector<std::string>& warnings) {
    check_keys(j, {"name", "base", "mlabels", "action", "L"}, "module",
               strict, warnings);
    ModuleData md;
    md.name = field(j, "name", "module").get<std::string>();
    const std::string where = "module '" + md.name + "'";
    const std::string ref = field(j, "base", where).get<std::string>();
    auto it = std::find_if(bases.begin(), bases.end(),
                           [&](const FusionData& f) { return f.name == ref; });
    if (it == bases.end()) fail(where, "unresolved base '" + ref + "'");
    md.base = *it;
    md.mlabels = parse_strings(field(j, "mlabels", where), where + ".mlabels");
    const int na = md.base.n(), nm = md.nm();
    if (nm == 0) fail(where, "empty module label set");
    md.action = parse_table(field(j, "action", where), na, nm, nm,
                            where + ".action");
    for (const auto& [k, v] :
         parse_scalar_rows<6>(field(j, "L", where), where + ".L")) {
        if (k[0] < 0 || k[0] >= na || k[1] < 0 || k[1] >= na || k[2] < 0 ||
            k[2] >= nm || k[3] < 0 || k[3] >= nm)
            fail(where + ".L", "index out of range");
        md.L[k] = v;
    }
    return md;
}

MoritaContextData parse_context(const json& j, const InstanceFile& f,
                                bool strict,
                                std::vector<std::string>& warnings) {
    check_keys(j,
               {"name", "A", "B", "M", "nlabels", "act_mb", "act_bn",
                "act_na", "mixt", "mixtd", "assoc", "structure_tier",
                "warning"},
               "context", strict, warnings);
    MoritaContextData ctx;
    ctx.name = field(j, "name", "context").get<std::string>();
    const std::string where = "context '" + ctx.name + "'";
    auto fusion_ref = [&](const char* key) -> const FusionData& {
        const std::string ref = field(j, key, where).get<std::string>();
        for (const auto& fd : f.fusion)
            if (fd.name == ref) return fd;
        fail(where, std::string("unresolved fusion '") + ref + "'");
    };
    ctx.A = fusion_ref("A");
    ctx.B = fusion_ref("B");
    const std::string mref = field(j, "M", where).get<std::string>();
    auto it = std::find_if(f.module.begin(), f.module.end(),
                           [&](const ModuleData& m) { return m.name == mref; });
    if (it == f.module.end()) fail(where, "unresolved module '" + mref + "'");
    ctx.M = *it;
    if (ctx.M.base.name != ctx.A.name)
        fail(where, "bridge module is not over the first base");
    ctx.nlabels = parse_strings(field(j, "nlabels", where), where + ".nlabels");
    const int na = ctx.na(), nb = ctx.nb(), nm = ctx.nm(), nn = ctx.nn();
    if (nn != nm) fail(where, "opposite bridge must mirror the bridge");
    ctx.act_mb = parse_table(field(j, "act_mb", where), nm, nb, nm,
                             where + ".act_mb");
    ctx.act_bn = parse_table(field(j, "act_bn", where), nb, nn, nn,
                             where + ".act_bn");
    ctx.act_na = parse_table(field(j, "act_na", where), nn, na, nn,
                             where + ".act_na");
    ctx.mixt_ = parse_table(field(j, "mixt", where), nm, nn, na,
                            where + ".mixt");
    ctx.mixtd_ = parse_table(field(j, "mixtd", where), nn, nm, nb,
                             where + ".mixtd");
    for (const auto& [k, v] :
         parse_scalar_rows<9>(field(j, "assoc", where), where + ".assoc")) {
        for (int i = 0; i < 3; ++i)
            if (k[i] < 0 || k[i] > 3) fail(where + ".assoc", "bad cell tag");
        ctx.assoc[k] = v;
    }
    ctx.structure_tier = field(j, "structure_tier", where).get<bool>();
    if (j.contains("warning")) ctx.warning = j["warning"].get<std::string>();
    return ctx;
}

GroupTable parse_group(const json& j, const std::string& where, bool strict,
                       std::vector<std::string>& warnings) {
    check_keys(j, {"elems", "mul"}, where, strict, warnings);
    GroupTable G;
    G.elems = parse_strings(field(j, "elems", where), where + ".elems");
    G.mul = parse_ints(field(j, "mul", where), where + ".mul");
    try {
        validate_group(G);
    } catch (const SkelError& e) {
        fail(where, e.what());
    }
    return G;
}

}  // namespace

std::string save_instance(const InstanceFile& f) {
    ojson j;
    j["schema_version"] = f.schema_version;
    j["gauge"] = f.gauge;
    ojson fus = ojson::array();
    for (const auto& fd : f.fusion) fus.push_back(emit_fusion(fd));
    j["fusion"] = std::move(fus);
    if (!f.module.empty()) {
        ojson mods = ojson::array();
        for (const auto& md : f.module) mods.push_back(emit_module(md));
        j["module"] = std::move(mods);
    }
    if (f.context) j["context"] = emit_context(*f.context);
    if (f.grading) {
        ojson g;
        g["target"] = f.grading->target;
        g["group"] = emit_group(f.grading->g.group);
        g["deg"] = f.grading->g.deg;
        j["grading"] = std::move(g);
    }
    if (f.context_grading) {
        ojson g;
        g["group"] = emit_group(f.context_grading->group);
        g["deg_a"] = f.context_grading->deg_a;
        g["deg_m"] = f.context_grading->deg_m;
        g["deg_b"] = f.context_grading->deg_b;
        g["deg_n"] = f.context_grading->deg_n;
        j["context_grading"] = std::move(g);
    }
    if (!f.pivotal.empty()) {
        ojson seeds = ojson::array();
        for (const auto& s : f.pivotal) {
            ojson e;
            e["target"] = s.target;
            ojson p = ojson::array();
            for (int i = 0; i < int(s.p.size()); ++i)
                p.push_back(scalar_entry({i}, s.p[std::size_t(i)]));
            e["p"] = std::move(p);
            seeds.push_back(std::move(e));
        }
        j["pivotal"] = std::move(seeds);
    }
    if (!f.serre.empty()) {
        ojson seeds = ojson::array();
        for (const auto& s : f.serre) {
            ojson e;
            e["target"] = s.target;
            e["object_map"] = s.object_map;
            seeds.push_back(std::move(e));
        }
        j["serre"] = std::move(seeds);
    }
    return j.dump(2) + "\n";
}

void save_instance(const InstanceFile& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError("schema: cannot open '" + path + "' to write");
    out << save_instance(f);
}

InstanceFile parse_instance(const std::string& json_text, bool strict) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("schema: JSON parse error: ") + e.what());
    }
    InstanceFile f;
    try {
    check_keys(j,
               {"schema_version", "gauge", "fusion", "module", "context",
                "grading", "context_grading", "pivotal", "serre"},
               "top level", strict, f.warnings);
    f.schema_version = field(j, "schema_version", "top level").get<std::string>();
    if (f.schema_version != kSchemaVersion)
        fail("top level", "unsupported schema_version '" + f.schema_version +
                              "' (supported: " + kSchemaVersion + ")");
    f.gauge = field(j, "gauge", "top level").get<std::string>();
    const json& fus = field(j, "fusion", "top level");
    if (!fus.is_array() || fus.empty())
        fail("top level", "at least one fusion block is required");
    for (const auto& e : fus) {
        FusionData fd = parse_fusion(e, strict, f.warnings);
        for (const auto& prev : f.fusion)
            if (prev.name == fd.name)
                fail("fusion", "duplicate block name '" + fd.name + "'");
        f.fusion.push_back(std::move(fd));
    }
    if (j.contains("module")) {
        if (!j["module"].is_array()) fail("module", "expected an array");
        for (const auto& e : j["module"]) {
            ModuleData md = parse_module(e, f.fusion, strict, f.warnings);
            for (const auto& prev : f.module)
                if (prev.name == md.name)
                    fail("module", "duplicate block name '" + md.name + "'");
            f.module.push_back(std::move(md));
        }
    }
    if (j.contains("context"))
        f.context = parse_context(j["context"], f, strict, f.warnings);
    if (j.contains("grading")) {
        const json& g = j["grading"];
        check_keys(g, {"target", "group", "deg"}, "grading", strict,
                   f.warnings);
        FusionGrading fg;
        fg.target = field(g, "target", "grading").get<std::string>();
        bool found = false;
        for (const auto& fd : f.fusion) found |= fd.name == fg.target;
        if (!found) fail("grading", "unresolved target '" + fg.target + "'");
        fg.g.group = parse_group(field(g, "group", "grading"), "grading.group",
                                 strict, f.warnings);
        fg.g.deg = parse_ints(field(g, "deg", "grading"), "grading.deg");
        f.grading = std::move(fg);
    }
    if (j.contains("context_grading")) {
        if (!f.context) fail("context_grading", "no context block");
        const json& g = j["context_grading"];
        check_keys(g, {"group", "deg_a", "deg_m", "deg_b", "deg_n"},
                   "context_grading", strict, f.warnings);
        ContextGrading cg;
        cg.group = parse_group(field(g, "group", "context_grading"),
                               "context_grading.group", strict, f.warnings);
        const std::string w = "context_grading";
        cg.deg_a = parse_ints(field(g, "deg_a", w), w + ".deg_a");
        cg.deg_m = parse_ints(field(g, "deg_m", w), w + ".deg_m");
        cg.deg_b = parse_ints(field(g, "deg_b", w), w + ".deg_b");
        cg.deg_n = parse_ints(field(g, "deg_n", w), w + ".deg_n");
        f.context_grading = std::move(cg);
    }
    if (j.contains("pivotal")) {
        if (!j["pivotal"].is_array()) fail("pivotal", "expected an array");
        for (const auto& e : j["pivotal"]) {
            check_keys(e, {"target", "p"}, "pivotal", strict, f.warnings);
            PivotalSeed s;
            s.target = field(e, "target", "pivotal").get<std::string>();
            auto rows = parse_scalar_rows<1>(field(e, "p", "pivotal"),
                                             "pivotal.p");
            s.p.assign(rows.size(), Scalar(0));
            for (const auto& [k, v] : rows) {
                if (k[0] < 0 || k[0] >= int(rows.size()))
                    fail("pivotal.p", "component indices must be 0..n-1");
                s.p[std::size_t(k[0])] = v;
            }
            f.pivotal.push_back(std::move(s));
        }
    }
    if (j.contains("serre")) {
        if (!j["serre"].is_array()) fail("serre", "expected an array");
        for (const auto& e : j["serre"]) {
            check_keys(e, {"target", "object_map"}, "serre", strict,
                       f.warnings);
            SerreSeed s;
            s.target = field(e, "target", "serre").get<std::string>();
            s.object_map = parse_ints(field(e, "object_map", "serre"),
                                      "serre.object_map");
            f.serre.push_back(std::move(s));
        }
    }
    } catch (const json::exception& e) {
        throw SchemaError(std::string("schema: malformed value: ") + e.what());
    }
    return f;
}

InstanceFile load_instance(const std::string& path, bool strict) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("schema: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str(), strict);
}

}  // namespace skelcat
