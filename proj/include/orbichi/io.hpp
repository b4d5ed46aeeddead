#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbichi/errors.hpp"
#include "orbichi/euler.hpp"
#include "orbichi/gspace.hpp"
#include "orbichi/group.hpp"
#include "orbichi/presentation.hpp"
#include "orbichi/series.hpp"
#include "orbichi/verify.hpp"
#include "orbichi/wreath.hpp"

namespace orbichi {

using nlohmann::json;

namespace detail {

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw parse_error("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

inline int parse_positive_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size() || v <= 0) throw parse_error("");
        return v;
    } catch (...) {
        throw parse_error(what + ": expected a positive integer, got '" + s + "'");
    }
}

inline int parse_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw parse_error("");
        return v;
    } catch (...) {
        throw parse_error(what + ": expected an integer, got '" + s + "'");
    }
}

/// Split "product(a,b)" bodies at the top-level comma.
inline std::pair<std::string, std::string> split_product_args(const std::string& body,
                                                              const std::string& what) {
    int depth = 0;
    for (size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '(') ++depth;
        else if (body[i] == ')') --depth;
        else if (body[i] == ',' && depth == 0)
            return {body.substr(0, i), body.substr(i + 1)};
    }
    throw parse_error(what + ": product(...) needs two comma-separated arguments");
}

} // namespace detail

/// Group table file: {"order": n, "mul": [row-major entries], "label": optional}.
inline FiniteGroup group_from_table_json(const json& j) {
    if (!j.contains("order") || !j.contains("mul"))
        throw parse_error("group table JSON: need 'order' and 'mul'");
    int n = j.at("order").get<int>();
    std::vector<int32_t> table;
    for (const auto& v : j.at("mul")) table.push_back(v.get<int32_t>());
    if ((long long)table.size() != (long long)n * n)
        throw parse_error("group table JSON: 'mul' must have order^2 entries");
    std::string label = j.value("label", std::string("table"));
    return FiniteGroup::from_table(std::move(table), std::move(label));
}

/// Grammar: trivial | cyclic:<n> | symmetric:<n> | dihedral:<n>
///        | product(<spec>,<spec>) | table:<path>
inline FiniteGroup parse_group_spec(const std::string& spec) {
    if (spec == "trivial") return trivial_group();
    if (spec.rfind("cyclic:", 0) == 0)
        return cyclic_group(detail::parse_positive_int(spec.substr(7), "cyclic"));
    if (spec.rfind("symmetric:", 0) == 0)
        return symmetric_group(detail::parse_positive_int(spec.substr(10), "symmetric"));
    if (spec.rfind("dihedral:", 0) == 0)
        return dihedral_group(detail::parse_positive_int(spec.substr(9), "dihedral"));
    if (spec.rfind("product(", 0) == 0 && spec.back() == ')') {
        auto [l, r] = detail::split_product_args(spec.substr(8, spec.size() - 9), "group spec");
        return direct_product(parse_group_spec(l), parse_group_spec(r));
    }
    if (spec.rfind("table:", 0) == 0)
        return group_from_table_json(detail::load_json_file(spec.substr(6)));
    throw parse_error("unrecognized group spec '" + spec + "'");
}

/// Presentation file: {"generators": count, "relators": [[signed 1-based indices]...]}.
inline FgPresentation presentation_from_json(const json& j, const std::string& label) {
    if (!j.contains("generators") || !j.contains("relators"))
        throw parse_error("presentation JSON: need 'generators' and 'relators'");
    int gens = j.at("generators").get<int>();
    std::vector<std::vector<int>> relators;
    for (const auto& w : j.at("relators")) relators.push_back(w.get<std::vector<int>>());
    return FgPresentation::from_relators(gens, std::move(relators), label);
}

/// Grammar: free-abelian:<k> | cyclic:<m> | product(<spec>,<spec>) | file:<path>
inline FgPresentation parse_presentation_spec(const std::string& spec) {
    if (spec.rfind("free-abelian:", 0) == 0) {
        int rank = detail::parse_int(spec.substr(13), "free-abelian");
        if (rank < 0) throw parse_error("free-abelian: rank must be non-negative");
        return FgPresentation::free_abelian(rank);
    }
    if (spec.rfind("cyclic:", 0) == 0)
        return FgPresentation::cyclic(detail::parse_positive_int(spec.substr(7), "cyclic"));
    if (spec.rfind("product(", 0) == 0 && spec.back() == ')') {
        auto [l, r] =
            detail::split_product_args(spec.substr(8, spec.size() - 9), "presentation spec");
        return FgPresentation::product(parse_presentation_spec(l), parse_presentation_spec(r));
    }
    if (spec.rfind("file:", 0) == 0)
        return presentation_from_json(detail::load_json_file(spec.substr(5)), spec);
    throw parse_error("unrecognized presentation spec '" + spec + "'");
}

/// Space JSON: {"group": <group-spec>, "cells": [{"dim", "stabilizer": [...], "mult"}]}.
inline VirtualGSpace space_from_json(const json& j) {
    if (!j.contains("group") || !j.contains("cells"))
        throw parse_error("space JSON: need 'group' and 'cells'");
    FiniteGroup g = parse_group_spec(j.at("group").get<std::string>());
    VirtualGSpace x(g);
    for (const auto& c : j.at("cells")) {
        Cell cell{c.value("dim", 0), Subgroup(g, c.at("stabilizer").get<std::vector<int>>()),
                  c.value("mult", (long long)1)};
        x.add_cell(std::move(cell));
    }
    return x;
}

/// G-set JSON: {"group": <group-spec>, "size": m, "action": [row-major |G| x m]}.
inline FiniteGSet gset_from_json(const json& j) {
    if (!j.contains("group") || !j.contains("size") || !j.contains("action"))
        throw parse_error("G-set JSON: need 'group', 'size' and 'action'");
    FiniteGroup g = parse_group_spec(j.at("group").get<std::string>());
    int size = j.at("size").get<int>();
    std::vector<int> action = j.at("action").get<std::vector<int>>();
    return FiniteGSet(std::move(g), size, std::move(action), /*validate=*/true);
}

/// A space plus, when it is an honest G-set, the G-set model the direct
/// engine needs.
struct SpaceInput {
    VirtualGSpace space;
    std::optional<FiniteGSet> gset;
};

/// Grammar: pt | free | coset:<i,j,...> (G/<elements>) | virtual:<chi>
///        | file:<path> (space JSON with 'cells', or G-set JSON with 'action')
inline SpaceInput parse_space_spec(const std::string& spec,
                                   const std::optional<FiniteGroup>& group) {
    auto need_group = [&]() -> const FiniteGroup& {
        if (!group) throw parse_error("space '" + spec + "' needs a --group");
        return *group;
    };
    if (spec == "pt") {
        const FiniteGroup& g = need_group();
        return {point_space(g), point_gset(g)};
    }
    if (spec == "free") {
        const FiniteGroup& g = need_group();
        return {free_orbit_space(g), regular_gset(g)};
    }
    if (spec.rfind("coset:", 0) == 0) {
        const FiniteGroup& g = need_group();
        std::vector<int> gens;
        std::string body = spec.substr(6);
        size_t pos = 0;
        while (pos <= body.size()) {
            size_t c = body.find(',', pos);
            if (c == std::string::npos) c = body.size();
            if (c > pos)
                gens.push_back(detail::parse_int(body.substr(pos, c - pos), "coset element"));
            pos = c + 1;
        }
        Subgroup k = Subgroup::generated(g, gens);
        return {coset_space(g, k), coset_gset(g, k)};
    }
    if (spec.rfind("virtual:", 0) == 0) {
        int chi = detail::parse_int(spec.substr(8), "virtual");
        if (group && group->order() != 1)
            throw parse_error("virtual spaces live over the trivial group");
        return {virtual_space(trivial_group(), chi), std::nullopt};
    }
    if (spec.rfind("file:", 0) == 0) {
        json j = detail::load_json_file(spec.substr(5));
        if (j.contains("cells")) return {space_from_json(j), std::nullopt};
        FiniteGSet s = gset_from_json(j);
        return {s.to_virtual(), s};
    }
    throw parse_error("unrecognized space spec '" + spec + "'");
}

// ---------------------------------------------------------------------------
// JSON output.
// ---------------------------------------------------------------------------

inline json series_to_json(const RationalSeries& s) {
    json coeffs = json::array();
    for (int i = 0; i <= s.order(); ++i) coeffs.push_back(s.at(i).str());
    return json{{"N", s.order()}, {"coefficients", coeffs}};
}

inline json report_to_json(const VerificationReport& r) {
    json instances = json::array();
    for (const auto& inst : r.instances) {
        json j{{"desc", inst.description}, {"status", inst.pass ? "pass" : "fail"}};
        if (!inst.detail.empty()) j["detail"] = inst.detail;
        instances.push_back(std::move(j));
    }
    return json{{"identity", r.identity},
                {"instances", instances},
                {"overall", r.overall() ? "pass" : "fail"}};
}

inline json wreath_type_to_json(const WreathType& t) {
    json out = json::array();
    for (const auto& [key, m] : t.counts)
        out.push_back(json{{"r", key.first}, {"class_representative", key.second}, {"m", m}});
    return out;
}

inline json group_summary_json(const FiniteGroup& g) {
    json j{{"label", g.label()}, {"order", g.order()}, {"identity", g.identity()}};
    if (g.order() <= 5000) {
        auto classes = conjugacy_classes(g);
        json sizes = json::array();
        for (const auto& c : classes) sizes.push_back(c.members.size());
        j["num_classes"] = classes.size();
        j["class_sizes"] = sizes;
    }
    return j;
}

} // namespace orbichi
