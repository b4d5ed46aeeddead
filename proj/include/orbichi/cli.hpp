#pragma once

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbichi/io.hpp"

namespace orbichi {

/// Exit codes: 0 success / verification pass, 1 verification failure,
/// 2 usage or parse error, 3 budget exceeded.
enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

namespace cli_detail {

inline void emit(std::ostream& out, const json& j, bool pretty) {
    out << (pretty ? j.dump(2) : j.dump()) << "\n";
}

struct VerifyArgs {
    std::string identity;
    std::string group = "trivial";
    std::string sub, sup;
    std::string space = "pt";
    std::string a, a1, a2;
    std::string subgroup; // comma-separated element list
    int element_a = -1;
    int k = 1;
    int order = -1;
    int n = 2;
    int chi = 0;
    bool chi_set = false;
    long long budget = 100'000'000;
};

inline std::vector<int> parse_element_list(const std::string& s) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= s.size() && !s.empty()) {
        size_t c = s.find(',', pos);
        if (c == std::string::npos) c = s.size();
        if (c > pos) out.push_back(detail::parse_int(s.substr(pos, c - pos), "element list"));
        pos = c + 1;
    }
    return out;
}

inline VerificationReport dispatch_verify(const VerifyArgs& v) {
    EnumerationBudget budget{v.budget};
    if (v.identity == "macdonald") {
        int order = v.order < 0 ? 8 : v.order;
        if (v.chi_set) return verify_macdonald(virtual_space(trivial_group(), v.chi), order);
        return verify_macdonald_sweep(-3, 3, order);
    }
    if (v.identity == "induction") {
        if (v.sub.empty() || v.sup.empty() || v.a.empty())
            throw parse_error("verify induction needs --sub, --sup and --A");
        FiniteGroup g = parse_group_spec(v.sub);
        FiniteGroup h = parse_group_spec(v.sup);
        SpaceInput z = parse_space_spec(v.space, g);
        return verify_induction(z.space, h, find_embedding(g, h),
                                parse_presentation_spec(v.a), budget);
    }
    if (v.identity == "tamanoi") {
        int order = v.order < 0 ? 4 : v.order;
        return verify_tamanoi(parse_group_spec(v.group), v.k, order);
    }
    if (v.identity == "bryan-fulman") {
        if (v.a.empty()) throw parse_error("verify bryan-fulman needs --A");
        int order = v.order < 0 ? 3 : v.order;
        return verify_bryan_fulman(v.chi, parse_presentation_spec(v.a), order, budget);
    }
    if (v.identity == "prop-product") {
        if (v.a1.empty() || v.a2.empty())
            throw parse_error("verify prop-product needs --A1 and --A2");
        FiniteGroup g = parse_group_spec(v.group);
        SpaceInput x = parse_space_spec(v.space, g);
        return verify_prop_product(x.space, parse_presentation_spec(v.a1),
                                   parse_presentation_spec(v.a2), budget);
    }
    if (v.identity == "lemma3") {
        if (v.subgroup.empty() || v.element_a < 0) {
            // catalog pair: Z2 in Z4, and Z2 in Z2 x Z2
            VerificationReport all{"lemma3", {}};
            auto add = [&all](const VerificationReport& r, const std::string& tag) {
                for (auto inst : r.instances) {
                    inst.description = tag + ": " + inst.description;
                    all.instances.push_back(std::move(inst));
                }
            };
            add(verify_lemma3(cyclic_group(4), {0, 2}, 1, v.k), "Z2 in Z4");
            add(verify_lemma3(direct_product(cyclic_group(2), cyclic_group(2)), {0, 2}, 1, v.k),
                "Z2 in Z2xZ2");
            return all;
        }
        return verify_lemma3(parse_group_spec(v.group), parse_element_list(v.subgroup),
                             v.element_a, v.k, budget);
    }
    if (v.identity == "counterexamples") {
        int order = v.order < 0 ? 2 : v.order;
        return verify_counterexamples(order, budget);
    }
    if (v.identity == "conjugacy-types") {
        if (v.group == "trivial" && v.n == 2) {
            VerificationReport all{"conjugacy-types", {}};
            const std::pair<std::string, int> sweep[] = {
                {"cyclic:2", 2}, {"cyclic:2", 3}, {"cyclic:3", 2}, {"symmetric:3", 2}};
            for (const auto& [spec, n] : sweep) {
                auto r = verify_conjugacy_types(parse_group_spec(spec), n);
                all.instances.insert(all.instances.end(), r.instances.begin(),
                                     r.instances.end());
            }
            return all;
        }
        return verify_conjugacy_types(parse_group_spec(v.group), v.n);
    }
    throw parse_error("unknown identity '" + v.identity +
                      "' (expected one of: macdonald, induction, tamanoi, bryan-fulman, "
                      "prop-product, lemma3, counterexamples, conjugacy-types)");
}

} // namespace cli_detail

/// Run the command line; all output goes to `out` / `err`.
inline int run_cli(std::vector<std::string> args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    CLI::App app{"exact orbifold Euler characteristics and wreath-product zeta series"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indented JSON output (default is compact --json)");
    bool json_flag = true;
    app.add_flag("--json", json_flag, "compact JSON output (default)");

    // group
    auto* cmd_group = app.add_subcommand("group", "build a group and print a summary");
    std::string group_spec;
    cmd_group->add_option("--spec", group_spec, "group spec")->required();

    // chi
    auto* cmd_chi = app.add_subcommand("chi", "compute chi^(A)(X, G)");
    std::string chi_group, chi_space = "pt", chi_pres;
    long long chi_budget = 100'000'000;
    cmd_chi->add_option("--group", chi_group, "group spec")->required();
    cmd_chi->add_option("--space", chi_space, "space spec (default pt)");
    cmd_chi->add_option("--A", chi_pres, "presentation spec")->required();
    cmd_chi->add_option("--budget", chi_budget, "enumeration budget");

    // zeta
    auto* cmd_zeta = app.add_subcommand("zeta", "compute the series zeta^(A)_(X,G)");
    std::string zeta_group, zeta_space = "pt", zeta_pres, zeta_engine = "cellwise";
    int zeta_order = 2;
    long long zeta_budget = 100'000'000;
    cmd_zeta->add_option("--group", zeta_group, "group spec")->required();
    cmd_zeta->add_option("--space", zeta_space, "space spec (default pt)");
    cmd_zeta->add_option("--A", zeta_pres, "presentation spec")->required();
    cmd_zeta->add_option("--N", zeta_order, "truncation order")->required();
    cmd_zeta->add_option("--engine", zeta_engine, "direct | cellwise | both");
    cmd_zeta->add_option("--budget", zeta_budget, "enumeration budget");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "check one of the identities");
    cli_detail::VerifyArgs v;
    cmd_verify->add_option("identity", v.identity, "identity name")->required();
    cmd_verify->add_option("--group", v.group, "group spec");
    cmd_verify->add_option("--sub", v.sub, "subgroup-side group spec (induction)");
    cmd_verify->add_option("--sup", v.sup, "supergroup spec (induction)");
    cmd_verify->add_option("--space", v.space, "space spec");
    cmd_verify->add_option("--A", v.a, "presentation spec");
    cmd_verify->add_option("--A1", v.a1, "first factor presentation (prop-product)");
    cmd_verify->add_option("--A2", v.a2, "second factor presentation (prop-product)");
    cmd_verify->add_option("--subgroup", v.subgroup, "subgroup elements, e.g. 0,2 (lemma3)");
    cmd_verify->add_option("--a", v.element_a, "extending element index (lemma3)");
    cmd_verify->add_option("--k", v.k, "order of the Euler characteristic");
    cmd_verify->add_option("--N", v.order, "truncation order");
    cmd_verify->add_option("--n", v.n, "wreath power (conjugacy-types)");
    auto* chi_opt = cmd_verify->add_option("--chi", v.chi, "Euler characteristic of the virtual space");
    cmd_verify->add_option("--budget", v.budget, "enumeration budget");

    // counterexample
    auto* cmd_cx = app.add_subcommand("counterexample", "reproduce the closing counterexamples");
    int cx_order = 2;
    cmd_cx->add_option("--N", cx_order, "truncation order");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }
    v.chi_set = chi_opt->count() > 0;

    try {
        if (*cmd_group) {
            cli_detail::emit(out, group_summary_json(parse_group_spec(group_spec)), pretty);
            return kOk;
        }
        if (*cmd_chi) {
            FiniteGroup g = parse_group_spec(chi_group);
            SpaceInput x = parse_space_spec(chi_space, g);
            EnumerationBudget budget{chi_budget};
            Rational value = chi_A(x.space, parse_presentation_spec(chi_pres), budget);
            cli_detail::emit(out, json{{"value", value.str()}, {"engine", "hom-sum"}}, pretty);
            return kOk;
        }
        if (*cmd_zeta) {
            FiniteGroup g = parse_group_spec(zeta_group);
            SpaceInput x = parse_space_spec(zeta_space, g);
            FgPresentation a = parse_presentation_spec(zeta_pres);
            EnumerationBudget budget{zeta_budget};
            if (zeta_engine != "direct" && zeta_engine != "cellwise" && zeta_engine != "both")
                throw parse_error("--engine must be direct, cellwise or both");
            if (zeta_engine != "cellwise" && !x.gset)
                throw parse_error("the direct engine needs an honest G-set space");
            json j;
            if (zeta_engine == "cellwise") {
                j = series_to_json(zeta_cellwise(x.space, a, zeta_order, budget));
                j["engine"] = "cellwise";
            } else if (zeta_engine == "direct") {
                j = series_to_json(zeta_direct(*x.gset, a, zeta_order, budget));
                j["engine"] = "direct";
            } else {
                RationalSeries direct = zeta_direct(*x.gset, a, zeta_order, budget);
                RationalSeries cellwise = zeta_cellwise(x.space, a, zeta_order, budget);
                j = series_to_json(direct);
                j["engine"] = "both";
                bool agree = direct == cellwise;
                j["engines_agree"] = agree;
                if (!agree) {
                    cli_detail::emit(out, j, pretty);
                    return kVerifyFailed;
                }
            }
            cli_detail::emit(out, j, pretty);
            return kOk;
        }
        if (*cmd_verify) {
            VerificationReport report = cli_detail::dispatch_verify(v);
            cli_detail::emit(out, report_to_json(report), pretty);
            return report.overall() ? kOk : kVerifyFailed;
        }
        if (*cmd_cx) {
            VerificationReport report = verify_counterexamples(cx_order);
            cli_detail::emit(out, report_to_json(report), pretty);
            return report.overall() ? kOk : kVerifyFailed;
        }
    } catch (const budget_error& e) {
        err << "budget error: " << e.what() << "\n";
        return kBudget;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace orbichi
