#pragma once

// Command-line front end. Subcommands: multipole, reduce, verify,
// metric-table, dims, solve-f, mon. Results go to stdout, diagnostics to
// stderr; exit codes: 0 success, 1 check failure, 2 usage/parse error.
// Defaults may come from a key=value config file named by $SPINCLIF_CONFIG.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinclif/checks.hpp"
#include "spinclif/parser.hpp"

namespace spinclif::cli {

using nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

struct RunConfig {
    int dim = 3;
    std::string signature;           // "p,q"; empty means euclidean
    std::string algebra = "free";    // free | clifford | weak | spin:<s> | sym
    std::string spin;                // used when algebra == "spin"
    int degree = 6;
    int headroom = 2;
    std::string format = "text";     // text | json
    uint64_t seed = 2024;
    std::string suite = "all";
    int kmax = 4;
};

inline std::map<std::string, std::string> read_config_file(const std::string& path,
                                                           std::ostream& err) {
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    if (!in) {
        err << "warning: cannot read config file " << path << "\n";
        return kv;
    }
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = value;
    }
    return kv;
}

inline void apply_config_defaults(RunConfig& cfg, const std::map<std::string, std::string>& kv) {
    auto get = [&](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        return it->second;
    };
    if (auto v = get("dim")) cfg.dim = std::stoi(*v);
    if (auto v = get("signature")) cfg.signature = *v;
    if (auto v = get("algebra")) cfg.algebra = *v;
    if (auto v = get("spin")) cfg.spin = *v;
    if (auto v = get("degree")) cfg.degree = std::stoi(*v);
    if (auto v = get("headroom")) cfg.headroom = std::stoi(*v);
    if (auto v = get("format")) cfg.format = *v;
    if (auto v = get("seed")) cfg.seed = std::stoull(*v);
    if (auto v = get("suite")) cfg.suite = *v;
}

struct AlgebraSelection {
    std::string canonical;  // resolved name, e.g. "spin:1/2" or "sym"
    MetricSpace space;
    RelationFamily family;
};

inline MetricSpace space_from_config(const RunConfig& cfg) {
    if (cfg.signature.empty()) return MetricSpace::euclidean(cfg.dim);
    auto comma = cfg.signature.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--signature", "expected the form p,q");
    int p = std::stoi(cfg.signature.substr(0, comma));
    int q = std::stoi(cfg.signature.substr(comma + 1));
    return MetricSpace::signature(p, q);
}

inline AlgebraSelection select_algebra(const RunConfig& cfg, std::ostream& err) {
    std::string name = cfg.algebra;
    std::string spin = cfg.spin;
    if (name.rfind("spin:", 0) == 0) {
        spin = name.substr(5);
        name = "spin";
    }
    if (name == "free") {
        MetricSpace space = space_from_config(cfg);
        return {"free", space, relations::free_algebra()};
    }
    if (name == "clifford") {
        MetricSpace space = space_from_config(cfg);
        return {"clifford", space, relations::clifford(space)};
    }
    if (name == "weak") {
        MetricSpace space = space_from_config(cfg);
        return {"weak", space, relations::weak_clifford(space)};
    }
    if (name == "sym") {
        MetricSpace space = space_from_config(cfg);
        return {"sym", space, relations::symmetric(space)};
    }
    if (name == "spin") {
        if (spin.empty())
            throw CLI::ValidationError("--algebra", "spin algebra needs a spin, e.g. spin:1/2");
        HalfInt s = HalfInt::parse(spin);
        if (s.is_zero()) {
            err << "note: spin 0 has no bivector presentation; using the symmetric relations\n";
            return {"sym", MetricSpace::euclidean(3), relations::symmetric(MetricSpace::euclidean(3))};
        }
        return {"spin:" + s.str(), MetricSpace::euclidean(3), relations::spin_weak(s)};
    }
    if (name == "spin-uea") {
        if (spin.empty())
            throw CLI::ValidationError("--algebra", "spin-uea needs a spin, e.g. --spin 1");
        HalfInt s = HalfInt::parse(spin);
        return {"spin-uea:" + s.str(), MetricSpace::euclidean(3), relations::spin_enveloping(s)};
    }
    throw CLI::ValidationError("--algebra", "unknown algebra " + name);
}

inline json config_json(const RunConfig& cfg) {
    return json{{"dim", cfg.dim},         {"signature", cfg.signature},
                {"algebra", cfg.algebra}, {"spin", cfg.spin},
                {"degree", cfg.degree},   {"headroom", cfg.headroom},
                {"format", cfg.format},   {"seed", cfg.seed},
                {"suite", cfg.suite}};
}

inline json report_json(const std::string& command, const RunConfig& cfg, json results) {
    return json{{"command", command},
                {"config", config_json(cfg)},
                {"results", std::move(results)},
                {"version", kVersion}};
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    if (const char* env = std::getenv("SPINCLIF_CONFIG"))
        apply_config_defaults(cfg, read_config_file(env, err));

    CLI::App app{"exact Clifford-like quotient algebras and spin multipole tensors"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    // shared options registered per subcommand that uses them
    auto add_space_opts = [&](CLI::App* sub) {
        sub->add_option("--dim", cfg.dim, "space dimension (default 3)");
        sub->add_option("--signature", cfg.signature, "metric signature p,q (default euclidean)");
    };
    auto add_algebra_opts = [&](CLI::App* sub) {
        sub->add_option("--algebra", cfg.algebra,
                        "algebra: free | clifford | weak | spin:<s> | sym | spin-uea");
        sub->add_option("--spin", cfg.spin, "spin for the spin algebras, e.g. 1/2");
        sub->add_option("-D,--degree", cfg.degree, "truncation degree");
        sub->add_option("-H,--headroom", cfg.headroom, "ideal-closure headroom");
    };
    auto add_format_opt = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format: text | json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    // multipole k i1 i2 ...
    auto* sub_multipole = app.add_subcommand("multipole", "print a multipole tensor in PBW form");
    std::vector<int> multipole_args;
    sub_multipole->add_option("indices", multipole_args,
                              "order k followed by k indices from 1..3");
    add_format_opt(sub_multipole);

    // reduce EXPR
    auto* sub_reduce = app.add_subcommand("reduce", "canonical representative in a quotient");
    std::string reduce_expr;
    sub_reduce->add_option("expression", reduce_expr, "tensor expression")->required();
    add_space_opts(sub_reduce);
    add_algebra_opts(sub_reduce);
    add_format_opt(sub_reduce);

    // verify
    auto* sub_verify = app.add_subcommand("verify", "run a verification suite");
    sub_verify->add_option("--suite", cfg.suite, "suite name or 'all'");
    sub_verify->add_option("--seed", cfg.seed, "seed for randomized batches");
    sub_verify->add_option("--kmax", cfg.kmax, "maximum multipole order for the multipole suite");
    add_format_opt(sub_verify);

    // metric-table
    auto* sub_metric = app.add_subcommand("metric-table", "extended metric on basis blades");
    std::vector<std::string> spin_list;
    sub_metric->add_option("spins", spin_list, "spins to substitute, e.g. 0 1/2 1");
    add_format_opt(sub_metric);

    // dims
    auto* sub_dims = app.add_subcommand("dims", "dimension sequence of a truncated quotient");
    add_space_opts(sub_dims);
    add_algebra_opts(sub_dims);
    add_format_opt(sub_dims);

    // solve-f
    auto* sub_solvef = app.add_subcommand("solve-f", "solve the third-order closure constraint");
    add_space_opts(sub_solvef);
    add_format_opt(sub_solvef);

    // mon EXPR
    auto* sub_mon = app.add_subcommand("mon", "monopole part of an enveloping-algebra element");
    std::string mon_expr;
    sub_mon->add_option("expression", mon_expr, "expression in J1..J3")->required();
    add_format_opt(sub_mon);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (sub_multipole->parsed()) {
            if (multipole_args.empty()) {
                err << "usage: multipole K [indices...]\n";
                return 2;
            }
            int k = multipole_args[0];
            std::vector<int> word(multipole_args.begin() + 1, multipole_args.end());
            if (k < 0 || static_cast<int>(word.size()) != k) {
                err << "multipole: expected " << k << " indices\n";
                return 2;
            }
            for (int i : word)
                if (i < 1 || i > 3) {
                    err << "multipole: indices must be in 1..3\n";
                    return 2;
                }
            PBWElement t = multipole(k, word);
            if (cfg.format == "json")
                out << report_json("multipole", cfg, json::array({json{{"value", t.str()}}})).dump(2)
                    << "\n";
            else
                out << t.str() << "\n";
            return 0;
        }

        if (sub_reduce->parsed()) {
            AlgebraSelection sel = select_algebra(cfg, err);
            QuotientContext ctx(sel.space, sel.family, cfg.degree, cfg.headroom);
            ElementC x = parse_expression(reduce_expr, sel.space.dim(),
                                          sel.canonical.rfind("spin-uea", 0) == 0
                                              ? ParseMode::generators
                                              : ParseMode::vectors);
            ElementC r = ctx.reduce(x);
            if (cfg.format == "json")
                out << report_json("reduce", cfg,
                                   json::array({json{{"input", reduce_expr}, {"value", r.str()}}}))
                           .dump(2)
                    << "\n";
            else
                out << r.str() << "\n";
            return 0;
        }

        if (sub_verify->parsed()) {
            ContextCache cache;
            SuiteOptions opt;
            opt.seed = cfg.seed;
            opt.kmax = cfg.kmax;
            std::vector<std::string> selected;
            if (cfg.suite == "all") selected = suite_names();
            else selected.push_back(cfg.suite);
            json results = json::array();
            bool all_pass = true;
            for (const auto& name : selected) {
                for (const CheckResult& c : run_suite(name, cache, opt)) {
                    all_pass = all_pass && c.pass;
                    if (cfg.format == "json") {
                        results.push_back(json{{"suite", name},
                                               {"name", c.name},
                                               {"statement", c.statement},
                                               {"value", c.value},
                                               {"pass", c.pass}});
                    } else {
                        out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  -- "
                            << c.statement;
                        if (!c.value.empty()) out << "  [" << c.value << "]";
                        out << "\n";
                    }
                }
            }
            if (cfg.format == "json") out << report_json("verify", cfg, results).dump(2) << "\n";
            return all_pass ? 0 : 1;
        }

        if (sub_metric->parsed()) {
            if (spin_list.empty()) spin_list = {"0", "1/2", "1"};
            auto space = MetricSpace::euclidean(3);
            std::vector<ElementQ> blades;
            std::vector<std::string> labels;
            blades.push_back(ElementQ::unit(3));
            labels.push_back("1");
            for (int a = 1; a <= 3; ++a) {
                blades.push_back(ElementQ::basis_vector(a, 3));
                labels.push_back("e" + std::to_string(a));
            }
            for (int a = 1; a <= 3; ++a)
                for (int b = a + 1; b <= 3; ++b) {
                    blades.push_back(wedge(ElementQ::basis_vector(a, 3), ElementQ::basis_vector(b, 3)));
                    labels.push_back("e" + std::to_string(a) + "^e" + std::to_string(b));
                }
            blades.push_back(wedge(ElementQ::basis_vector(1, 3), ElementQ::basis_vector(2, 3),
                                   ElementQ::basis_vector(3, 3)));
            labels.push_back("e1^e2^e3");

            json results = json::array();
            for (size_t i = 0; i < blades.size(); ++i)
                for (size_t j = i; j < blades.size(); ++j) {
                    if (blades[i].degree() != blades[j].degree()) continue;
                    CasimirPoly value = lambda_metric(blades[i], blades[j], space);
                    json row{{"lhs", labels[i]}, {"rhs", labels[j]}, {"casimir", value.str()}};
                    json per_spin = json::object();
                    for (const auto& ss : spin_list)
                        per_spin[ss] = substitute_casimir(value, HalfInt::parse(ss)).str();
                    row["spins"] = per_spin;
                    results.push_back(row);
                    if (cfg.format != "json") {
                        out << labels[i] << " | " << labels[j] << " : " << value.str();
                        for (const auto& ss : spin_list)
                            out << "   s=" << ss << ": "
                                << substitute_casimir(value, HalfInt::parse(ss)).str();
                        out << "\n";
                    }
                }
            if (cfg.format == "json")
                out << report_json("metric-table", cfg, results).dump(2) << "\n";
            return 0;
        }

        if (sub_dims->parsed()) {
            AlgebraSelection sel = select_algebra(cfg, err);
            QuotientContext ctx(sel.space, sel.family, cfg.degree, cfg.headroom);
            StabilizationAudit audit =
                audit_stabilization(sel.space, sel.family, cfg.degree, cfg.headroom);
            std::string dims_text = checks_detail::dims_str(ctx.dims());
            if (cfg.format == "json") {
                json basis = json::array();
                for (const Word& w : ctx.quotient_basis()) basis.push_back(w.str());
                json results = json::array({json{{"dims", ctx.dims()},
                                                 {"stabilized", audit.stabilized},
                                                 {"basis", std::move(basis)}}});
                out << report_json("dims", cfg, results).dump(2) << "\n";
            } else {
                out << dims_text << "\n";
            }
            if (!audit.stabilized) {
                err << "dimension sequence not stabilized; increase headroom (-H "
                    << cfg.headroom + 2 << " differs)\n";
                return 1;
            }
            return 0;
        }

        if (sub_solvef->parsed()) {
            MetricSpace space = space_from_config(cfg);
            FConstraintSolution sol = solve_f_constraint(space);
            bool ok = sol.family_confirmed && sol.variety_pinned && sol.cyclic_excludes_other;
            if (cfg.format == "json") {
                json results = json::array({json{{"family", "k * (1, -1, 0)"},
                                                 {"family_confirmed", sol.family_confirmed},
                                                 {"variety_pinned", sol.variety_pinned},
                                                 {"cyclic_excludes_other", sol.cyclic_excludes_other},
                                                 {"quadratic_rank", sol.quadratic_rank},
                                                 {"description", sol.description}}});
                out << report_json("solve-f", cfg, results).dump(2) << "\n";
            } else {
                out << sol.description << "\n";
            }
            return ok ? 0 : 1;
        }

        if (sub_mon->parsed()) {
            ElementC x = parse_expression(mon_expr, 3, ParseMode::generators);
            PBWElement pbw = pbw_normal_form(to_rational_element(x));
            CasimirPoly mon = monopole_part(pbw);
            if (cfg.format == "json")
                out << report_json("mon", cfg,
                                   json::array({json{{"input", mon_expr}, {"value", mon.str()}}}))
                           .dump(2)
                    << "\n";
            else
                out << mon.str() << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand given\n";
    return 2;
}

}  // namespace spinclif::cli
