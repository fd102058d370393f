#include "hz/cli.hpp"

#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hz/errors.hpp"
#include "hz/fock.hpp"
#include "hz/limits.hpp"
#include "hz/pipeline.hpp"
#include "hz/symgroup.hpp"

namespace hz::cli {

namespace {

using json = nlohmann::ordered_json;

struct Common {
    std::string format = "plain";
    int force_n = 0;
};

Format format_of(const std::string &s) {
    if (s == "csv") {
        return Format::csv;
    }
    if (s == "json") {
        return Format::json;
    }
    return Format::plain;
}

Limits limits_for(const Common &common, std::ostringstream &err) {
    int n = common.force_n;
    if (n == 0) {
        if (const char *env = std::getenv("HZ_FORCE_N")) {
            n = std::atoi(env);
        }
    }
    if (n <= 0) {
        return Limits{};
    }
    err << "warning: guardrails raised to n = " << n << "; large values may take hours and gigabytes\n";
    return Limits::forced(n);
}

void add_common(CLI::App *cmd, Common &common) {
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--force-n", common.force_n, "Raise size guardrails to S_n (also HZ_FORCE_N)");
}

std::vector<Method> methods_from(const std::string &name) {
    if (name == "all") {
        return {std::begin(kAllMethods), std::end(kAllMethods)};
    }
    return {*parse_method(name)};
}

// ---- epsilon / table -------------------------------------------------------

// Genus-g gluings of a 2d'-gon need 2g <= d'. The table still computes the
// cells at 2g = d' + 1 (they take part in the verdict) but does not list them.
bool listed(const ReportCell &c, int only_genus) {
    if (!c.value) {
        return false;
    }
    return only_genus >= 0 ? c.genus == only_genus : 2 * c.genus <= c.dprime;
}

json results_json(const CrossValidationReport &r, int only_genus) {
    json results = json::array();
    for (const auto &c : r.cells) {
        if (!listed(c, only_genus)) {
            continue;
        }
        results.push_back({{"method", std::string(method_name(c.method))},
                           {"g", c.genus},
                           {"dprime", c.dprime},
                           {"value", c.value->get_str()}});
    }
    return results;
}

std::string results_csv(const CrossValidationReport &r, int only_genus) {
    std::string out = "method,g,dprime,value\n";
    for (const auto &c : r.cells) {
        if (!listed(c, only_genus)) {
            continue;
        }
        out += std::string(method_name(c.method)) + "," + std::to_string(c.genus) + "," +
               std::to_string(c.dprime) + "," + c.value->get_str() + "\n";
    }
    return out;
}

Output cmd_epsilon(int genus, int dprime, const std::string &method, const Common &common) {
    Output o;
    std::ostringstream out, err;
    const Limits limits = limits_for(common, err);
    check_epsilon_domain(genus, dprime);
    const auto methods = methods_from(method);

    // A single cell of the cross-validation grid, so vanishing genera are allowed too.
    CrossValidationReport r;
    r.methods = methods;
    std::optional<Integer> agreed;
    bool agree = true;
    for (const Method m : methods) {
        ReportCell cell{dprime, genus, m, std::nullopt, ""};
        if (!method_available(m, dprime, limits)) {
            cell.note = "skipped: guardrail";
            if (methods.size() == 1) {
                throw GuardrailError(std::string(method_name(m)) + " is beyond its guardrail at d' = " +
                                     std::to_string(dprime) + " (use --force-n)");
            }
        } else {
            cell.value = epsilon_by(m, genus, dprime, limits).value;
            if (agreed && *agreed != *cell.value) {
                agree = false;
            }
            if (!agreed) {
                agreed = cell.value;
            }
        }
        r.cells.push_back(cell);
    }

    switch (format_of(common.format)) {
    case Format::json: {
        json doc;
        doc["query"] = {{"command", "epsilon"}, {"g", genus}, {"dprime", dprime}, {"method", method}};
        doc["results"] = results_json(r, genus);
        doc["verdict"] = agree ? "pass" : "disagree";
        out << doc.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << results_csv(r, genus);
        break;
    case Format::plain:
        if (methods.size() == 1) {
            out << r.cells.front().value->get_str() << "\n";
        } else {
            for (const auto &c : r.cells) {
                out << std::string(method_name(c.method)) << "\t" << (c.value ? c.value->get_str() : c.note) << "\n";
            }
            out << "verdict\t" << (agree ? "pass" : "disagree") << "\n";
        }
        break;
    }
    o.exit_code = agree ? kExitOk : kExitDisagree;
    o.out = out.str();
    o.err = err.str();
    return o;
}

Output cmd_table(int dprime_max, const std::string &method, const Common &common) {
    Output o;
    std::ostringstream out, err;
    const Limits limits = limits_for(common, err);
    if (dprime_max < 1) {
        throw DomainError("--max must be at least 1");
    }
    const CrossValidationReport r = cross_validate(dprime_max, methods_from(method), limits);

    switch (format_of(common.format)) {
    case Format::json: {
        json doc;
        doc["query"] = {{"command", "table"}, {"max", dprime_max}, {"method", method}};
        doc["results"] = results_json(r, -1);
        json sums = json::object();
        for (const auto &[d, s] : r.row_sums) {
            sums[std::to_string(d)] = s.get_str();
        }
        doc["row_sums"] = sums;
        json skipped = json::array();
        for (const auto &c : r.cells) {
            if (!c.value && 2 * c.genus <= c.dprime) {
                skipped.push_back({{"method", std::string(method_name(c.method))},
                                   {"g", c.genus},
                                   {"dprime", c.dprime},
                                   {"note", c.note}});
            }
        }
        doc["skipped"] = skipped;
        doc["verdict"] = r.pass ? "pass" : "disagree";
        out << doc.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << results_csv(r, -1);
        break;
    case Format::plain: {
        const int gmax = dprime_max / 2;
        out << "d'";
        for (int g = 0; g <= gmax; ++g) {
            out << "\tg=" << g;
        }
        out << "\tsum\n";
        for (int d = 1; d <= dprime_max; ++d) {
            out << d;
            for (int g = 0; g <= gmax; ++g) {
                out << "\t";
                if (2 * g > d) {
                    continue;
                }
                std::optional<Integer> shown;
                bool skipped_all = true;
                bool conflict = false;
                for (const Method m : r.methods) {
                    const auto v = r.value(d, g, m);
                    if (v) {
                        skipped_all = false;
                        if (shown && *shown != *v) {
                            conflict = true;
                        }
                        if (!shown) {
                            shown = v;
                        }
                    }
                }
                out << (conflict ? "!" : (skipped_all ? "-" : shown->get_str()));
            }
            out << "\t" << r.row_sums.at(d).get_str() << "\n";
        }
        for (const auto &c : r.cells) {
            if (!c.value) {
                err << "d'=" << c.dprime << " g=" << c.genus << " " << method_name(c.method) << ": " << c.note
                    << "\n";
            }
        }
        out << "verdict\t" << (r.pass ? "pass" : "disagree") << "\n";
        break;
    }
    }
    for (const auto &p : r.problems) {
        err << p << "\n";
    }
    o.exit_code = r.pass ? kExitOk : kExitDisagree;
    o.out = out.str();
    o.err = err.str();
    return o;
}

// ---- jucys ---------------------------------------------------------------

Output cmd_jucys(int n, const Common &common) {
    Output o;
    std::ostringstream out, err;
    const Limits limits = limits_for(common, err);
    const auto reports = jucys_report(n, limits);
    bool all = true;
    for (const auto &r : reports) {
        all = all && r.pass;
    }
    switch (format_of(common.format)) {
    case Format::json: {
        json doc;
        doc["query"] = {{"command", "jucys"}, {"n", n}};
        json results = json::array();
        for (const auto &r : reports) {
            json classes = json::object();
            for (const auto &[mu, count] : r.class_term_counts) {
                classes[mu.to_string()] = count;
            }
            results.push_back({{"k", r.k}, {"pass", r.pass}, {"terms", r.term_count}, {"classes", classes}});
        }
        doc["results"] = results;
        doc["verdict"] = all ? "pass" : "fail";
        out << doc.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << "k,class,terms,pass\n";
        for (const auto &r : reports) {
            for (const auto &[mu, count] : r.class_term_counts) {
                out << r.k << ",\"" << mu.to_string() << "\"," << count << "," << (r.pass ? "true" : "false")
                    << "\n";
            }
        }
        break;
    case Format::plain:
        for (const auto &r : reports) {
            out << "k=" << r.k << "\t" << (r.pass ? "pass" : "FAIL") << "\t";
            bool first = true;
            // Largest parts first: (3,1) before (2,2).
            for (auto it = r.class_term_counts.rbegin(); it != r.class_term_counts.rend(); ++it) {
                out << (first ? "" : " + ") << it->first.to_string() << ":" << it->second;
                first = false;
            }
            out << "\n";
        }
        out << "verdict\t" << (all ? "pass" : "fail") << "\n";
        break;
    }
    o.exit_code = all ? kExitOk : kExitDisagree;
    o.out = out.str();
    o.err = err.str();
    return o;
}

// ---- vev -----------------------------------------------------------------

std::string monomial_of(const LaurentSeries &s, const LaurentSeries::Exponents &e) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) {
            continue;
        }
        mono += (mono.empty() ? "" : "*") + s.vars()[i].name + (e[i] == 1 ? "" : "^" + std::to_string(e[i]));
    }
    return mono.empty() ? "1" : mono;
}

Output cmd_vev(const std::string &expression, const std::vector<std::string> &order_flags, const Common &common) {
    Output o;
    std::ostringstream out, err;
    Orders orders;
    for (const auto &flag : order_flags) {
        const auto eq = flag.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw DomainError("--order expects var=N, got '" + flag + "'");
        }
        const int k = std::stoi(flag.substr(eq + 1));
        if (k < 0) {
            throw DomainError("--order must be nonnegative");
        }
        orders[Var(flag.substr(0, eq))] = k;
    }
    const EProduct product = parse_product(expression);
    int energy = 0;
    for (const auto &op : product.ops) {
        energy += op.energy;
    }
    if (energy != 0) {
        err << "note: total energy " << energy << " != 0, the expectation vanishes\n";
    }

    const VevValue symbolic = vev_symbolic(product.ops);
    if (symbolic.pole_forms().size() > 1) {
        // Not a single Laurent series; report the exact symbolic value.
        json doc;
        switch (format_of(common.format)) {
        case Format::json:
            doc["query"] = {{"command", "vev"}, {"expression", expression}};
            doc["symbolic"] = symbolic.to_string();
            out << doc.dump(2) << "\n";
            break;
        default:
            out << symbolic.to_string() << "\n";
        }
        err << "note: poles along several linear forms; printed as a sum of varsigma ratios (vs = varsigma)\n";
        o.out = out.str();
        o.err = err.str();
        return o;
    }

    const VevExpansion e = vev_expand(product, orders);
    if (e.substitution) {
        err << "note: " << e.substitution->first.name << " = " << e.substitution->second.to_string() << "\n";
    }
    const auto terms = e.series.graded_terms();
    switch (format_of(common.format)) {
    case Format::json: {
        json doc;
        json ord = json::object();
        for (const auto &[v, k] : orders) {
            ord[v.name] = k;
        }
        doc["query"] = {{"command", "vev"}, {"expression", expression}, {"orders", ord}};
        json list = json::array();
        for (const auto &[exp, c] : terms) {
            list.push_back({{"coefficient", c.to_string()}, {"monomial", monomial_of(e.series, exp)}});
        }
        doc["terms"] = list;
        doc["substitution"] = e.substitution
                                  ? json{{"var", e.substitution->first.name},
                                         {"form", e.substitution->second.to_string()}}
                                  : json(nullptr);
        out << doc.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << "coefficient,monomial\n";
        for (const auto &[exp, c] : terms) {
            out << c.to_string() << "," << monomial_of(e.series, exp) << "\n";
        }
        break;
    case Format::plain:
        if (terms.empty()) {
            out << "0\n";
        }
        for (const auto &[exp, c] : terms) {
            out << c.to_string() << "  " << monomial_of(e.series, exp) << "\n";
        }
        break;
    }
    o.out = out.str();
    o.err = err.str();
    return o;
}

} // namespace

Output run(const std::vector<std::string> &args) {
    CLI::App app{"Exact polygon gluing counts: closed formula, enumeration, Hurwitz counts, energy operators"};
    app.require_subcommand(1);

    Common common;
    int genus = -1, dprime = -1, dprime_max = 0, n = 0;
    std::string method = "formula", table_method = "all", expression;
    std::vector<std::string> order_flags;

    const auto method_check = CLI::IsMember({"formula", "gluing", "hurwitz-gr", "hurwitz-mono", "fock", "all"});

    auto *epsilon = app.add_subcommand("epsilon", "epsilon_g(d') by one or all methods");
    epsilon->add_option("--genus,-g", genus, "Genus g >= 0")->required();
    epsilon->add_option("--dprime,-d", dprime, "Half the number of polygon sides, d' >= 1")->required();
    epsilon->add_option("--method,-m", method, "Method")->check(method_check)->capture_default_str();
    add_common(epsilon, common);

    auto *table = app.add_subcommand("table", "genus x d' table with cross-validation");
    table->add_option("--max", dprime_max, "Largest d'")->required();
    table->add_option("--method,-m", table_method, "Method")->check(method_check)->capture_default_str();
    add_common(table, common);

    auto *jucys = app.add_subcommand("jucys", "verify e_k(J_2..J_n) = sum of class sums with n-k cycles");
    jucys->add_option("--n", n, "Degree of the symmetric group")->required();
    add_common(jucys, common);

    auto *vevcmd = app.add_subcommand("vev", "vacuum expectation of a product of E operators");
    vevcmd->add_option("expression", expression, "Product such as \"E(2; z) E(-2; w)\"")->required();
    vevcmd->add_option("--order", order_flags, "Truncation order var=N (repeatable)");
    add_common(vevcmd, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();
    }
    Output o;
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp &) {
        o.out = app.help();
        return o;
    } catch (const CLI::CallForAllHelp &) {
        o.out = app.help("", CLI::AppFormatMode::All);
        return o;
    } catch (const CLI::ParseError &e) {
        o.exit_code = kExitUsage;
        o.err = std::string("usage error: ") + e.what() + "\n";
        return o;
    }

    try {
        if (epsilon->parsed()) {
            return cmd_epsilon(genus, dprime, method, common);
        }
        if (table->parsed()) {
            return cmd_table(dprime_max, table_method, common);
        }
        if (jucys->parsed()) {
            return cmd_jucys(n, common);
        }
        return cmd_vev(expression, order_flags, common);
    } catch (const DomainError &e) {
        o.exit_code = kExitUsage;
        o.err = std::string("usage error: ") + e.what() + "\n";
    } catch (const GuardrailError &e) {
        o.exit_code = kExitUsage;
        o.err = std::string("usage error: ") + e.what() + "\n";
    } catch (const ParseError &e) {
        o.exit_code = kExitUsage;
        o.err = std::string(e.what()) + "\n";
    } catch (const DivergentExpectation &e) {
        o.exit_code = kExitUsage;
        o.err = std::string("error: ") + e.what() + "\n";
    } catch (const std::exception &e) {
        o.exit_code = kExitDisagree;
        o.err = std::string("error: ") + e.what() + "\n";
    }
    return o;
}

} // namespace hz::cli
