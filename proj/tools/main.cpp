// hncomb: exact-rational reduction-theory combinatorics on coweight lattices.
// Subcommands expose the library operations with deterministic JSON output
// (--json) or plain aligned tables.

#include "CLI11.hpp"

#include "hncomb/errors.hpp"
#include "hncomb/langlands.hpp"
#include "hncomb/posettop.hpp"
#include "hncomb/serialize.hpp"
#include "hncomb/strata.hpp"
#include "hncomb/vanishing.hpp"

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace hncomb;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFailures = 3;

struct Output {
    bool json = false;
    std::string command;
    std::string group;

    void emit(const OrderedJson& result, const std::string& table) const {
        if (json) {
            OrderedJson doc;
            doc["command"] = command;
            doc["group"] = group;
            doc["result"] = result;
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << table;
        }
    }
};

std::string root_line(const Root& root) {
    std::string out = root.is_positive() ? "+ " : "- ";
    for (std::size_t i = 0; i < root.coefs.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(root.coefs[i]);
    }
    return out;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad JSON in '" + path + "': " + e.what());
    }
    return doc;
}

int run_roots(const std::string& group_spec, const std::string& gamma_text, bool have_gamma, const Output& out) {
    auto group = build_group(parse_group_spec(group_spec));
    const auto roots =
        have_gamma ? levi_roots(group, parse_subset(gamma_text, group.rank)) : enumerate_roots(group);

    OrderedJson result;
    result["count"] = roots.size();
    OrderedJson list = OrderedJson::array();
    std::string table;
    for (const auto& root : roots) {
        OrderedJson item;
        item["coefs"] = root.coefs;
        item["positive"] = root.is_positive();
        list.push_back(std::move(item));
        table += root_line(root) + "\n";
    }
    result["roots"] = std::move(list);
    out.emit(result, table);
    return kExitOk;
}

int run_retract(const std::string& group_spec, const std::string& lambda_text,
                const std::optional<std::string>& eta_text, const Output& out) {
    auto group = build_group(parse_group_spec(group_spec));
    auto lam = parse_coweight(lambda_text, group);

    OrderedJson result;
    std::string table;
    if (eta_text) {
        auto eta = parse_coweight(*eta_text, group);
        auto mu = retract_shifted(group, eta, lam);
        result["mu"] = coweight_to_json(mu);
        table = "mu = " + coweight_to_string(mu) + "\n";
    } else {
        auto retraction = retract(group, lam);
        result["mu"] = coweight_to_json(retraction.mu);
        result["support"] = subset_to_json(retraction.support);
        OrderedJson coeffs = OrderedJson::array();
        for (const auto& c : retraction.coefficients)
            coeffs.push_back(rat_to_string(c));
        result["coefficients"] = std::move(coeffs);
        table = "mu = " + coweight_to_string(retraction.mu) + "\nsupport = {" +
                subset_to_string(retraction.support) + "}\ncoefficients = " +
                vec_to_string(retraction.coefficients) + "\n";
    }
    out.emit(result, table);
    return kExitOk;
}

int run_stratify(const std::string& group_spec, const std::string& lambda_text,
                 const std::optional<std::string>& eta_text, const Output& out) {
    auto group = build_group(parse_group_spec(group_spec));
    auto lam = parse_coweight(lambda_text, group);
    auto eta = eta_text ? parse_coweight(*eta_text, group) : zero_coweight(group);
    auto mu = retract_shifted(group, eta, lam);
    auto [index, set] = eta_stratum(group, eta, mu);

    OrderedJson result;
    result["lambda"] = coweight_to_json(lam);
    result["index"] = stratum_to_json(index);
    OrderedJson set_json;
    set_json["kind"] = "down_levi";
    set_json["gamma_M"] = subset_to_json(set.gamma_m());
    set_json["apex"] = coweight_to_json(set.base());
    result["set"] = std::move(set_json);

    std::string table = "index   = " + coweight_to_string(index.lam) + "\ngamma_M = {" +
                        subset_to_string(index.gamma_m) + "}\nset     = down_levi(apex " +
                        coweight_to_string(set.base()) + ")\n";
    out.emit(result, table);
    return kExitOk;
}

int run_enumerate(const std::string& group_spec, const std::string& theta_text, const Output& out) {
    auto group = build_group(parse_group_spec(group_spec));
    auto theta = parse_coweight(theta_text, group);
    auto candidates = enumerate_candidates(group, theta);

    OrderedJson result;
    result["count"] = candidates.size();
    result["candidates_only"] = true;  // which indices are realized is not decided
    OrderedJson list = OrderedJson::array();
    std::string table;
    for (const auto& c : candidates) {
        list.push_back(stratum_to_json(c));
        table += "lambda = " + coweight_to_string(c.lam) + "   gamma_M = {" + subset_to_string(c.gamma_m) + "}\n";
    }
    result["candidates"] = std::move(list);
    out.emit(result, table);
    return kExitOk;
}

int run_check_cover(const std::string& group_spec, long genus, const std::string& theta_text, long samples,
                    std::uint64_t seed, const Output& out) {
    auto group = build_group(parse_group_spec(group_spec));
    auto theta = parse_coweight(theta_text, group);
    auto report = check_theorem_cover(group, genus, theta, samples, seed);

    std::string table = "requested = " + std::to_string(report.requested) +
                        "\nchecked   = " + std::to_string(report.checked) +
                        "\nskipped   = " + std::to_string(report.skipped) +
                        "\nfailures  = " + std::to_string(report.failures.size()) + "\n";
    for (const auto& f : report.failures)
        table += "  lambda " + coweight_to_string(f.lambda) + " failed at " + f.stage + " (witness " +
                 coweight_to_string(f.witness) + ")\n";
    out.emit(cover_report_to_json(report), table);
    return report.ok() ? kExitOk : kExitFailures;
}

int run_classify(const std::optional<std::string>& poset_path, const std::string& subset_text,
                 const std::optional<std::string>& group_spec, const std::string& kind,
                 const std::vector<std::string>& generator_texts, std::uint64_t seed, long samples,
                 Output& out) {
    OrderedJson result;
    std::string table;
    if (poset_path) {
        auto poset = poset_from_json(load_json_file(*poset_path));
        std::vector<bool> subset(poset.size(), false);
        std::size_t pos = 0;
        const std::string body = subset_text;
        while (pos < body.size()) {
            auto comma = body.find(',', pos);
            const std::string name = body.substr(pos, comma - pos);
            const int index = poset.index_of(name);
            if (index < 0)
                throw DomainError("element '" + name + "' is not in the poset");
            subset[index] = true;
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
        const TopClass cls = classify_finite(poset, subset);
        result["classification"] = top_class_name(cls);
        result["method"] = "finite preorder scan";
        table = top_class_name(cls) + "\n";
    } else if (group_spec) {
        auto group = build_group(parse_group_spec(*group_spec));
        std::vector<Coweight> generators;
        for (const auto& text : generator_texts)
            generators.push_back(parse_coweight(text, group));
        SetDescription description = [&] {
            if (kind == "down")
                return SetDescription::down_closure(generators);
            if (kind == "up")
                return SetDescription::up_closure(generators);
            if (kind == "explicit")
                return SetDescription::explicit_set(generators);
            if (kind == "interval") {
                if (generators.size() % 2 != 0)
                    throw DomainError("interval kind needs an even number of --gen (lower,upper pairs)");
                std::vector<std::pair<Coweight, Coweight>> intervals;
                for (std::size_t i = 0; i + 1 < generators.size(); i += 2)
                    intervals.push_back({generators[i], generators[i + 1]});
                return SetDescription::interval_union(std::move(intervals));
            }
            throw DomainError("unknown kind '" + kind + "' (expected down, up, interval, explicit)");
        }();
        const auto classification = classify_cone(group, description, seed, samples);
        result["classification"] = top_class_name(classification.cls);
        result["method"] = classification.method;
        table = top_class_name(classification.cls) + " (" + classification.method + ")\n";
        out.group = *group_spec;
    } else {
        throw DomainError("classify needs either --poset or --group");
    }
    out.emit(result, table);
    return kExitOk;
}

int run_constants(const std::string& group_spec, std::optional<long> genus_flag,
                  const std::optional<std::string>& table_path, const Output& out) {
    auto group = build_group(parse_group_spec(group_spec));
    StrangenessTable table;
    if (table_path)
        table = strangeness_table_from_json(load_json_file(*table_path), group);
    if (genus_flag)
        table.genus = *genus_flag;
    else if (!table_path)
        throw DomainError("constants needs --genus or a --strangeness file with a genus field");

    const auto constants = minimal_constants(group, table);
    OrderedJson result;
    result["genus"] = table.genus;
    OrderedJson cp = OrderedJson::array(), cpp_arr = OrderedJson::array();
    for (const auto& v : constants.c_prime)
        cp.push_back(rat_to_string(v));
    for (const auto& v : constants.c_double_prime)
        cpp_arr.push_back(rat_to_string(v));
    result["c_prime"] = std::move(cp);
    result["c_double_prime"] = std::move(cpp_arr);

    std::string text = "c'  = " + vec_to_string(constants.c_prime) +
                       "\nc'' = " + vec_to_string(constants.c_double_prime) + "\n";
    out.emit(result, text);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of dominance orders, retractions and stratification indices"};
    app.require_subcommand(1);

    std::string group_spec, lambda_text, theta_text, eta_text, gamma_text, subset_text, kind = "down";
    std::string poset_path, table_path;
    std::vector<std::string> generator_texts;
    long genus = 0, samples = 0;
    std::uint64_t seed = 0;
    bool json = false;

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", json, "machine-readable output"); };

    auto* roots = app.add_subcommand("roots", "enumerate roots, optionally of a Levi subsystem");
    roots->add_option("--group", group_spec, "group spec, e.g. A2, B2xA1 ad, A1+Z1")->required();
    auto* roots_gamma = roots->add_option("--gamma-m", gamma_text, "Levi subset, 1-based, e.g. 1,3");
    add_json(roots);

    auto* retract_cmd = app.add_subcommand("retract", "least dominant coweight above lambda");
    retract_cmd->add_option("--group", group_spec)->required();
    retract_cmd->add_option("--lambda", lambda_text, "coweight, e.g. 1,-1 or 1,-1;3/2")->required();
    auto* retract_eta = retract_cmd->add_option("--eta", eta_text, "shift; requires dominant lambda");
    add_json(retract_cmd);

    auto* stratify = app.add_subcommand("stratify", "stratum index and description through lambda");
    stratify->add_option("--group", group_spec)->required();
    stratify->add_option("--lambda", lambda_text)->required();
    auto* stratify_eta = stratify->add_option("--eta", eta_text, "stratification shift (default 0)");
    add_json(stratify);

    auto* enumerate = app.add_subcommand("enumerate", "candidate stratum indices below theta");
    enumerate->add_option("--group", group_spec)->required();
    enumerate->add_option("--theta", theta_text)->required();
    add_json(enumerate);

    auto* check = app.add_subcommand("check-cover", "randomized covering/emptiness check");
    check->add_option("--group", group_spec)->required();
    check->add_option("--genus", genus)->required();
    check->add_option("--theta", theta_text)->required();
    check->add_option("--samples", samples)->required();
    auto* check_seed = check->add_option("--seed", seed, "sampling seed (required with --json)");
    add_json(check);

    auto* classify = app.add_subcommand("classify", "open/closed/locally-closed classification");
    auto* classify_poset = classify->add_option("--poset", poset_path, "finite preorder JSON file");
    classify->add_option("--subset", subset_text, "comma-separated element names");
    auto* classify_group = classify->add_option("--group", group_spec);
    classify->add_option("--kind", kind, "down | up | interval | explicit");
    classify->add_option("--gen", generator_texts, "generator coweight (repeatable)");
    classify->add_option("--seed", seed, "seed for sampled interval checks");
    classify->add_option("--samples", samples, "sample count for explicit sets")->default_val(64);
    add_json(classify);

    auto* constants = app.add_subcommand("constants", "minimal vanishing thresholds");
    constants->add_option("--group", group_spec)->required();
    auto* constants_genus = constants->add_option("--genus", genus);
    auto* constants_table = constants->add_option("--strangeness", table_path, "strangeness table JSON file");
    add_json(constants);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cerr, std::cerr);
        return kExitUsage;
    }

    Output out;
    out.json = json;
    out.group = group_spec;

    try {
        if (roots->parsed()) {
            out.command = "roots";
            return run_roots(group_spec, gamma_text, roots_gamma->count() > 0, out);
        }
        if (retract_cmd->parsed()) {
            out.command = "retract";
            return run_retract(group_spec, lambda_text,
                               retract_eta->count() ? std::optional(eta_text) : std::nullopt, out);
        }
        if (stratify->parsed()) {
            out.command = "stratify";
            return run_stratify(group_spec, lambda_text,
                                stratify_eta->count() ? std::optional(eta_text) : std::nullopt, out);
        }
        if (enumerate->parsed()) {
            out.command = "enumerate";
            return run_enumerate(group_spec, theta_text, out);
        }
        if (check->parsed()) {
            out.command = "check-cover";
            if (json && check_seed->count() == 0) {
                std::cerr << "check-cover --json requires --seed for reproducibility\n";
                return kExitUsage;
            }
            return run_check_cover(group_spec, genus, theta_text, samples, seed, out);
        }
        if (classify->parsed()) {
            out.command = "classify";
            return run_classify(classify_poset->count() ? std::optional(poset_path) : std::nullopt, subset_text,
                                classify_group->count() ? std::optional(group_spec) : std::nullopt, kind,
                                generator_texts, seed, samples, out);
        }
        if (constants->parsed()) {
            out.command = "constants";
            return run_constants(group_spec, constants_genus->count() ? std::optional(genus) : std::nullopt,
                                 constants_table->count() ? std::optional(table_path) : std::nullopt, out);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
