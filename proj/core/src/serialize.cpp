#include "hncomb/serialize.hpp"

#include "hncomb/errors.hpp"

namespace hncomb {

OrderedJson rat_to_json(const Rat& value) { return rat_to_string(value); }

Rat rat_from_json(const nlohmann::json& value) {
    if (value.is_number_integer())
        return Rat(value.get<long long>());
    if (value.is_string())
        return parse_rational(value.get<std::string>());
    throw ParseError("expected a rational as \"p/q\" string or integer");
}

OrderedJson coweight_to_json(const Coweight& cw) {
    OrderedJson out = OrderedJson::array();
    for (const auto& p : cw.pairings)
        out.push_back(rat_to_string(p));
    for (const auto& c : cw.central)
        out.push_back(rat_to_string(c));
    return out;
}

Coweight coweight_from_json(const nlohmann::json& value, const GroupData& group) {
    if (!value.is_array() || static_cast<int>(value.size()) != group.dim())
        throw ParseError("coweight array must have " + std::to_string(group.dim()) + " entries");
    Coweight cw = zero_coweight(group);
    for (int i = 0; i < group.rank; ++i)
        cw.pairings[i] = rat_from_json(value[i]);
    for (int c = 0; c < group.central_rank; ++c)
        cw.central[c] = rat_from_json(value[group.rank + c]);
    return cw;
}

OrderedJson subset_to_json(const std::vector<int>& subset) {
    OrderedJson out = OrderedJson::array();
    for (int i : subset)
        out.push_back(i + 1);
    return out;
}

std::vector<int> subset_from_json(const nlohmann::json& value, int rank) {
    if (!value.is_array())
        throw ParseError("subset must be an array of 1-based vertex indices");
    std::vector<int> subset;
    for (const auto& item : value) {
        const int index = item.get<int>();
        if (index < 1 || index > rank)
            throw ParseError("vertex index " + std::to_string(index) + " out of range 1.." + std::to_string(rank));
        subset.push_back(index - 1);
    }
    std::sort(subset.begin(), subset.end());
    validate_subset(subset, rank);
    return subset;
}

OrderedJson certificate_to_json(const Certificate& cert) {
    OrderedJson out;
    if (cert.feasible) {
        out["kind"] = "feasible";
        OrderedJson point = OrderedJson::array();
        for (const auto& v : cert.point)
            point.push_back(rat_to_string(v));
        out["point"] = std::move(point);
    } else {
        out["kind"] = "infeasible";
        OrderedJson farkas = OrderedJson::array();
        for (const auto& v : cert.farkas)
            farkas.push_back(rat_to_string(v));
        out["farkas"] = std::move(farkas);
    }
    return out;
}

Certificate certificate_from_json(const nlohmann::json& value) {
    Certificate cert;
    const std::string kind = value.at("kind").get<std::string>();
    if (kind == "feasible") {
        cert.feasible = true;
        for (const auto& item : value.at("point"))
            cert.point.push_back(rat_from_json(item));
    } else if (kind == "infeasible") {
        cert.feasible = false;
        for (const auto& item : value.at("farkas"))
            cert.farkas.push_back(rat_from_json(item));
    } else {
        throw ParseError("certificate kind must be feasible or infeasible");
    }
    return cert;
}

OrderedJson stratum_to_json(const StratumIndex& index) {
    OrderedJson out;
    out["lambda"] = coweight_to_json(index.lam);
    out["gamma_M"] = subset_to_json(index.gamma_m);
    return out;
}

OrderedJson admissibility_report_to_json(const AdmissibilityReport& report) {
    OrderedJson out;
    out["checked"] = report.checked;
    OrderedJson failures = OrderedJson::array();
    for (const auto& f : report.failures) {
        OrderedJson item;
        item["lambda"] = coweight_to_json(f.witness);
        item["stage"] = f.stage;
        item["witness"] = coweight_to_json(f.witness);
        failures.push_back(std::move(item));
    }
    out["failures"] = std::move(failures);
    return out;
}

OrderedJson cover_report_to_json(const CoverReport& report) {
    OrderedJson out;
    out["requested"] = report.requested;
    out["checked"] = report.checked;
    out["skipped"] = report.skipped;
    OrderedJson failures = OrderedJson::array();
    for (const auto& f : report.failures) {
        OrderedJson item;
        item["lambda"] = coweight_to_json(f.lambda);
        item["stage"] = f.stage;
        item["witness"] = coweight_to_json(f.witness);
        failures.push_back(std::move(item));
    }
    out["failures"] = std::move(failures);
    return out;
}

StrangenessTable strangeness_table_from_json(const nlohmann::json& value, const GroupData& group) {
    StrangenessTable table;
    if (value.contains("genus"))
        table.genus = value.at("genus").get<long>();
    if (table.genus < 0)
        throw ParseError("genus must be nonnegative");
    if (value.contains("entries")) {
        for (const auto& item : value.at("entries")) {
            std::vector<int> levi = subset_from_json(item.at("levi"), group.rank);
            std::vector<int> coefs;
            for (const auto& c : item.at("root_coefs"))
                coefs.push_back(c.get<int>());
            if (static_cast<int>(coefs.size()) != group.rank)
                throw ParseError("root_coefs must have one entry per Dynkin vertex");
            table.set(std::move(levi), std::move(coefs), item.at("dual").get<bool>(),
                      rat_from_json(item.at("value")));
        }
    }
    return table;
}

FinitePoset poset_from_json(const nlohmann::json& value) {
    std::vector<std::string> elements;
    for (const auto& item : value.at("elements"))
        elements.push_back(item.get<std::string>());
    std::vector<std::vector<bool>> leq;
    for (const auto& row : value.at("leq")) {
        std::vector<bool> bits;
        for (const auto& cell : row)
            bits.push_back(cell.get<int>() != 0);
        leq.push_back(std::move(bits));
    }
    return FinitePoset(std::move(elements), std::move(leq));
}

}  // namespace hncomb
