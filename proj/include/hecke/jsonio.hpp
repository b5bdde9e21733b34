#pragma once

// JSON forms of the public result types. Rationals are serialized as strings
// ("p/q" or a plain integer string) so nothing ever rides through a float.

#include <json.hpp>

#include "hecke/cohomology.hpp"
#include "hecke/oracle/verify.hpp"

namespace hecke {

inline nlohmann::json json_partition(const Partition& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : p.parts()) arr.push_back(v);
    return arr;
}

inline nlohmann::json json_character(const CentralCharacter& chi) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [re, im] : chi.entries()) {
        if (im.is_zero())
            arr.push_back(re.to_string());
        else
            arr.push_back(re.to_string() + (im.sgn() > 0 ? "+" : "") + im.to_string() + "i");
    }
    return arr;
}

// the cohomology record: multiplicities are symmetrized class totals, one
// entry per strict partition appearing
inline nlohmann::json json_cohomology(const UnitaryModule& module, const CohomologyResult& res) {
    nlohmann::json out;
    out["module"] = module.to_string();
    out["nonzero"] = res.nonzero;
    out["witness"] = res.witness ? json_partition(res.witness->partition()) : nlohmann::json();
    nlohmann::json decomp = nlohmann::json::array();
    for (const auto& [lambda, total] : res.symmetrized()) {
        nlohmann::json entry;
        entry["lambda"] = json_partition(lambda.partition());
        entry["associate"] = partition_is_even(lambda.partition()) ? "self" : "pair";
        entry["multiplicity"] = total;
        decomp.push_back(entry);
    }
    out["cohomology"] = decomp;
    out["central_character"] = json_character(central_character(module));
    return out;
}

inline nlohmann::json json_verify_record(const VerifyRecord& rec) {
    nlohmann::json out;
    out["module"] = rec.module;
    out["n"] = rec.n;
    out["spin"] = rec.spin;
    out["d_squared"] = rec.d_squared_ok ? "ok" : "fail";
    out["kernel_dim"] = rec.kernel_dim;
    out["predicted_dim"] = rec.predicted_dim;
    out["pairings_match"] = rec.pairings_match;
    out["elapsed_ms"] = rec.elapsed_ms;
    return out;
}

inline nlohmann::json json_enumerate_line(const UnitaryModule& X) {
    auto [nonzero, witness] = has_nonzero_dirac(X);
    nlohmann::json out;
    out["module"] = X.to_string();
    out["n"] = X.n();
    out["nonzero"] = nonzero;
    out["witness"] = witness ? json_partition(witness->partition()) : nlohmann::json();
    return out;
}

inline nlohmann::json json_spin_type(const SpinType& t) {
    nlohmann::json out;
    out["lambda"] = json_partition(t.lambda.partition());
    out["associate"] = t.associate == Associate::Self ? "self"
                       : t.associate == Associate::Plus ? "plus" : "minus";
    out["dimension"] = spin_dimension(t.lambda);
    out["casimir"] = casimir_scalar(t.lambda).to_string();
    return out;
}

}  // namespace hecke
