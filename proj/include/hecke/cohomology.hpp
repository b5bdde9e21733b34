#pragma once

// The classification engine. A unitary module has nonzero Dirac cohomology
// iff every factor is an untwisted Speh factor and the concatenation of the
// hook strings (m_i+d_i-1, m_i+d_i-3, ..., |m_i-d_i|+1) has pairwise distinct
// entries; the sorted entries form the witness, a strict partition whose
// middle element is the central character. The cohomology itself is computed
// two ways: closed-form tables for single Speh factors and spherical modules
// (kept verbatim, including their known rough edges for m < d, which the
// matrix oracle flags), and the general tensor-decomposition formula
//
//   H = sum_{types in the fiber of the witness} sum_mu
//         [type : sigma_mu (x) S^eps] [X|_W : mu] * type ,
//
// which is the formula the oracle verifies and the one `verify` trusts.

#include <optional>
#include <string>
#include <vector>

#include "hecke/partition.hpp"
#include "hecke/spin.hpp"
#include "hecke/unitary.hpp"

namespace hecke {

enum class SpinChoice { Plus, Minus, Unique };

inline SpinChoice default_spin_choice(int n) {
    return n % 2 == 1 ? SpinChoice::Plus : SpinChoice::Unique;
}

inline std::string spin_choice_name(SpinChoice c) {
    switch (c) {
        case SpinChoice::Plus: return "+";
        case SpinChoice::Minus: return "-";
        case SpinChoice::Unique: return "unique";
    }
    return "?";
}

struct CohomologyResult {
    bool nonzero = false;
    std::optional<DistinctPartition> witness;
    SpinMultiset decomposition;
    SpinChoice spin_choice = SpinChoice::Unique;

    std::map<DistinctPartition, long long> symmetrized() const {
        return decomposition.symmetrized();
    }
};

// the allowed central characters: middle elements of strict partitions
inline std::vector<CharacterVector> allowed_central_characters(int n) {
    std::vector<CharacterVector> out;
    for (const DistinctPartition& d : distinct_partitions(n))
        out.push_back(middle_element(d.partition()));
    return out;
}

// Concatenated hook strings of a Speh-only module, or nothing if an entry
// repeats. Pairwise-distinct entries are equivalent to the two-group gap
// conditions: within one parity class the strings interleave strictly
// exactly when no entry repeats.
inline std::optional<DistinctPartition> speh_witness(const UnitaryModule& X) {
    std::vector<int> entries;
    for (const Factor& f : X.factors()) {
        DistinctPartition hook = std::get<SpehFactor>(f).hook_string();
        for (int p : hook.parts()) entries.push_back(p);
    }
    std::sort(entries.rbegin(), entries.rend());
    for (size_t i = 1; i < entries.size(); ++i)
        if (entries[i] == entries[i - 1]) return std::nullopt;
    return DistinctPartition(Partition(std::move(entries)));
}

inline std::pair<bool, std::optional<DistinctPartition>> has_nonzero_dirac(const UnitaryModule& X) {
    if (!X.speh_only() || !X.real()) return {false, std::nullopt};
    std::optional<DistinctPartition> w = speh_witness(X);
    if (!w) return {false, std::nullopt};
    return {true, w};
}

namespace detail {

// add mult to every distinct member of the associate class of lambda
inline void add_to_class(SpinMultiset& m, const DistinctPartition& lambda, long long mult) {
    if (partition_is_even(lambda.partition())) {
        m.add(SpinType(lambda, Associate::Self), mult);
    } else {
        m.add(SpinType(lambda, Associate::Plus), mult);
        m.add(SpinType(lambda, Associate::Minus), mult);
    }
}

// add mult to the single member selected by the spin choice label
inline void add_to_member(SpinMultiset& m, const DistinctPartition& lambda, long long mult,
                          SpinChoice choice) {
    if (partition_is_even(lambda.partition())) {
        m.add(SpinType(lambda, Associate::Self), mult);
    } else {
        m.add(SpinType(lambda, choice == SpinChoice::Minus ? Associate::Minus : Associate::Plus),
              mult);
    }
}

}  // namespace detail

// Closed-form cohomology of a single Speh factor, exactly as tabulated:
//   d odd, m even : 2^{(d-1)/2} on both associates of the hook string
//   d odd, m odd  : 2^{[(d-1)/2]} on one labeled member
//   d even        : 2^{[(d+1)/2]} on one labeled member
// The table is reliable for d <= m; for m < d the matrix oracle overrules it
// (the general formula is the arbiter) and `verify` reports the discrepancy.
inline CohomologyResult dirac_cohomology_speh(const SpehFactor& f, SpinChoice choice) {
    if (!f.y.is_zero())
        throw std::invalid_argument("dirac_cohomology_speh: twisted factor has zero cohomology");
    CohomologyResult res;
    res.spin_choice = choice;
    DistinctPartition hook = f.hook_string();
    res.witness = hook;
    res.nonzero = true;
    if (f.d % 2 == 1 && f.m % 2 == 0) {
        detail::add_to_class(res.decomposition, hook, 1LL << ((f.d - 1) / 2));
    } else if (f.d % 2 == 1) {
        detail::add_to_member(res.decomposition, hook, 1LL << ((f.d - 1) / 2), choice);
    } else {
        detail::add_to_member(res.decomposition, hook, 1LL << ((f.d + 1) / 2), choice);
    }
    return res;
}

// Closed-form cohomology of the spherical module with central character
// h_lambda, lambda strict. lambda = (n) is the restriction of the spin
// module; otherwise the three parity cases.
inline CohomologyResult dirac_cohomology_spherical(int n, const DistinctPartition& lambda,
                                                   SpinChoice choice) {
    if (lambda.n() != n) throw std::invalid_argument("dirac_cohomology_spherical: size mismatch");
    CohomologyResult res;
    res.spin_choice = choice;
    res.witness = lambda;
    res.nonzero = true;
    if (lambda.length() == 1) {
        res.decomposition = spin_module_restriction(n);
        return res;
    }
    int len = lambda.length();
    bool lambda_even = partition_is_even(lambda.partition());
    if (n % 2 == 1) {
        long long mult = 1LL << ((len - 1) / 2);
        if (lambda_even)
            detail::add_to_member(res.decomposition, lambda, mult, choice);
        else
            detail::add_to_class(res.decomposition, lambda, mult);
    } else {
        // 2^{[len/2 - 1]} (type + type (x) sgn)
        long long mult = 1LL << ((len - 2) / 2);
        if (lambda_even) {
            detail::add_to_member(res.decomposition, lambda, 2 * mult, choice);
        } else {
            detail::add_to_class(res.decomposition, lambda, mult);
        }
    }
    return res;
}

// The general formula: match the central character against a strict
// partition, then assemble multiplicities from the tensor decomposition and
// the Littlewood-Richardson restriction. Associate pairs always come out
// balanced, so the result is symmetrized by construction.
inline CohomologyResult dirac_cohomology_general(const UnitaryModule& X, SpinChoice choice) {
    CohomologyResult res;
    res.spin_choice = choice;
    CentralCharacter chi = central_character(X);
    if (!chi.is_real()) return res;
    CharacterVector re = chi.real_part();
    std::optional<DistinctPartition> match;
    for (const DistinctPartition& d : distinct_partitions(X.n()))
        if (middle_element(d.partition()) == re) {
            match = d;
            break;
        }
    if (!match) return res;
    if (!X.speh_only())
        throw std::logic_error(
            "dirac_cohomology_general: complementary factor with an allowed central character");

    MultiplicityMap rest = restriction_to_W(X);
    long long member_mult = 0;
    for (const auto& [mu, m] : rest)
        member_mult += m * spin_tensor_with_spin_module(*match, mu);
    if (member_mult > 0) {
        detail::add_to_class(res.decomposition, *match, member_mult);
        res.nonzero = true;
        res.witness = match;
    }
    return res;
}

// weak converse test: the tensor criterion at matching Casimir scalars
inline bool criterion_check(const CentralCharacter& chi, const SpinType& type) {
    auto [re, im] = chi.norm_squared();
    return im.is_zero() && re == casimir_scalar(type.lambda);
}

// All multisets of untwisted Speh factors of total size n, canonically
// ordered, deterministic. Factor types are ordered by (size desc, m desc);
// multisets are built nonincreasing in that order.
inline std::vector<UnitaryModule> enumerate_speh_multisets(int n) {
    std::vector<SpehFactor> types;
    for (int k = n; k >= 1; --k)
        for (int m = k; m >= 1; --m)
            if (k % m == 0) types.emplace_back(m, k / m);
    std::vector<UnitaryModule> out;
    std::vector<Factor> cur;
    auto rec = [&](auto&& self, int remaining, size_t mintype) -> void {
        if (remaining == 0) {
            out.push_back(UnitaryModule(cur));
            return;
        }
        for (size_t t = mintype; t < types.size(); ++t) {
            if (types[t].size() > remaining) continue;
            cur.push_back(types[t]);
            self(self, remaining - types[t].size(), t);
            cur.pop_back();
        }
    };
    rec(rec, n, 0);
    return out;
}

}  // namespace hecke
