#pragma once

// Genuine irreducible representations of the double cover of S_n, following
// Schur's classification: one self-associate type per even strict partition
// (n minus length even), an associate pair per odd strict partition. The
// tensor multiplicities with the basic spin representation come from the
// g-matrix; the epsilon normalization is applied exactly as stated and the
// integrality of every multiplicity is enforced at runtime, which turns the
// convention into a checked invariant rather than an assumption.
//
// Which member of an associate pair is called "+" is an arbitrary but fixed
// labeling; every comparison that matters is made after symmetrizing over
// associate pairs.

#include <map>
#include <string>
#include <vector>
#include <stdexcept>

#include "hecke/partition.hpp"
#include "hecke/symfunc.hpp"

namespace hecke {

enum class Associate { Self, Plus, Minus };

inline bool partition_is_even(const Partition& lambda) {
    return (lambda.n() - lambda.length()) % 2 == 0;
}

struct SpinType {
    DistinctPartition lambda;
    Associate associate = Associate::Self;

    SpinType() = default;
    SpinType(DistinctPartition l, Associate a) : lambda(std::move(l)), associate(a) {
        bool even = partition_is_even(lambda.partition());
        if (even && associate != Associate::Self)
            throw std::invalid_argument("SpinType: " + lambda.to_string() + " is self-associate");
        if (!even && associate == Associate::Self)
            throw std::invalid_argument("SpinType: " + lambda.to_string() + " has an associate pair");
    }

    bool self_associate() const { return associate == Associate::Self; }

    std::string to_string() const {
        std::string s = lambda.to_string();
        if (associate == Associate::Plus) s += "+";
        if (associate == Associate::Minus) s += "-";
        return s;
    }

    friend bool operator==(const SpinType& a, const SpinType& b) {
        return a.lambda == b.lambda && a.associate == b.associate;
    }
    friend bool operator<(const SpinType& a, const SpinType& b) {
        if (a.lambda != b.lambda) return a.lambda < b.lambda;
        return static_cast<int>(a.associate) < static_cast<int>(b.associate);
    }
};

inline SpinType associate(const SpinType& s) {
    switch (s.associate) {
        case Associate::Self: return s;
        case Associate::Plus: return SpinType(s.lambda, Associate::Minus);
        case Associate::Minus: return SpinType(s.lambda, Associate::Plus);
    }
    throw std::logic_error("associate: bad enum");
}

// one SpinType per even strict partition, two per odd one
inline std::vector<SpinType> classify_spin_types(int n) {
    std::vector<SpinType> out;
    for (const DistinctPartition& d : distinct_partitions(n)) {
        if (partition_is_even(d.partition())) {
            out.emplace_back(d, Associate::Self);
        } else {
            out.emplace_back(d, Associate::Plus);
            out.emplace_back(d, Associate::Minus);
        }
    }
    return out;
}

// Schur's dimension formula: 2^[(n-m)/2] n!/(l_1! ... l_m!) prod (l_i-l_j)/(l_i+l_j)
inline long long spin_dimension(const DistinctPartition& lambda) {
    int n = lambda.n(), m = lambda.length();
    Rational dim(BigInt::pow2((n - m) / 2));
    dim *= Rational(BigInt::factorial(n));
    for (int p : lambda.parts()) dim /= Rational(BigInt::factorial(p));
    const auto& parts = lambda.parts();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            dim *= Rational(parts[i] - parts[j], parts[i] + parts[j]);
    if (!dim.is_integer() || dim.sgn() <= 0)
        throw std::logic_error("spin_dimension: formula gave non-integral value for " +
                               lambda.to_string());
    return dim.to_i64();
}

// Multiplicity of one member of the class of sigma~_lambda in
// sigma_mu (x) sigma~_(n): (1/(eps_lambda eps_(n))) 2^((len-1)/2) g_{lambda,mu}.
// Powers of sqrt(2) are tracked as a half-integer exponent; the result must
// come out a nonnegative integer.
inline long long spin_tensor_multiplicity(const DistinctPartition& lambda, const Partition& mu) {
    int n = lambda.n();
    if (mu.n() != n) throw std::invalid_argument("spin_tensor_multiplicity: size mismatch");
    if (lambda.length() == 1)
        throw std::invalid_argument("spin_tensor_multiplicity: lambda = (n) not covered");
    long long g = g_entry(lambda.partition(), mu);
    if (g == 0) return 0;
    int half_exponent = lambda.length() - 1;  // exponent of sqrt(2)
    if (!partition_is_even(lambda.partition())) half_exponent -= 1;
    std::vector<int> full{n};
    if (!partition_is_even(Partition(full))) half_exponent -= 1;
    if (half_exponent % 2 != 0 || half_exponent < 0)
        throw std::logic_error("spin_tensor_multiplicity: non-integral power of 2 at " +
                               lambda.to_string() + "," + mu.to_string());
    long long value = g << (half_exponent / 2);
    if (value < 0)
        throw std::logic_error("spin_tensor_multiplicity: negative multiplicity at " +
                               lambda.to_string() + "," + mu.to_string());
    return value;
}

// Multiplicity of one fixed labeled type sigma~_lambda^a in sigma_mu (x) S^eps,
// where S^eps is one simple Clifford module restricted to the double cover.
// For n even both halves of the unique S contribute; lambda = (n) follows the
// hook rule (the square of the basic spin representation is the sum of the
// hook types, one each).
inline long long spin_tensor_with_spin_module(const DistinctPartition& lambda, const Partition& mu) {
    if (lambda.length() == 1) return mu.is_hook() ? 1 : 0;
    long long t = spin_tensor_multiplicity(lambda, mu);
    return lambda.n() % 2 == 0 ? 2 * t : t;
}

class SpinMultiset {
public:
    SpinMultiset() = default;

    void add(const SpinType& s, long long mult) {
        if (mult < 0) throw std::invalid_argument("SpinMultiset: negative multiplicity");
        if (mult == 0) return;
        m_[s] += mult;
    }

    const std::map<SpinType, long long>& entries() const { return m_; }
    bool empty() const { return m_.empty(); }

    long long multiplicity(const SpinType& s) const {
        auto it = m_.find(s);
        return it == m_.end() ? 0 : it->second;
    }

    long long total_dimension() const {
        long long d = 0;
        for (const auto& [s, mult] : m_) d += mult * spin_dimension(s.lambda);
        return d;
    }

    // total multiplicity per associate class, keyed by the partition
    std::map<DistinctPartition, long long> symmetrized() const {
        std::map<DistinctPartition, long long> out;
        for (const auto& [s, mult] : m_) out[s.lambda] += mult;
        return out;
    }

    friend bool operator==(const SpinMultiset& a, const SpinMultiset& b) { return a.m_ == b.m_; }

    std::string to_string() const {
        if (m_.empty()) return "0";
        std::string out;
        for (const auto& [s, mult] : m_) {
            if (!out.empty()) out += " + ";
            if (mult != 1) out += std::to_string(mult) + "*";
            out += s.to_string();
        }
        return out;
    }

private:
    std::map<SpinType, long long> m_;
};

// Restriction of the spin module(s) of the Clifford algebra to the double
// cover: for n odd each of S^+/S^- restricts to the self-associate basic
// type once; for n even the unique S restricts to the associate pair.
inline SpinMultiset spin_module_restriction(int n) {
    if (n < 1) throw std::invalid_argument("spin_module_restriction: n must be positive");
    SpinMultiset out;
    DistinctPartition row{n};
    if (n % 2 == 1) {
        out.add(SpinType(row, Associate::Self), 1);
    } else {
        out.add(SpinType(row, Associate::Plus), 1);
        out.add(SpinType(row, Associate::Minus), 1);
    }
    return out;
}

}  // namespace hecke
