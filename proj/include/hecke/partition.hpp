#pragma once

// Partitions, compositions and Young-diagram combinatorics: enumeration in
// descending lexicographic order (which refines dominance), transposes,
// principal hooks, box contents and the middle-element vectors h_lambda built
// from strings ((k-1)/2, (k-3)/2, ..., -(k-1)/2) over the parts.

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>
#include <stdexcept>

#include "hecke/rational.hpp"

namespace hecke {

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    int n() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    bool is_strict() const {
        for (size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i] >= parts_[i - 1]) return false;
        return true;
    }

    bool is_hook() const {
        return length() <= 1 || parts_[1] == 1;
    }

    // number of parts equal to each value is irrelevant here; comparison is
    // descending-lex, the enumeration order used everywhere
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ > b.parts_; }

    std::string to_string() const {
        std::string s = "[";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    static Partition from_string(std::string_view s) {
        if (s.size() < 2 || s.front() != '[' || s.back() != ']')
            throw std::invalid_argument("Partition: expected \"[a,b,...]\"");
        std::vector<int> parts;
        std::string cur;
        for (char c : s.substr(1, s.size() - 2)) {
            if (c == ',') {
                parts.push_back(std::stoi(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) parts.push_back(std::stoi(cur));
        return Partition(std::move(parts));
    }

private:
    std::vector<int> parts_;
};

// Ordered tuple of positive integers; order significant, so (2,1) != (1,2).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("Composition: parts must be positive");
    }
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int n() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    Partition sorted() const {
        std::vector<int> p = parts_;
        std::sort(p.rbegin(), p.rend());
        return Partition(std::move(p));
    }

    friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
};

class DistinctPartition {
public:
    DistinctPartition() = default;
    explicit DistinctPartition(Partition p) : p_(std::move(p)) {
        if (!p_.is_strict())
            throw std::invalid_argument("DistinctPartition: parts must be strictly decreasing: " +
                                        p_.to_string());
    }
    DistinctPartition(std::initializer_list<int> parts) : DistinctPartition(Partition(parts)) {}

    const Partition& partition() const { return p_; }
    const std::vector<int>& parts() const { return p_.parts(); }
    int length() const { return p_.length(); }
    int n() const { return p_.n(); }
    std::string to_string() const { return p_.to_string(); }

    friend bool operator==(const DistinctPartition& a, const DistinctPartition& b) { return a.p_ == b.p_; }
    friend bool operator!=(const DistinctPartition& a, const DistinctPartition& b) { return !(a == b); }
    friend bool operator<(const DistinctPartition& a, const DistinctPartition& b) { return a.p_ < b.p_; }

private:
    Partition p_;
};

// A vector of rationals defined up to permutation (an S_n-orbit in the dual
// space); stored sorted descending so equality is multiset equality.
class CharacterVector {
public:
    CharacterVector() = default;
    explicit CharacterVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end(), [](const Rational& a, const Rational& b) { return b < a; });
    }

    const std::vector<Rational>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }

    friend bool operator==(const CharacterVector& a, const CharacterVector& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const CharacterVector& a, const CharacterVector& b) { return !(a == b); }

    Rational norm_squared() const {
        Rational s;
        for (const Rational& e : entries_) s += e * e;
        return s;
    }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < entries_.size(); ++i) {
            if (i) s += ",";
            s += entries_[i].to_string();
        }
        return s + ")";
    }

private:
    std::vector<Rational> entries_;
};

// All partitions of n, each exactly once, in descending lexicographic order:
// (n) first, (1^n) last. This order refines dominance, so every matrix
// indexed by it is upper triangular with respect to the dominance order.
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_partitions: n must be positive");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline std::vector<DistinctPartition> distinct_partitions(int n) {
    std::vector<DistinctPartition> out;
    for (const Partition& p : enumerate_partitions(n))
        if (p.is_strict()) out.emplace_back(p);
    return out;
}

inline Partition transpose(const Partition& lambda) {
    if (lambda.length() == 0) return lambda;
    std::vector<int> cols(lambda.parts()[0], 0);
    for (int p : lambda.parts())
        for (int j = 0; j < p; ++j) ++cols[j];
    return Partition(std::move(cols));
}

// Principal hook lengths, read off the main diagonal; always strict.
inline DistinctPartition hook_partition(const Partition& lambda) {
    std::vector<int> hooks;
    Partition lt = transpose(lambda);
    for (int i = 0; i < lambda.length() && lambda.parts()[i] > i; ++i) {
        int arm = lambda.parts()[i] - i - 1;
        int leg = lt.parts()[i] - i - 1;
        hooks.push_back(arm + leg + 1);
    }
    return DistinctPartition(Partition(std::move(hooks)));
}

// mu <= lambda in dominance: every partial sum of lambda is >= that of mu.
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.n() != lambda.n())
        throw std::invalid_argument("dominance_leq: partitions of different n");
    int sl = 0, sm = 0;
    int len = std::max(mu.length(), lambda.length());
    for (int i = 0; i < len; ++i) {
        sl += lambda.part(i);
        sm += mu.part(i);
        if (sl < sm) return false;
    }
    return true;
}

// multiset {c + (j - i) : box (i,j) in lambda}, rows and columns 1-based
inline std::vector<Rational> c_content(const Partition& lambda, const Rational& c) {
    std::vector<Rational> out;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.parts()[i]; ++j) out.push_back(c + Rational(j - i));
    std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) { return b < a; });
    return out;
}

// h_lambda: the concatenation of the strings ((k-1)/2, (k-3)/2, ..., -(k-1)/2)
// over the parts k of lambda.
inline CharacterVector middle_element(const Partition& lambda) {
    std::vector<Rational> entries;
    for (int k : lambda.parts())
        for (int j = 0; j < k; ++j) entries.push_back(Rational(k - 1 - 2 * j, 2));
    return CharacterVector(std::move(entries));
}

// <h_lambda, h_lambda> = sum_i lambda_i (lambda_i^2 - 1) / 12
inline Rational casimir_scalar(const DistinctPartition& lambda) {
    Rational s;
    for (int k : lambda.parts()) s += Rational(static_cast<long long>(k) * k * k - k, 12);
    return s;
}

}  // namespace hecke
