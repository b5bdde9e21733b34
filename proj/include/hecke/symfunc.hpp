#pragma once

// Kostka-Foulkes polynomials K_{lambda,mu}(t) as charge generating functions
// over semistandard tableaux, the integer matrix g = K(-1)^{-1} that drives
// the tensor decompositions with the basic spin representation, and iterated
// Littlewood-Richardson products for restrictions of induced modules.
//
// Conventions fixed here (validated by the oracle acceptance battery):
//   - K(t) has rows lambda, columns mu, both in enumeration order, so K and g
//     are upper unitriangular with respect to dominance.
//   - charge: reading word is rows bottom-to-top, left-to-right; standard
//     subwords are extracted right-to-left cyclically; the index of r+1
//     increases when r+1 sits to the right of r.

#include <map>
#include <mutex>
#include <string>
#include <vector>
#include <stdexcept>

#include "hecke/partition.hpp"

namespace hecke {

class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPolynomial monomial(int degree, long long coeff = 1) {
        std::vector<long long> c(degree + 1, 0);
        c[degree] = coeff;
        return IntPolynomial(std::move(c));
    }

    const std::vector<long long>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    long long coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0;
    }

    long long operator()(long long t) const {
        long long v = 0;
        for (size_t k = c_.size(); k-- > 0;) v = v * t + c_[k];
        return v;
    }

    void add_monomial(int degree, long long coeff = 1) {
        if (degree >= static_cast<int>(c_.size())) c_.resize(degree + 1, 0);
        c_[degree] += coeff;
        trim();
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            std::string term;
            if (k == 0) term = std::to_string(c_[k]);
            else {
                if (c_[k] == -1) term = "-";
                else if (c_[k] != 1) term = std::to_string(c_[k]) + "*";
                term += (k == 1) ? "t" : "t^" + std::to_string(k);
            }
            if (!s.empty() && term[0] != '-') s += "+";
            s += term;
        }
        return s;
    }

private:
    std::vector<long long> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

using MultiplicityMap = std::map<Partition, long long>;

namespace detail {

// charge of a standard word (letters 1..L each exactly once, left to right)
inline int standard_charge(const std::vector<int>& word) {
    int L = static_cast<int>(word.size());
    std::vector<int> pos(L + 1, 0);
    for (int i = 0; i < L; ++i) pos[word[i]] = i;
    int index = 0, charge = 0;
    for (int r = 2; r <= L; ++r) {
        if (pos[r] > pos[r - 1]) ++index;
        charge += index;
    }
    return charge;
}

// Lascoux-Schutzenberger charge of a word with partition content
inline int charge(std::vector<int> word) {
    int total = 0;
    std::vector<bool> alive(word.size(), true);
    int remaining = static_cast<int>(word.size());
    while (remaining > 0) {
        int maxletter = 0;
        for (size_t i = 0; i < word.size(); ++i)
            if (alive[i]) maxletter = std::max(maxletter, word[i]);
        // collect positions of one standard subword, scanning right to left
        // cyclically: the first 1 from the right, then the first 2 left of it, ...
        int L = maxletter;
        std::vector<int> picked;
        int start = static_cast<int>(word.size()) - 1;
        for (int letter = 1; letter <= L; ++letter) {
            int found = -1;
            int i = start;
            for (size_t step = 0; step < word.size(); ++step) {
                if (i < 0) i = static_cast<int>(word.size()) - 1;
                if (alive[i] && word[i] == letter) { found = i; break; }
                --i;
            }
            if (found < 0) throw std::logic_error("charge: content is not a partition");
            picked.push_back(found);
            alive[found] = false;
            --remaining;
            start = found - 1;
        }
        std::sort(picked.begin(), picked.end());
        std::vector<int> sub;
        sub.reserve(picked.size());
        for (int p : picked) sub.push_back(word[p]);
        total += standard_charge(sub);
    }
    return total;
}

// Enumerate reading words of all SSYT of shape lambda and content mu.
// The visitor receives the reading word (rows bottom to top, left to right).
template <class F>
void for_each_ssyt(const Partition& lambda, const Partition& mu, F&& visit) {
    int rows = lambda.length();
    if (rows == 0) return;
    std::vector<std::vector<int>> tab(rows);
    for (int i = 0; i < rows; ++i) tab[i].assign(lambda.parts()[i], 0);
    std::vector<int> quota(mu.length() + 1, 0);
    for (int i = 0; i < mu.length(); ++i) quota[i + 1] = mu.parts()[i];

    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            std::vector<int> word;
            for (int i = rows - 1; i >= 0; --i)
                for (int v : tab[i]) word.push_back(v);
            visit(word);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= lambda.parts()[r]) { nr = r + 1; nc = 0; }
        int lo = 1;
        if (c > 0) lo = std::max(lo, tab[r][c - 1]);
        if (r > 0 && c < lambda.parts()[r - 1]) lo = std::max(lo, tab[r - 1][c] + 1);
        for (int v = lo; v <= mu.length(); ++v) {
            if (quota[v] == 0) continue;
            --quota[v];
            tab[r][c] = v;
            self(self, nr, nc);
            ++quota[v];
        }
    };
    rec(rec, 0, 0);
}

}  // namespace detail

// K_{lambda,mu}(t) = sum of t^{charge(T)} over SSYT of shape lambda, content mu
inline IntPolynomial kostka_foulkes(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw std::invalid_argument("kostka_foulkes: partitions of different n");
    IntPolynomial p;
    detail::for_each_ssyt(lambda, mu,
                          [&](const std::vector<int>& word) { p.add_monomial(detail::charge(word)); });
    return p;
}

// Integer matrix g = K(-1)^{-1}, indexed by enumerate_partitions(n).
class GMatrix {
public:
    explicit GMatrix(int n) : n_(n), order_(enumerate_partitions(n)) {
        int N = static_cast<int>(order_.size());
        for (int i = 0; i < N; ++i) index_[order_[i]] = i;
        // K(-1), upper unitriangular in this order
        std::vector<std::vector<long long>> K(N, std::vector<long long>(N, 0));
        for (int i = 0; i < N; ++i) {
            K[i][i] = 1;
            for (int j = i + 1; j < N; ++j) {
                if (!dominance_leq(order_[j], order_[i])) continue;
                K[i][j] = kostka_foulkes(order_[i], order_[j])(-1);
            }
        }
        kminus1_ = K;
        // invert by back substitution
        g_.assign(N, std::vector<long long>(N, 0));
        for (int i = N - 1; i >= 0; --i) {
            g_[i][i] = 1;
            for (int j = i + 1; j < N; ++j) {
                long long s = 0;
                for (int k = i + 1; k <= j; ++k) s += K[i][k] * g_[k][j];
                g_[i][j] = -s;
            }
        }
    }

    int n() const { return n_; }
    const std::vector<Partition>& order() const { return order_; }
    const std::vector<std::vector<long long>>& values() const { return g_; }
    const std::vector<std::vector<long long>>& kostka_at_minus1() const { return kminus1_; }

    long long entry(const Partition& lambda, const Partition& mu) const {
        return g_[index_of(lambda)][index_of(mu)];
    }

    int index_of(const Partition& p) const {
        auto it = index_.find(p);
        if (it == index_.end())
            throw std::invalid_argument("GMatrix: not a partition of " + std::to_string(n_));
        return it->second;
    }

private:
    int n_;
    std::vector<Partition> order_;
    std::map<Partition, int> index_;
    std::vector<std::vector<long long>> g_, kminus1_;
};

// process-wide cache; GMatrix values are immutable once built
inline const GMatrix& g_matrix(int n) {
    static std::map<int, GMatrix> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, GMatrix(n)).first;
    return it->second;
}

inline long long g_entry(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n()) throw std::invalid_argument("g_entry: size mismatch");
    return g_matrix(lambda.n()).entry(lambda, mu);
}

namespace detail {

// Littlewood-Richardson coefficient c^{nu}_{mu,sigma}: skew semistandard
// fillings of nu/mu with content sigma whose reverse reading word is a
// lattice word. Cells are filled rows top to bottom, right to left, which is
// exactly reverse reading order, so the lattice condition is checked as a
// running prefix property.
inline long long lr_coefficient(const Partition& nu, const Partition& mu, const Partition& sigma) {
    if (nu.n() != mu.n() + sigma.n()) return 0;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.part(i) > nu.part(i)) return 0;
    int rows = nu.length();
    if (rows == 0) return 1;  // empty skew shape, empty content
    int L = sigma.length();
    std::vector<int> quota(L + 1, 0);
    for (int i = 0; i < L; ++i) quota[i + 1] = sigma.parts()[i];
    std::vector<std::vector<int>> fill(rows);
    for (int r = 0; r < rows; ++r) fill[r].assign(nu.part(r), 0);
    std::vector<int> prefix(L + 1, 0);

    long long count = 0;
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == rows) { ++count; return; }
        if (c < mu.part(r)) {
            self(self, r + 1, nu.part(r + 1) - 1);
            return;
        }
        for (int v = 1; v <= L; ++v) {
            if (quota[v] == 0) continue;
            // lattice property of the reverse reading word
            if (v > 1 && prefix[v] + 1 > prefix[v - 1]) continue;
            // row weakly increasing (right neighbor already placed)
            if (c + 1 < nu.part(r) && fill[r][c + 1] < v) continue;
            // column strictly increasing (cell above is a skew cell)
            if (r > 0 && c >= mu.part(r - 1) && fill[r - 1][c] >= v) continue;
            --quota[v];
            ++prefix[v];
            fill[r][c] = v;
            self(self, r, c - 1);
            ++quota[v];
            --prefix[v];
        }
    };
    rec(rec, 0, nu.part(0) - 1);
    return count;
}

}  // namespace detail

// Multiplicities of each sigma_mu in the induction product of the sigma_{shape_i}
inline MultiplicityMap lr_induce(const std::vector<Partition>& shapes) {
    if (shapes.empty()) throw std::invalid_argument("lr_induce: empty factor list");
    MultiplicityMap acc;
    acc[shapes[0]] = 1;
    for (size_t f = 1; f < shapes.size(); ++f) {
        const Partition& s = shapes[f];
        MultiplicityMap next;
        for (const auto& [mu, mult] : acc) {
            for (const Partition& nu : enumerate_partitions(mu.n() + s.n())) {
                long long c = detail::lr_coefficient(nu, mu, s);
                if (c) next[nu] += mult * c;
            }
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace hecke
