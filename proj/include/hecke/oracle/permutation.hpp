#pragma once

// Permutations in one-line notation (0-based), reduced words, cycle types,
// and minimal-length coset representatives for parabolic subgroups of S_n.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>
#include <stdexcept>

#include "hecke/partition.hpp"

namespace hecke {

using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// (a o b)(x) = a(b(x))
inline Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

inline Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

// transposition of values/positions i and j (0-based)
inline Perm perm_transposition(int n, int i, int j) {
    Perm p = perm_identity(n);
    std::swap(p[i], p[j]);
    return p;
}

inline int perm_length(const Perm& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}

inline bool perm_is_identity(const Perm& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

inline Partition cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> cycles;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        cycles.push_back(len);
    }
    std::sort(cycles.rbegin(), cycles.rend());
    return Partition(std::move(cycles));
}

inline int perm_sign(const Perm& p) { return perm_length(p) % 2 ? -1 : 1; }

// all n! permutations in lexicographic one-line order
inline std::vector<Perm> all_permutations(int n) {
    std::vector<Perm> out;
    Perm p = perm_identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// A fixed reduced word: repeatedly strip the smallest right descent, so
// w = s_{a_1} ... s_{a_k} with adjacent transpositions s_a = (a, a+1),
// 0-based. Every caller that needs a deterministic lift of w into the
// double cover uses exactly this word.
inline std::vector<int> reduced_word(Perm w) {
    std::vector<int> rev;
    while (!perm_is_identity(w)) {
        int i = -1;
        for (size_t k = 0; k + 1 < w.size(); ++k)
            if (w[k] > w[k + 1]) { i = static_cast<int>(k); break; }
        if (i < 0) throw std::logic_error("reduced_word: no descent in non-identity");
        rev.push_back(i);
        std::swap(w[i], w[i + 1]);  // w <- w o s_i
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

// Parabolic block structure for a composition of n.
struct BlockStructure {
    std::vector<int> sizes;
    std::vector<int> offsets;  // offsets[b] = first position of block b
    std::vector<int> block_of; // block index per position

    explicit BlockStructure(const std::vector<int>& comp) : sizes(comp) {
        int o = 0;
        for (int s : comp) {
            offsets.push_back(o);
            for (int k = 0; k < s; ++k) block_of.push_back(static_cast<int>(offsets.size()) - 1);
            o += s;
        }
    }

    int n() const { return static_cast<int>(block_of.size()); }
    int blocks() const { return static_cast<int>(sizes.size()); }

    bool preserves_blocks(const Perm& p) const {
        for (int i = 0; i < n(); ++i)
            if (block_of[p[i]] != block_of[i]) return false;
        return true;
    }

    // w is the minimal-length representative of wW_M iff it is increasing on
    // every block of positions
    bool is_min_coset_rep(const Perm& w) const {
        for (int b = 0; b < blocks(); ++b)
            for (int k = 1; k < sizes[b]; ++k)
                if (w[offsets[b] + k - 1] > w[offsets[b] + k]) return false;
        return true;
    }

    // decompose w = u o x with u minimal and x block-preserving
    void coset_decompose(const Perm& w, Perm& u, Perm& x) const {
        u = w;
        for (int b = 0; b < blocks(); ++b)
            std::sort(u.begin() + offsets[b], u.begin() + offsets[b] + sizes[b]);
        x = perm_compose(perm_inverse(u), w);
    }

    // local permutation of block b induced by a block-preserving x
    Perm local_part(const Perm& x, int b) const {
        Perm loc(sizes[b]);
        for (int k = 0; k < sizes[b]; ++k) loc[k] = x[offsets[b] + k] - offsets[b];
        return loc;
    }
};

// Minimal-length representatives of W/W_M, breadth-first over left
// multiplication by simple reflections, each layer sorted; deterministic.
inline std::vector<Perm> min_coset_reps(const BlockStructure& blocks) {
    int n = blocks.n();
    std::set<Perm> seen;
    std::vector<Perm> out;
    std::vector<Perm> layer{perm_identity(n)};
    seen.insert(layer[0]);
    while (!layer.empty()) {
        for (const Perm& u : layer) out.push_back(u);
        std::set<Perm> next;
        for (const Perm& u : layer) {
            for (int i = 0; i + 1 < n; ++i) {
                Perm v = u;
                // left multiply by s_i: swap values i, i+1
                Perm vi = perm_inverse(u);
                std::swap(v[vi[i]], v[vi[i + 1]]);
                if (perm_length(v) != perm_length(u) + 1) continue;
                if (!blocks.is_min_coset_rep(v)) continue;
                if (seen.insert(v).second) next.insert(v);
            }
        }
        layer.assign(next.begin(), next.end());
    }
    return out;
}

}  // namespace hecke
