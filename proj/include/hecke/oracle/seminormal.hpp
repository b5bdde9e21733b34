#pragma once

// Young's seminormal form over the rationals, with one twist: the generator
// matrices are relabeled through the diagram flip s_i -> s_{n-i}, i.e. the
// returned B_i is the classical seminormal matrix A_{n-i}. The flip is inner
// (conjugation by the longest element), so the representation is the same
// irreducible, but in this basis the reversed Jucys-Murphy sums
// s_{k,k+1} + s_{k,k+2} + ... + s_{k,n} act diagonally with box-content
// eigenvalues. Those sums are exactly the images of the polynomial
// generators under the evaluation homomorphism, so the pulled-back module
// matrices come out diagonal in the polynomial part for free.

#include <vector>
#include <stdexcept>

#include "hecke/matrix.hpp"
#include "hecke/partition.hpp"
#include "hecke/rational.hpp"

namespace hecke {

// A standard tableau as the box position of each label: boxes[k] = (row, col)
// of label k+1, 0-based rows and columns.
using TableauPositions = std::vector<std::pair<int, int>>;

// all standard Young tableaux of shape lambda, deterministic order (labels
// added row-major among the addable corners, depth first)
inline std::vector<TableauPositions> standard_tableaux(const Partition& lambda) {
    int n = lambda.n();
    std::vector<TableauPositions> out;
    std::vector<int> filled(lambda.length(), 0);  // boxes filled per row
    TableauPositions cur;
    auto rec = [&](auto&& self, int placed) -> void {
        if (placed == n) {
            out.push_back(cur);
            return;
        }
        for (int r = 0; r < lambda.length(); ++r) {
            if (filled[r] >= lambda.parts()[r]) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;  // column would break
            cur.emplace_back(r, filled[r]);
            ++filled[r];
            self(self, placed + 1);
            --filled[r];
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline int tableau_content(const TableauPositions& t, int label /*1-based*/) {
    auto [r, c] = t[label - 1];
    return c - r;
}

namespace detail {

// classical seminormal matrix of the adjacent transposition s_k (1-based k)
inline Matrix<Rational> seminormal_classical(const std::vector<TableauPositions>& tabs, int k) {
    int N = static_cast<int>(tabs.size());
    Matrix<Rational> A(N, N);
    // index lookup by positions
    auto find_tab = [&](const TableauPositions& t) {
        for (int i = 0; i < N; ++i)
            if (tabs[i] == t) return i;
        throw std::logic_error("seminormal: swapped tableau not found");
    };
    for (int i = 0; i < N; ++i) {
        const TableauPositions& T = tabs[i];
        int d = tableau_content(T, k + 1) - tableau_content(T, k);
        if (d == 1) {  // same row
            A(i, i) = Rational(1);
            continue;
        }
        if (d == -1) {  // same column
            A(i, i) = Rational(-1);
            continue;
        }
        if (d > 0) {  // handle each pair once, from the d > 0 side
            TableauPositions S = T;
            std::swap(S[k - 1], S[k]);
            int j = find_tab(S);
            Rational inv_d(1, d);
            A(i, i) = inv_d;
            A(j, i) = Rational(1);                        // coefficient of v_S in s_k v_T
            A(j, j) = -inv_d;
            A(i, j) = Rational(1) - inv_d * inv_d;        // coefficient of v_T in s_k v_S
        }
    }
    return A;
}

}  // namespace detail

// Matrices of the adjacent transpositions s_1, ..., s_{n-1} (returned in that
// order, 0-based vector index i holding s_{i+1}) for the irreducible indexed
// by lambda, in the flipped seminormal basis described above.
inline std::vector<Matrix<Rational>> young_seminormal(const Partition& lambda) {
    int n = lambda.n();
    std::vector<TableauPositions> tabs = standard_tableaux(lambda);
    std::vector<Matrix<Rational>> gens;
    for (int i = 1; i <= n - 1; ++i)
        gens.push_back(detail::seminormal_classical(tabs, n - i));
    return gens;
}

}  // namespace hecke
