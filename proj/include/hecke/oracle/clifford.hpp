#pragma once

// Gamma matrices over Q(zeta_8) for the Clifford algebra of R^n with the
// negative-definite relation gg' + g'g = -2<g,g'>. The standard tensor-product
// construction on (C^2)^(x m), m = floor(n/2): Euclidean generators
//   e_{2j-1} = sz^(j-1) (x) sx (x) 1...,  e_{2j} = sz^(j-1) (x) sy (x) 1...,
// and for odd n the last generator is +/- sz^(x m) -- the sign is the variant
// and distinguishes the two inequivalent simple modules. Our gammas are
// i * e_k, so each squares to -1.
//
// The lift of a Weyl group element into the Pin group is the product of the
// normalized root vectors f = (gamma_j - gamma_k)/sqrt(2) along the fixed
// reduced word; two lifts of the same element differ by the central sign, so
// every genuine-even sum is independent of the choice.

#include <map>
#include <vector>
#include <stdexcept>

#include "hecke/matrix.hpp"
#include "hecke/cyclotomic.hpp"
#include "hecke/oracle/permutation.hpp"

namespace hecke {

class CliffordRep {
public:
    CliffordRep(int n, int variant) : n_(n), variant_(variant) {
        if (n < 1) throw std::invalid_argument("CliffordRep: n must be positive");
        if (variant != 1 && variant != -1)
            throw std::invalid_argument("CliffordRep: variant must be +1 or -1");
        int m = n / 2;
        int dim = 1 << m;
        using M = Matrix<Zeta8>;
        M sx(2, 2), sy(2, 2), sz(2, 2), one = M::identity(2);
        sx(0, 1) = Zeta8(1);
        sx(1, 0) = Zeta8(1);
        sy(0, 1) = -Zeta8::i();
        sy(1, 0) = Zeta8::i();
        sz(0, 0) = Zeta8(1);
        sz(1, 1) = Zeta8(-1);

        auto chain = [&](int slot, const M& mid) {
            M acc = M::identity(1);
            for (int j = 0; j < m; ++j) {
                const M& factor = j < slot ? sz : (j == slot ? mid : one);
                acc = M::kronecker(acc, factor);
            }
            return acc;
        };

        for (int k = 1; k <= n; ++k) {
            M euclid(dim, dim);
            if (k == n && n % 2 == 1) {
                euclid = chain(m, sz);  // sz^(x m)
                if (variant_ < 0) euclid = Zeta8(-1) * euclid;
            } else {
                int slot = (k - 1) / 2;
                euclid = chain(slot, k % 2 == 1 ? sx : sy);
            }
            gamma_.push_back(Zeta8::i() * euclid);
        }
    }

    int n() const { return n_; }
    int variant() const { return variant_; }
    int dim() const { return 1 << (n_ / 2); }
    const Matrix<Zeta8>& gamma(int k) const { return gamma_[k]; }  // 0-based

    // image of a vector of V under the Clifford embedding
    Matrix<Zeta8> gamma_of(const std::vector<Rational>& coeffs) const {
        Matrix<Zeta8> out(dim(), dim());
        for (int k = 0; k < n_; ++k)
            if (!coeffs[k].is_zero()) out += Zeta8(coeffs[k]) * gamma_[k];
        return out;
    }

    // f_beta = beta/|beta| for the root e_j - e_k (0-based j < k), norm sqrt(2)
    Matrix<Zeta8> f_root(int j, int k) const {
        return Zeta8::inv_sqrt2() * (gamma_[j] - gamma_[k]);
    }

    Matrix<Zeta8> f_simple(int i) const { return f_root(i, i + 1); }

    // lift of w along the fixed reduced word; cached
    const Matrix<Zeta8>& tau(const Perm& w) const {
        auto it = tau_cache_.find(w);
        if (it != tau_cache_.end()) return it->second;
        Matrix<Zeta8> m = Matrix<Zeta8>::identity(dim());
        for (int i : reduced_word(w)) m = m * f_simple(i);
        return tau_cache_.emplace(w, std::move(m)).first->second;
    }

    Zeta8 tau_trace(const Perm& w) const { return tau(w).trace(); }

private:
    int n_, variant_;
    std::vector<Matrix<Zeta8>> gamma_;
    mutable std::map<Perm, Matrix<Zeta8>> tau_cache_;
};

inline CliffordRep build_gamma(int n, int variant = 1) { return CliffordRep(n, variant); }

// A lift of a reflection into the Pin group: the normalized root vector as a
// Clifford matrix together with its image permutation downstairs.
struct PinElement {
    Matrix<Zeta8> element;
    Perm image;
};

inline PinElement pin_reflection(const CliffordRep& S, int j, int k) {
    return {S.f_root(j, k), perm_transposition(S.n(), j, k)};
}

// covering property: eps(f) gamma_v f^{-1} = gamma_{s(v)}; for an odd unit
// vector f with f^2 = -1 both twists are -f, so the check is f gamma_v f
inline bool pin_covers(const CliffordRep& S, const PinElement& p) {
    Matrix<Zeta8> square = p.element * p.element;
    if (square != Zeta8(-1) * Matrix<Zeta8>::identity(S.dim())) return false;
    for (int v = 0; v < S.n(); ++v)
        if (p.element * S.gamma(v) * p.element != S.gamma(p.image[v])) return false;
    return true;
}

// the spin modules entering the uniform statements: both variants when n is
// odd, just the unique one when n is even
inline std::vector<int> spin_variants(int n) {
    return n % 2 == 1 ? std::vector<int>{1, -1} : std::vector<int>{1};
}

}  // namespace hecke
