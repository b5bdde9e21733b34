#pragma once

// The Dirac operator and its exact verification.
//
//   omega~_i = eps_i - (1/2) sum_{beta>0} (beta, eps_i) s_beta
//   D        = sum_i omega~_i (x) gamma_i            on X (x) S
//   D^2      = -<nu,nu> + (1/4) * Delta(Omega~)
//
// with Delta(Omega~) = -2 sum over ordered pairs of positive roots
// (alpha, beta), s_alpha(beta) < 0, of pi(s_alpha s_beta) (x) f_alpha f_beta
// (the central sign of the double cover folded in, |alpha^|.|beta^| = 2 for
// all type A roots). All matrices are exact over Q(zeta_8); the kernel of D
// is a certified null space and its double-cover structure is read off by
// pairing traces against the characters of sigma_mu (x) S.

#include <optional>
#include <string>
#include <vector>

#include "hecke/matrix.hpp"
#include "hecke/snchar.hpp"
#include "hecke/spin.hpp"
#include "hecke/cohomology.hpp"
#include "hecke/oracle/clifford.hpp"
#include "hecke/oracle/hmodule.hpp"

namespace hecke {

// omega~ of the basis coordinate i (0-based)
inline Matrix<Zeta8> omega_tilde(const HModuleRep& X, int i) {
    Matrix<Zeta8> out = X.eps[i];
    const Zeta8 half(Rational(1, 2));
    for (int k = 0; k < X.n; ++k) {
        if (k == i) continue;
        // root e_i - e_k is positive iff i < k; (beta, eps_i) = +1 there,
        // and -1 for the positive root e_k - e_i when k < i
        const Matrix<Zeta8>& t = X.transposition_matrix(std::min(i, k), std::max(i, k));
        out += (i < k ? -half : half) * t;
    }
    return out;
}

// omega~ of an arbitrary vector sum c_i e_i
inline Matrix<Zeta8> omega_tilde(const HModuleRep& X, const std::vector<Rational>& coeffs) {
    Matrix<Zeta8> out(X.dim(), X.dim());
    for (int i = 0; i < X.n; ++i)
        if (!coeffs[i].is_zero()) out += Zeta8(coeffs[i]) * X.eps[i];
    const Zeta8 half(Rational(1, 2));
    for (int j = 0; j < X.n; ++j)
        for (int k = j + 1; k < X.n; ++k) {
            Rational pairing = coeffs[j] - coeffs[k];
            if (pairing.is_zero()) continue;
            out += (-half * Zeta8(pairing)) * X.transposition_matrix(j, k);
        }
    return out;
}

inline Matrix<Zeta8> dirac_operator(const HModuleRep& X, const CliffordRep& S) {
    if (X.n != S.n()) throw std::invalid_argument("dirac_operator: size mismatch");
    Matrix<Zeta8> D(X.dim() * S.dim(), X.dim() * S.dim());
    for (int i = 0; i < X.n; ++i)
        Matrix<Zeta8>::kronecker_accumulate(D, omega_tilde(X, i), S.gamma(i), Zeta8(1));
    return D;
}

// Delta(Omega~) on X (x) S
inline Matrix<Zeta8> casimir_wtilde(const HModuleRep& X, const CliffordRep& S) {
    const int n = X.n;
    Matrix<Zeta8> out(X.dim() * S.dim(), X.dim() * S.dim());
    for (int aj = 0; aj < n; ++aj)
        for (int ak = aj + 1; ak < n; ++ak) {
            Perm salpha = perm_transposition(n, aj, ak);
            for (int bj = 0; bj < n; ++bj)
                for (int bk = bj + 1; bk < n; ++bk) {
                    // s_alpha(e_bj - e_bk) < 0 iff salpha(bj) > salpha(bk)
                    if (salpha[bj] < salpha[bk]) continue;
                    Perm prod = perm_compose(salpha, perm_transposition(n, bj, bk));
                    Matrix<Zeta8> spin_part = S.f_root(aj, ak) * S.f_root(bj, bk);
                    Matrix<Zeta8>::kronecker_accumulate(out, X.perm_matrix(prod), spin_part,
                                                        Zeta8(-2));
                }
        }
    return out;
}

struct MatrixCounterexample {
    int row = 0, col = 0;
    std::string lhs, rhs;
};

// D^2 = -<nu,nu> I + (1/4) Delta(Omega~), exact equality
inline std::optional<MatrixCounterexample> verify_d_squared(const HModuleRep& X,
                                                            const CliffordRep& S) {
    Matrix<Zeta8> D = dirac_operator(X, S);
    Matrix<Zeta8> lhs = D * D;
    Matrix<Zeta8> rhs = Zeta8(Rational(1, 4)) * casimir_wtilde(X, S);
    Zeta8 nn(X.norm_squared());
    for (int i = 0; i < rhs.rows(); ++i) rhs(i, i) -= nn;
    if (lhs == rhs) return std::nullopt;
    for (int i = 0; i < lhs.rows(); ++i)
        for (int j = 0; j < lhs.cols(); ++j)
            if (lhs(i, j) != rhs(i, j))
                return MatrixCounterexample{i, j, lhs(i, j).to_string(), rhs(i, j).to_string()};
    return std::nullopt;
}

// Delta(s~_alpha) D = -D Delta(s~_alpha) for every simple reflection
inline std::optional<MatrixCounterexample> sign_commutation_check(const HModuleRep& X,
                                                                  const CliffordRep& S) {
    Matrix<Zeta8> D = dirac_operator(X, S);
    for (int i = 0; i + 1 < X.n; ++i) {
        Matrix<Zeta8> delta = Matrix<Zeta8>::kronecker(X.simple[i], S.f_simple(i));
        Matrix<Zeta8> lhs = delta * D;
        Matrix<Zeta8> rhs = D * delta;
        for (int a = 0; a < lhs.rows(); ++a)
            for (int b = 0; b < lhs.cols(); ++b)
                if (lhs(a, b) != -rhs(a, b))
                    return MatrixCounterexample{a, b, lhs(a, b).to_string(),
                                                ("-(" + rhs(a, b).to_string() + ")")};
    }
    return std::nullopt;
}

// Exact kernel of D together with the trace pairings against the characters
// of sigma_mu (x) S^eps, for every mu of n. Pairings are accumulated over one
// fixed lift per Weyl group element; genuine-even products make the choice
// immaterial.
struct KernelStructure {
    int dim = 0;
    std::vector<Partition> mu_order;
    std::vector<long long> pairings;
};

inline KernelStructure kernel_structure(const HModuleRep& X, const CliffordRep& S,
                                        bool with_pairings = true) {
    KernelStructure out;
    Matrix<Zeta8> D = dirac_operator(X, S);
    if (!with_pairings) {
        out.dim = D.cols() - D.rank();
        return out;
    }
    std::vector<int> free_rows;
    Matrix<Zeta8> K = D.kernel_basis(&free_rows);
    out.dim = K.cols();

    out.mu_order = enumerate_partitions(X.n);
    const int nmu = static_cast<int>(out.mu_order.size());
    const int k = K.cols();
    const int ds = S.dim();
    std::vector<Zeta8> acc(nmu);

    std::vector<Perm> group = all_permutations(X.n);
    long long order = 1;
    for (int i = 2; i <= X.n; ++i) order *= i;

    for (const Perm& w : group) {
        // trace of Delta(w~) restricted to ker D: rows of Delta(w~) K at the
        // free coordinates reproduce the coefficient matrix, because K is the
        // identity on those rows
        Zeta8 tr;
        if (k > 0) {
            const Matrix<Zeta8>& pw = X.perm_matrix(w);
            const Matrix<Zeta8>& tw = S.tau(w);
            Matrix<Zeta8> twt = tw.transpose();
            for (int col = 0; col < k; ++col) {
                int target = free_rows[col];
                int tx = target / ds, ts = target % ds;
                // entry (tx, ts) of pw * M * tw^T where M is column col of K
                // reshaped to dim(X) x dim(S)
                Zeta8 entry;
                for (int x = 0; x < X.dim(); ++x) {
                    if (pw(tx, x).is_zero()) continue;
                    Zeta8 inner;
                    for (int s = 0; s < ds; ++s) {
                        const Zeta8& kv = K(x * ds + s, col);
                        if (kv.is_zero()) continue;
                        inner += kv * twt(s, ts);
                    }
                    if (!inner.is_zero()) entry += pw(tx, x) * inner;
                }
                tr += entry;
            }
        }
        if (tr.is_zero()) continue;
        Partition rho = cycle_type(w);
        Zeta8 tau_tr = S.tau_trace(w);
        for (int mi = 0; mi < nmu; ++mi) {
            long long chi = sn_character(out.mu_order[mi], rho);
            if (chi == 0) continue;
            acc[mi] += tr * (Zeta8(chi) * tau_tr).conj();
        }
    }

    for (int mi = 0; mi < nmu; ++mi) {
        Zeta8 val = acc[mi];
        Rational r = val.to_rational() / Rational(order);
        if (!r.is_integer() || r.sgn() < 0)
            throw std::logic_error("kernel_structure: pairing not a nonnegative integer: " +
                                   r.to_string());
        out.pairings.push_back(r.to_i64());
    }
    return out;
}

// pairing vector a SpinMultiset predicts: sum of m(type) * [type : sigma_mu (x) S]
inline std::vector<long long> predicted_pairings(int n, const SpinMultiset& hd) {
    std::vector<Partition> order = enumerate_partitions(n);
    std::vector<long long> out(order.size(), 0);
    for (const auto& [type, mult] : hd.entries())
        for (size_t mi = 0; mi < order.size(); ++mi)
            out[mi] += mult * spin_tensor_with_spin_module(type.lambda, order[mi]);
    return out;
}

// Recover symmetrized class totals from a pairing vector: process strict
// partitions in enumeration order (all dominators first) and peel.
inline std::map<DistinctPartition, long long> identify_from_pairings(
    int n, const std::vector<long long>& pairings) {
    std::vector<Partition> order = enumerate_partitions(n);
    std::map<Partition, int> index;
    for (size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);
    std::map<DistinctPartition, long long> totals;
    std::vector<std::pair<DistinctPartition, long long>> found;
    for (const DistinctPartition& lam : distinct_partitions(n)) {
        long long value = pairings[index.at(lam.partition())];
        for (const auto& [prev, m] : found)
            value -= m * spin_tensor_with_spin_module(prev, lam.partition());
        long long diag = spin_tensor_with_spin_module(lam, lam.partition());
        if (value % diag != 0 || value < 0)
            throw std::logic_error("identify_from_pairings: inconsistent pairing vector");
        if (value / diag != 0) {
            found.emplace_back(lam, value / diag);
            totals[lam] = value / diag;
        } else {
            found.emplace_back(lam, 0);
        }
    }
    // consistency over every mu
    for (size_t mi = 0; mi < order.size(); ++mi) {
        long long s = 0;
        for (const auto& [lam, m] : found)
            s += m * spin_tensor_with_spin_module(lam, order[mi]);
        if (s != pairings[mi])
            throw std::logic_error("identify_from_pairings: kernel is not a genuine sum");
    }
    return totals;
}

// Both sides of the induction identity as pairing vectors over mu: the
// induced module paired inside W against sigma_mu (x) curly-S, versus the
// parabolic factor paired inside W_M with the restricted spin module
// (a dimension ratio per the restriction rules).
struct InductionCheck {
    std::vector<Partition> mu_order;
    std::vector<Rational> lhs, rhs;
    bool ok = true;
};

inline InductionCheck induction_multiplicity_check(const std::vector<SpehFactor>& factors) {
    std::vector<HModuleRep> reps;
    std::vector<int> comp;
    for (const SpehFactor& f : factors) {
        reps.push_back(speh_matrices(f));
        comp.push_back(f.size());
    }
    HModuleRep big = induce_module(reps);
    const int n = big.n;
    BlockStructure blocks(comp);

    std::vector<CliffordRep> spins;
    for (int v : spin_variants(n)) spins.emplace_back(n, v);

    InductionCheck out;
    out.mu_order = enumerate_partitions(n);

    // curly-S character at the fixed lift of w
    auto script_s = [&](const Perm& w) {
        Zeta8 t;
        for (const CliffordRep& s : spins) t += s.tau_trace(w);
        return t;
    };

    long long order = 1;
    for (int i = 2; i <= n; ++i) order *= i;
    std::vector<Perm> group = all_permutations(n);

    // dim curly-S / dim curly-S_M = 2^(ceil(n/2) - ceil((n-r)/2)), the restriction rule
    int vm = n - static_cast<int>(factors.size());
    long long ratio = 1LL << ((n + 1) / 2 - (vm + 1) / 2);

    for (const Partition& mu : out.mu_order) {
        Zeta8 lhs_acc;
        for (const Perm& w : group) {
            Zeta8 chi_pi = big.perm_matrix(w).trace();
            if (chi_pi.is_zero()) continue;
            Zeta8 s = script_s(w);
            long long chim = sn_character(mu, cycle_type(w));
            if (chim == 0 || s.is_zero()) continue;
            lhs_acc += chi_pi * s * (Zeta8(chim) * s).conj();
        }
        out.lhs.push_back((lhs_acc * Zeta8(Rational(1, order))).to_rational());

        // W_M sum: products of local permutations
        Zeta8 rhs_acc;
        long long order_m = 1;
        for (int sz : comp)
            for (int i = 2; i <= sz; ++i) order_m *= i;
        std::vector<std::vector<Perm>> local;
        for (int sz : comp) local.push_back(all_permutations(sz));
        std::vector<size_t> idx(comp.size(), 0);
        bool done_all = false;
        while (!done_all) {
            Perm x = perm_identity(n);
            for (size_t b = 0; b < comp.size(); ++b)
                for (int kk = 0; kk < comp[b]; ++kk)
                    x[blocks.offsets[b] + kk] = blocks.offsets[b] + local[b][idx[b]][kk];
            Zeta8 chi_m(1);
            for (size_t b = 0; b < comp.size(); ++b)
                chi_m *= reps[b].perm_matrix(local[b][idx[b]]).trace();
            if (!chi_m.is_zero()) {
                Zeta8 s = script_s(x);
                long long chim = sn_character(mu, cycle_type(x));
                if (chim != 0 && !s.is_zero()) {
                    Zeta8 s_m = s * Zeta8(Rational(1, ratio));  // restricted spin character
                    rhs_acc += chi_m * s_m * (Zeta8(chim) * s).conj();
                }
            }
            // advance the product index
            size_t b = 0;
            while (b < idx.size()) {
                if (++idx[b] < local[b].size()) break;
                idx[b] = 0;
                ++b;
            }
            done_all = b == idx.size();
        }
        Rational rhs_val =
            (rhs_acc.to_rational() / Rational(order_m)) * Rational(ratio);
        out.rhs.push_back(rhs_val);
        if (out.lhs.back() != out.rhs.back()) out.ok = false;
    }
    return out;
}

}  // namespace hecke
