#pragma once

// Explicit matrices for Hecke algebra modules, everything over Q(zeta_8).
//
// A module is its generator matrices: the adjacent transpositions s_1..s_{n-1}
// and the polynomial generators eps_1..eps_n. Speh factors pull the seminormal
// box representation back through the evaluation homomorphism
//   eps_k -> s_{k,k+1} + ... + s_{k,n} + c,   c = (d - m)/2,
// and the construction checks the defining cross relations as matrices.
// Induced modules live on coset-representative tensors; the eps action is
// computed by a normal-form rewriting engine that pushes eps_i through a
// reduced word of the coset representative with the cross relation
//   eps_i s = s eps_{s(i)} - <alpha_s, eps_{s(i)}>,
// leaving one polynomial monomial at the identity coset plus group terms.

#include <map>
#include <memory>
#include <vector>
#include <stdexcept>

#include "hecke/matrix.hpp"
#include "hecke/cyclotomic.hpp"
#include "hecke/unitary.hpp"
#include "hecke/oracle/permutation.hpp"
#include "hecke/oracle/seminormal.hpp"

namespace hecke {

struct HModuleRep {
    int n = 0;
    int dimension = 0;
    std::vector<Matrix<Zeta8>> simple;  // simple[i] is s_{i+1,i+2}, 0-based i < n-1
    std::vector<Matrix<Zeta8>> eps;     // eps[i] is eps_{i+1}, 0-based i < n
    CentralCharacter character;         // always real in the oracle

    int dim() const { return dimension; }

    Rational norm_squared() const {
        auto [re, im] = character.norm_squared();
        if (!im.is_zero()) throw std::logic_error("HModuleRep: complex central character");
        return re;
    }

    // matrix of an arbitrary permutation, via the fixed reduced word; cached
    const Matrix<Zeta8>& perm_matrix(const Perm& w) const {
        auto it = perm_cache_.find(w);
        if (it != perm_cache_.end()) return it->second;
        Matrix<Zeta8> m = Matrix<Zeta8>::identity(dim());
        for (int i : reduced_word(w)) m = m * simple[i];
        return perm_cache_.emplace(w, std::move(m)).first->second;
    }

    const Matrix<Zeta8>& transposition_matrix(int j, int k) const {  // 0-based j < k
        return perm_matrix(perm_transposition(n, j, k));
    }

private:
    mutable std::map<Perm, Matrix<Zeta8>> perm_cache_;
};

namespace detail {

inline Matrix<Zeta8> to_zeta8(const Matrix<Rational>& a) {
    Matrix<Zeta8> r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) r(i, j) = Zeta8(a(i, j));
    return r;
}

// defining relations, checked as matrices; returns a diagnostic or empty
inline std::string relation_violation(const HModuleRep& X) {
    using M = Matrix<Zeta8>;
    const int n = X.n;
    M id = M::identity(X.dim());
    for (int i = 0; i + 1 < n; ++i) {
        if (X.simple[i] * X.simple[i] != id) return "s_" + std::to_string(i + 1) + "^2 != 1";
        if (i + 2 < n) {
            const M lhs = X.simple[i] * X.simple[i + 1] * X.simple[i];
            const M rhs = X.simple[i + 1] * X.simple[i] * X.simple[i + 1];
            if (lhs != rhs) return "braid relation failed at " + std::to_string(i + 1);
        }
        for (int j = i + 2; j + 1 < n; ++j)
            if (X.simple[i] * X.simple[j] != X.simple[j] * X.simple[i])
                return "commuting generators failed";
    }
    for (int i = 0; i + 1 < n; ++i) {
        if (X.simple[i] * X.eps[i] - X.eps[i + 1] * X.simple[i] != id)
            return "cross relation failed at s_" + std::to_string(i + 1);
        for (int k = 0; k < n; ++k) {
            if (k == i || k == i + 1) continue;
            if (X.simple[i] * X.eps[k] != X.eps[k] * X.simple[i])
                return "eps commutation failed at (" + std::to_string(i + 1) + "," +
                       std::to_string(k + 1) + ")";
        }
    }
    return "";
}

}  // namespace detail

// Speh factor as matrices: the box representation with the evaluation
// homomorphism at c = (d-m)/2. Relation failure here would mean the
// seminormal construction is broken, so it is fatal.
inline HModuleRep speh_matrices(const SpehFactor& f) {
    if (!f.y.is_zero())
        throw std::invalid_argument("speh_matrices: imaginary twists are not represented");
    HModuleRep X;
    X.n = f.size();
    X.dimension = static_cast<int>(standard_tableaux(f.box()).size());
    std::vector<Matrix<Rational>> gens = young_seminormal(f.box());
    for (const auto& g : gens) X.simple.push_back(detail::to_zeta8(g));
    const Rational c(f.d - f.m, 2);
    const int dim = X.dimension;
    for (int k = 0; k < X.n; ++k) {
        Matrix<Zeta8> e(dim, dim);
        for (int i = 0; i < dim; ++i) e(i, i) = Zeta8(c);
        for (int j = k + 1; j < X.n; ++j) e += X.transposition_matrix(k, j);
        X.eps.push_back(std::move(e));
    }
    X.character = speh_central_character(f);
    std::string bad = detail::relation_violation(X);
    if (!bad.empty()) throw std::logic_error("speh_matrices: " + bad);
    return X;
}

// shift every eps by a rational scalar (tensoring by the character that moves
// the central element); used for the complementary series deformation
inline HModuleRep shifted(const HModuleRep& X, const Rational& shift) {
    HModuleRep Y;
    Y.n = X.n;
    Y.dimension = X.dimension;
    Y.simple = X.simple;
    Y.eps = X.eps;
    for (auto& e : Y.eps)
        for (int i = 0; i < e.rows(); ++i) e(i, i) += Zeta8(shift);
    std::vector<std::pair<Rational, Rational>> entries;
    for (const auto& [re, im] : X.character.entries()) entries.emplace_back(re + shift, im);
    Y.character = CentralCharacter(std::move(entries));
    return Y;
}

// Induction from a parabolic: basis u (x) v over minimal coset representatives
// u and factor basis tuples v.
inline HModuleRep induce_module(const std::vector<HModuleRep>& factors) {
    if (factors.empty()) throw std::invalid_argument("induce_module: no factors");
    if (factors.size() == 1) return factors[0];

    std::vector<int> comp;
    for (const auto& f : factors) comp.push_back(f.n);
    BlockStructure blocks(comp);
    const int n = blocks.n();
    const int r = blocks.blocks();

    std::vector<Perm> reps = min_coset_reps(blocks);
    std::map<Perm, int> rep_index;
    for (size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<int>(i);

    int fdim = 1;
    for (const auto& f : factors) fdim *= f.dim();
    const int dim = static_cast<int>(reps.size()) * fdim;

    // matrix of a block-preserving x on the factor tensor space
    auto local_action = [&](const Perm& x) {
        Matrix<Zeta8> acc = Matrix<Zeta8>::identity(1);
        for (int b = 0; b < r; ++b)
            acc = Matrix<Zeta8>::kronecker(acc, factors[b].perm_matrix(blocks.local_part(x, b)));
        return acc;
    };

    // eps_j at the identity coset: factor eps on the tensor space
    auto local_eps = [&](int j /*0-based global*/) {
        int b = blocks.block_of[j];
        Matrix<Zeta8> acc = Matrix<Zeta8>::identity(1);
        for (int bb = 0; bb < r; ++bb)
            acc = Matrix<Zeta8>::kronecker(
                acc, bb == b ? factors[bb].eps[j - blocks.offsets[bb]]
                             : Matrix<Zeta8>::identity(factors[bb].dim()));
        return acc;
    };

    HModuleRep X;
    X.n = n;
    X.dimension = dim;

    // action of any w in W on the induced space
    auto act = [&](const Perm& w) {
        Matrix<Zeta8> out(dim, dim);
        for (size_t ui = 0; ui < reps.size(); ++ui) {
            Perm sigma = perm_compose(w, reps[ui]);
            Perm u2, x;
            blocks.coset_decompose(sigma, u2, x);
            int u2i = rep_index.at(u2);
            Matrix<Zeta8> loc = local_action(x);
            for (int a = 0; a < fdim; ++a)
                for (int bcol = 0; bcol < fdim; ++bcol)
                    if (!loc(a, bcol).is_zero())
                        out(u2i * fdim + a, static_cast<int>(ui) * fdim + bcol) = loc(a, bcol);
        }
        return out;
    };

    for (int i = 0; i + 1 < n; ++i) {
        Perm s = perm_transposition(n, i, i + 1);
        X.simple.push_back(act(s));
    }

    // rewriting engine: eps_i * w = w * eps_{w^-1(i)} + sum c_k * w_k
    // (i and the permutations 0-based)
    auto eps_terms = [&](auto&& self, int i, const Perm& w)
        -> std::pair<int, std::vector<std::pair<Perm, Rational>>> {
        if (perm_is_identity(w)) return {i, {}};
        // smallest left descent: value g appears after value g+1
        Perm winv = perm_inverse(w);
        int g = -1;
        for (int k = 0; k + 1 < n; ++k)
            if (winv[k] > winv[k + 1]) { g = k; break; }
        Perm sg = perm_transposition(n, g, g + 1);
        Perm w1 = perm_compose(sg, w);
        int i1 = i == g ? g + 1 : (i == g + 1 ? g : i);  // s_g(i)
        auto [lead, terms] = self(self, i1, w1);
        // <alpha_g, eps_{i1}> = delta_{i1,g} - delta_{i1,g+1}
        Rational pairing(i1 == g ? 1 : (i1 == g + 1 ? -1 : 0));
        std::vector<std::pair<Perm, Rational>> out;
        for (auto& [p, cval] : terms) out.emplace_back(perm_compose(sg, p), cval);
        if (!pairing.is_zero()) out.emplace_back(w1, -pairing);
        return {lead, out};
    };

    for (int i = 0; i < n; ++i) {
        Matrix<Zeta8> e(dim, dim);
        for (size_t ui = 0; ui < reps.size(); ++ui) {
            auto [lead, terms] = eps_terms(eps_terms, i, reps[ui]);
            Matrix<Zeta8> leading = local_eps(lead);
            for (int a = 0; a < fdim; ++a)
                for (int bcol = 0; bcol < fdim; ++bcol)
                    if (!leading(a, bcol).is_zero())
                        e(static_cast<int>(ui) * fdim + a, static_cast<int>(ui) * fdim + bcol) +=
                            leading(a, bcol);
            for (auto& [p, cval] : terms) {
                Perm u2, x;
                blocks.coset_decompose(p, u2, x);
                int u2i = rep_index.at(u2);
                Matrix<Zeta8> loc = local_action(x);
                Zeta8 coef{cval};
                for (int a = 0; a < fdim; ++a)
                    for (int bcol = 0; bcol < fdim; ++bcol)
                        if (!loc(a, bcol).is_zero())
                            e(u2i * fdim + a, static_cast<int>(ui) * fdim + bcol) +=
                                coef * loc(a, bcol);
            }
        }
        X.eps.push_back(std::move(e));
    }

    std::vector<std::pair<Rational, Rational>> entries;
    for (const auto& f : factors)
        for (const auto& p : f.character.entries()) entries.push_back(p);
    X.character = CentralCharacter(std::move(entries));
    return X;
}

// complementary series: the two +/- nu shifted copies of the base, induced
inline HModuleRep complementary_matrices(const ComplementaryFactor& cf) {
    HModuleRep base = speh_matrices(cf.base);
    return induce_module({shifted(base, cf.nu), shifted(base, -cf.nu)});
}

// matrices for a whole unitary module (real parameters only)
inline HModuleRep module_rep(const UnitaryModule& X) {
    if (!X.real())
        throw std::invalid_argument("module_rep: imaginary twists are not represented");
    std::vector<HModuleRep> factor_reps;
    for (const Factor& f : X.factors()) {
        if (const SpehFactor* s = std::get_if<SpehFactor>(&f))
            factor_reps.push_back(speh_matrices(*s));
        else
            factor_reps.push_back(complementary_matrices(std::get<ComplementaryFactor>(f)));
    }
    return induce_module(factor_reps);
}

}  // namespace hecke
