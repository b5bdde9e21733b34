#pragma once

// Ordinary S_n characters by the Murnaghan-Nakayama rule, via beta-sets.
// chi_lambda(rho) is computed recursively by stripping a border strip of
// length rho_1; memoized globally since the oracle pairings evaluate the same
// characters over every conjugacy class many times.

#include <map>
#include <mutex>
#include <vector>

#include "hecke/partition.hpp"

namespace hecke {

namespace detail {

inline long long mn_character(std::vector<int> lambda, std::vector<int> rho,
                              std::map<std::pair<std::vector<int>, std::vector<int>>, long long>& memo) {
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    if (rho.empty()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, rho);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int r = rho[0];
    std::vector<int> rest(rho.begin() + 1, rho.end());
    int L = static_cast<int>(lambda.size());
    // beta-set: distinct numbers lambda_i + (L-1-i)
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);

    long long total = 0;
    for (int i = 0; i < L; ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        bool clash = false;
        int height = 0;
        for (int j = 0; j < L; ++j) {
            if (j == i) continue;
            if (beta[j] == target) { clash = true; break; }
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (clash) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> mu(L);
        for (int j = 0; j < L; ++j) mu[j] = nb[j] - (L - 1 - j);
        long long sub = mn_character(mu, rest, memo);
        total += (height % 2 ? -sub : sub);
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace detail

// chi_lambda evaluated on the conjugacy class of cycle type rho
inline long long sn_character(const Partition& lambda, const Partition& rho) {
    if (lambda.n() != rho.n())
        throw std::invalid_argument("sn_character: size mismatch");
    static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
    static std::mutex memo_mutex;
    std::lock_guard<std::mutex> lock(memo_mutex);
    return detail::mn_character(lambda.parts(), rho.parts(), memo);
}

// dim sigma_lambda by the hook length formula
inline long long sn_dimension(const Partition& lambda) {
    Partition lt = transpose(lambda);
    Rational dim(1);
    long long cnt = 0;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.parts()[i]; ++j) {
            long long hook = (lambda.parts()[i] - j - 1) + (lt.parts()[j] - i - 1) + 1;
            dim = dim * Rational(++cnt, hook);
        }
    return dim.to_i64();
}

// size of the conjugacy class with cycle type rho inside S_n
inline long long conjugacy_class_size(const Partition& rho) {
    long long centralizer = 1;
    int prev = -1, run = 0;
    for (int p : rho.parts()) {
        centralizer *= p;
        if (p == prev) {
            ++run;
            centralizer *= run;
        } else {
            prev = p;
            run = 1;
        }
    }
    long long nf = 1;
    for (int k = 2; k <= rho.n(); ++k) nf *= k;
    return nf / centralizer;
}

}  // namespace hecke
