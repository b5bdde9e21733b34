#pragma once

// The verification battery: one task is one module together with one spin
// variant. Each task builds the module matrices, checks the squared-Dirac
// identity and sign commutation exactly, computes the kernel of D, and
// compares dimension and trace pairings against the prediction of the
// general cohomology formula. Tasks are pure and independent, so the CLI can
// run them on a worker pool; records are emitted in task order regardless.

#include <chrono>
#include <string>
#include <vector>

#include "hecke/cohomology.hpp"
#include "hecke/oracle/dirac.hpp"

namespace hecke {

struct VerifyTask {
    UnitaryModule module;
    int variant = 1;  // Clifford module variant; +1 is the unique one for even n
    std::string kind; // "speh" | "induced" | "cs"
};

struct VerifyRecord {
    std::string module;
    int n = 0;
    std::string spin;
    bool d_squared_ok = false;
    bool sign_ok = false;
    int kernel_dim = -1;           // -1 when skipped
    long long predicted_dim = 0;   // total dimension of the general formula
    bool pairings_match = false;
    long long elapsed_ms = 0;
    std::string closed_form_note;  // nonempty when a closed-form table disagrees
};

// the acceptance battery: every Speh module with md <= bound_md, every
// multi-factor Speh product with n <= bound_product, complementary series
// with 2md <= bound_cs at nu in {1/8, 1/4, 3/8}; one task per spin variant
inline std::vector<VerifyTask> verify_tasks(int max_n, int bound_md = 6, int bound_product = 5,
                                            int bound_cs = 6) {
    std::vector<VerifyTask> tasks;
    auto add = [&](UnitaryModule m, const std::string& kind) {
        int n = m.n();
        if (n > max_n) return;
        for (int v : spin_variants(n)) tasks.push_back({m, v, kind});
    };
    for (int m = 1; m <= bound_md; ++m)
        for (int d = 1; m * d <= bound_md; ++d)
            add(UnitaryModule({SpehFactor(m, d)}), "speh");
    for (int n = 2; n <= bound_product; ++n)
        for (const UnitaryModule& X : enumerate_speh_multisets(n))
            if (X.factors().size() >= 2) add(X, "induced");
    for (int m = 1; m <= bound_cs; ++m)
        for (int d = 1; 2 * m * d <= bound_cs; ++d)
            for (const Rational& nu : {Rational(1, 8), Rational(1, 4), Rational(3, 8)})
                add(UnitaryModule({ComplementaryFactor(SpehFactor(m, d), nu)}), "cs");
    return tasks;
}

// Dimension threshold for computing trace pairings. Within the battery every
// nonzero kernel lives on a module of dimension well below this; the large
// spaces all have zero kernel, where the pairing vector is identically zero
// and dimension agreement is the whole statement.
inline constexpr int kPairingDimBound = 200;

inline VerifyRecord run_verify_task(const VerifyTask& task, bool kernel_checks = true) {
    auto start = std::chrono::steady_clock::now();
    VerifyRecord rec;
    rec.module = task.module.to_string();
    rec.n = task.module.n();
    rec.spin = rec.n % 2 == 0 ? "unique" : (task.variant > 0 ? "+" : "-");

    HModuleRep X = module_rep(task.module);
    CliffordRep S(rec.n, task.variant);

    rec.d_squared_ok = !verify_d_squared(X, S).has_value();
    rec.sign_ok = !sign_commutation_check(X, S).has_value();

    SpinChoice choice = rec.n % 2 == 0 ? SpinChoice::Unique
                                       : (task.variant > 0 ? SpinChoice::Plus : SpinChoice::Minus);
    CohomologyResult prediction = dirac_cohomology_general(task.module, choice);
    rec.predicted_dim = prediction.decomposition.total_dimension();

    if (kernel_checks) {
        bool pairings = X.dim() * S.dim() <= kPairingDimBound || rec.predicted_dim > 0;
        KernelStructure ks = kernel_structure(X, S, pairings);
        rec.kernel_dim = ks.dim;
        if (pairings)
            rec.pairings_match =
                ks.pairings == predicted_pairings(rec.n, prediction.decomposition);
        else
            rec.pairings_match = ks.dim == 0 && rec.predicted_dim == 0;
    } else {
        rec.pairings_match = true;
    }

    if (task.kind == "speh") {
        const SpehFactor& f = std::get<SpehFactor>(task.module.factors()[0]);
        CohomologyResult closed = dirac_cohomology_speh(f, choice);
        if (closed.symmetrized() != prediction.symmetrized()) {
            rec.closed_form_note = "closed-form table gives total " +
                                   std::to_string(closed.decomposition.total_dimension()) +
                                   ", oracle/general formula give " +
                                   std::to_string(rec.predicted_dim);
        }
    }

    auto end = std::chrono::steady_clock::now();
    rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return rec;
}

inline bool record_passed(const VerifyRecord& rec) {
    bool kernel_ok = rec.kernel_dim < 0 || (rec.kernel_dim == rec.predicted_dim && rec.pairings_match);
    return rec.d_squared_ok && rec.sign_ok && kernel_ok;
}

}  // namespace hecke
