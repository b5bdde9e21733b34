// Command line front end: machine-readable tables and verification reports.
//
//   heckedirac enumerate --n 4 [--filter nonzero]
//   heckedirac cohomology --module "a(2,2)" [--spin +]
//   heckedirac gtable --n 5 [--format json|tsv]
//   heckedirac spintypes --n 6
//   heckedirac verify [--max-n 6] [--filter all|d2-only|speh|induced|cs] [--jobs 4]
//
// Output is JSON lines (gtable: TSV table with --format tsv), deterministic
// byte-for-byte for a fixed version. Exit codes: 0 success, 1 usage error,
// 2 verification failure.

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "hecke/jsonio.hpp"

namespace {

constexpr int kEnumerateBound = 20;
constexpr int kOracleBound = 6;

std::ostream& output_stream(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open --out file " + path);
    return file;
}

int cmd_enumerate(int n, const std::string& filter, std::ostream& os) {
    if (n < 1 || n > kEnumerateBound) {
        std::cerr << "enumerate: --n must be between 1 and " << kEnumerateBound << "\n";
        return 1;
    }
    for (const hecke::UnitaryModule& X : hecke::enumerate_speh_multisets(n)) {
        nlohmann::json line = hecke::json_enumerate_line(X);
        if (filter == "nonzero" && !line["nonzero"].get<bool>()) continue;
        os << line.dump() << "\n";
    }
    return 0;
}

int cmd_cohomology(const std::string& spec, const std::string& spin, std::ostream& os) {
    hecke::UnitaryModule X = hecke::parse_module(spec);
    hecke::ValidationReport rep = hecke::validate_unitary(X);
    if (!rep.ok) {
        nlohmann::json err;
        err["module"] = X.to_string();
        err["error"] = "not a unitary module";
        err["violations"] = rep.violations;
        os << err.dump() << "\n";
        return 1;
    }
    hecke::SpinChoice choice = hecke::default_spin_choice(X.n());
    if (spin == "+") choice = X.n() % 2 ? hecke::SpinChoice::Plus : hecke::SpinChoice::Unique;
    if (spin == "-") choice = X.n() % 2 ? hecke::SpinChoice::Minus : hecke::SpinChoice::Unique;
    hecke::CohomologyResult res = hecke::dirac_cohomology_general(X, choice);
    os << hecke::json_cohomology(X, res).dump() << "\n";
    return 0;
}

int cmd_gtable(int n, const std::string& format, std::ostream& os) {
    if (n < 1 || n > 12) {
        std::cerr << "gtable: --n must be between 1 and 12\n";
        return 1;
    }
    const hecke::GMatrix& G = hecke::g_matrix(n);
    const auto& order = G.order();
    if (format == "json") {
        for (size_t i = 0; i < order.size(); ++i) {
            nlohmann::json line;
            line["lambda"] = hecke::json_partition(order[i]);
            nlohmann::json row = nlohmann::json::object();
            for (size_t j = 0; j < order.size(); ++j)
                if (G.values()[i][j] != 0) row[order[j].to_string()] = G.values()[i][j];
            line["entries"] = row;
            os << line.dump() << "\n";
        }
        return 0;
    }
    os << "g";
    for (const auto& mu : order) os << "\t" << mu.to_string();
    os << "\n";
    for (size_t i = 0; i < order.size(); ++i) {
        os << order[i].to_string();
        for (size_t j = 0; j < order.size(); ++j) os << "\t" << G.values()[i][j];
        os << "\n";
    }
    return 0;
}

int cmd_spintypes(int n, std::ostream& os) {
    if (n < 1 || n > 20) {
        std::cerr << "spintypes: --n must be between 1 and 20\n";
        return 1;
    }
    for (const hecke::SpinType& t : hecke::classify_spin_types(n))
        os << hecke::json_spin_type(t).dump() << "\n";
    return 0;
}

int cmd_verify(int max_n, const std::string& filter, int jobs, std::ostream& os) {
    if (max_n < 1 || max_n > kOracleBound) {
        std::cerr << "verify: --max-n must be between 1 and " << kOracleBound << "\n";
        return 1;
    }
    std::vector<hecke::VerifyTask> tasks = hecke::verify_tasks(max_n);
    if (filter == "speh" || filter == "induced" || filter == "cs") {
        std::erase_if(tasks, [&](const hecke::VerifyTask& t) { return t.kind != filter; });
    }
    const bool kernels = filter != "d2-only";

    std::vector<hecke::VerifyRecord> records(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            records[i] = hecke::run_verify_task(tasks[i], kernels);
        }
    };
    jobs = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    bool all_ok = true;
    for (const hecke::VerifyRecord& rec : records) {
        os << hecke::json_verify_record(rec).dump() << "\n";
        if (!hecke::record_passed(rec)) {
            all_ok = false;
            std::cerr << "FAIL " << rec.module << " spin " << rec.spin
                      << (rec.d_squared_ok ? "" : " [d-squared]")
                      << (rec.sign_ok ? "" : " [sign-commutation]") << "\n";
        }
        if (!rec.closed_form_note.empty())
            std::cerr << "FLAG " << rec.module << ": " << rec.closed_form_note << "\n";
    }
    std::cerr << (all_ok ? "verify: all tasks ok (" : "verify: FAILURES among ")
              << records.size() << (all_ok ? " records)" : " records") << "\n";
    return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac cohomology of unitary modules of the graded Hecke algebra of gl(n)"};
    app.require_subcommand(1);

    std::string out_path, filter = "all", module_spec, spin, format = "json";
    int n = 0, max_n = kOracleBound, jobs = 1;

    CLI::App* enumerate = app.add_subcommand("enumerate", "all Speh-factor multisets of size n");
    enumerate->add_option("--n", n, "total size")->required();
    enumerate->add_option("--filter", filter, "all | nonzero");
    enumerate->add_option("--out", out_path, "write output to a file");

    CLI::App* cohomology = app.add_subcommand("cohomology", "Dirac cohomology of one module");
    cohomology->add_option("--module", module_spec, "module spec, e.g. a(2,2)*cs(a(1,1),1/4)")
        ->required();
    cohomology->add_option("--spin", spin, "+ | - (odd n only)");
    cohomology->add_option("--out", out_path, "write output to a file");

    CLI::App* gtable = app.add_subcommand("gtable", "the integer matrix K(-1)^{-1}");
    gtable->add_option("--n", n, "size of the partitions")->required();
    gtable->add_option("--format", format, "json | tsv");
    gtable->add_option("--out", out_path, "write output to a file");

    CLI::App* spintypes = app.add_subcommand("spintypes", "genuine double-cover types for n");
    spintypes->add_option("--n", n, "size")->required();
    spintypes->add_option("--out", out_path, "write output to a file");

    CLI::App* verify = app.add_subcommand("verify", "run the matrix oracle battery");
    verify->add_option("--max-n", max_n, "largest module size (<= 6)");
    verify->add_option("--filter", filter, "all | d2-only | speh | induced | cs");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--out", out_path, "write output to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        std::ofstream file;
        std::ostream& os = output_stream(out_path, file);
        if (enumerate->parsed()) return cmd_enumerate(n, filter, os);
        if (cohomology->parsed()) return cmd_cohomology(module_spec, spin, os);
        if (gtable->parsed()) return cmd_gtable(n, format, os);
        if (spintypes->parsed()) return cmd_spintypes(n, os);
        if (verify->parsed()) return cmd_verify(max_n, filter, jobs, os);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
