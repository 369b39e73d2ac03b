// growth-bounds: command-line front end to the growth library.

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "growth/automata.hpp"
#include "growth/enumeration.hpp"
#include "growth/manifolds.hpp"
#include "growth/parallel.hpp"
#include "growth/polyalg.hpp"
#include "growth/tables.hpp"
#include "growth/walk_rules.hpp"
#include "json_io.hpp"

using namespace growth;

namespace {

constexpr int kUsageError = 1;
constexpr int kMismatch = 2;

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

json count_json(const mpz_class& c) {
    if (c.fits_slong_p()) return c.get_si();
    return c.get_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rigorous growth-constant bounds for walks and lattice manifolds"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: GROWTH_BOUNDS_THREADS or all cores)")
        ->check(CLI::PositiveNumber);

    // enumerate
    auto* en = app.add_subcommand("enumerate", "exact walk counts c_n and c_n^(1/n) upper bounds");
    std::string rule, lattice = "square", format = "csv";
    int n = 0;
    en->add_option("--rule", rule, "saw sow odw naw eaw nrw lwalk rw")->required();
    en->add_option("--lattice", lattice, "square or triangular");
    en->add_option("--n", n, "largest length")->required()->check(CLI::Range(1, 40));
    en->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    // automata-bound
    auto* ab = app.add_subcommand("automata-bound", "transfer-matrix bound excluding loops up to size k");
    int k = 0;
    double tol = 1e-9;
    std::string emit_matrix, loop_sizes = "all";
    ab->add_option("--rule", rule)->required();
    ab->add_option("--lattice", lattice);
    ab->add_option("--k", k, "largest loop size")->required()->check(CLI::Range(2, 64));
    ab->add_option("--tol", tol, "relative bracket width")->check(CLI::Range(1e-15, 1e-2));
    ab->add_option("--emit-matrix", emit_matrix, "write the transfer matrix as JSON");
    ab->add_option("--loop-sizes", loop_sizes)->check(CLI::IsMember({"all", "odd"}));

    // twig-bound
    auto* tb = app.add_subcommand("twig-bound", "twig-method bound for self-avoiding surfaces");
    int d = 3, level = 1;
    std::string emit_poly, emit_audit;
    tb->add_option("--d", d)->check(CLI::Range(2, 3));
    tb->add_option("--level", level)->required()->check(CLI::Range(1, 3));
    tb->add_option("--emit-poly", emit_poly, "write p_level as JSON");
    tb->add_option("--emit-audit", emit_audit, "write the per-level root audits as JSON");

    // manifold-count
    auto* mc = app.add_subcommand("manifold-count", "fixed counts of lattice manifolds by k-area");
    std::string cls_name;
    int cap = -1;
    mc->add_option("--class", cls_name)->required()->check(CLI::IsMember({"sam", "som", "sos", "xd", "sam_closed"}));
    mc->add_option("--d", d)->required()->check(CLI::Range(1, 8));
    mc->add_option("--k", k)->required()->check(CLI::Range(1, 8));
    mc->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    mc->add_option("--cap", cap, "override the size cap");
    mc->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    // formula-bound
    auto* fb = app.add_subcommand("formula-bound", "closed-form growth bounds");
    int theorem = 0;
    fb->add_option("--theorem", theorem)->required()->check(CLI::Range(2, 6));
    fb->add_option("--d", d)->required();
    fb->add_option("--k", k)->required();

    // reproduce
    auto* rp = app.add_subcommand("reproduce", "recompute a reference table and diff against golden values");
    int table = 0, limit = -1;
    double rtol = 2e-5;
    bool full = false;
    rp->add_option("--table", table)->required()->check(CLI::Range(1, 6));
    rp->add_option("--limit", limit, "largest key to recompute");
    rp->add_flag("--full", full, "recompute every golden row (slow)");
    rp->add_option("--tol", rtol, "tolerance for bound columns");
    rp->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }
    if (threads > 0) set_thread_count(threads);

    try {
        if (*en) {
            WalkRule wr{parse_rule(rule), parse_lattice(lattice)};
            auto counts = count_walks(wr, n);
            auto mu = mu_upper_from_counts(counts);
            if (format == "csv") {
                std::cout << "n,c_n,mu_upper\n";
                for (int i = 0; i < n; ++i) std::cout << i + 1 << ',' << counts[i].get_str() << ',' << mu[i] << '\n';
            } else {
                json rows = json::array();
                for (int i = 0; i < n; ++i)
                    rows.push_back({{"n", i + 1}, {"c_n", count_json(counts[i])}, {"mu_upper", mu[i]}});
                std::cout << json{{"rule", rule}, {"lattice", lattice}, {"rows", rows}}.dump(2) << '\n';
            }
        } else if (*ab) {
            WalkRule wr{parse_rule(rule), parse_lattice(lattice)};
            auto rep = automata_bound(wr, k, tol, parse_loop_sizes(loop_sizes));
            if (!emit_matrix.empty()) write_json(emit_matrix, matrix_to_json(rep.transfer));
            std::cout << automata_report_to_json(rep).dump(2) << '\n';
        } else if (*tb) {
            auto rep = twig_bound(d, level);
            if (!emit_poly.empty()) write_json(emit_poly, poly_to_json(rep.poly));
            if (!emit_audit.empty()) {
                json audits = json::array();
                for (const auto& a : rep.audits) audits.push_back(audit_to_json(a));
                write_json(emit_audit, audits);
            }
            std::cout << twig_report_to_json(rep).dump(2) << '\n';
        } else if (*mc) {
            ManifoldClass cls{parse_manifold_class(cls_name), d, k};
            auto counts = enumerate_fixed(cls, n, cap);
            if (format == "csv") {
                std::cout << "n,count\n";
                for (int i = 0; i < n; ++i) std::cout << i + 1 << ',' << counts[i].get_str() << '\n';
            } else {
                json rows = json::array();
                for (int i = 0; i < n; ++i) rows.push_back({{"n", i + 1}, {"count", count_json(counts[i])}});
                std::cout << json{{"class", to_string(cls.id)}, {"d", d}, {"k", k}, {"rows", rows}}.dump(2) << '\n';
            }
        } else if (*fb) {
            std::cout << formula_to_json(formula_bound(theorem, d, k)).dump() << '\n';
        } else if (*rp) {
            if (full) limit = 1 << 20;
            auto rep = reproduce_table(table, limit, rtol);
            if (format == "csv")
                std::cout << to_csv(rep);
            else
                std::cout << reproduction_to_json(rep).dump(2) << '\n';
            if (!rep.skipped.empty()) {
                std::cerr << "skipped keys above " << (limit < 0 ? default_table_limit(table) : limit) << ":";
                for (int key : rep.skipped) std::cerr << ' ' << key;
                std::cerr << " (use --full)\n";
            }
            if (!rep.ok()) return kMismatch;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return 0;
}
