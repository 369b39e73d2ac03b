#include "properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include <Eigen/Dense>

#include "growth/polyalg.hpp"
#include "growth/polynomial.hpp"
#include "growth/spectral.hpp"
#include "growth/twig.hpp"
#include "growth/walk_rules.hpp"

using namespace growth;

namespace props {

namespace {

Outcome fail(const std::string& msg) { return {false, msg}; }

std::string path_string(const std::vector<int>& steps) {
    std::string s;
    for (int d : steps) s += char('0' + d);
    return s;
}

}  // namespace

Outcome walk_hierarchy(int max_len) {
    const std::vector<Rule> chain = {Rule::NAW, Rule::SAW, Rule::ODW, Rule::SOW, Rule::EAW, Rule::NRW};
    long checked = 0;
    for (LatticeId lat : {LatticeId::Square, LatticeId::Triangular}) {
        const int c = planar_lattice(lat).coordination();
        std::vector<int> steps;
        std::string bad;
        std::function<void()> rec = [&] {
            if (!bad.empty()) return;
            if (!steps.empty()) {
                ++checked;
                bool prev = true;
                for (std::size_t i = 0; i < chain.size(); ++i) {
                    bool now = is_allowed({chain[i], lat}, steps);
                    if (i > 0 && prev && !now) {
                        bad = to_string(chain[i - 1]) + " path " + path_string(steps) + " rejected by " + to_string(chain[i]);
                        return;
                    }
                    prev = now;
                }
            }
            if (static_cast<int>(steps.size()) == max_len) return;
            for (int d = 0; d < c; ++d) {
                steps.push_back(d);
                rec();
                steps.pop_back();
            }
        };
        rec();
        if (!bad.empty()) return fail(to_string(lat) + ": " + bad);
    }
    return {true, std::to_string(checked) + " paths"};
}

Outcome sow_noncrossing_equivalence() {
    long checked = 0;
    for (LatticeId lat : {LatticeId::Square, LatticeId::Triangular}) {
        const auto& table = config_table({Rule::SOW, lat});
        const int c = table.coordination;
        // All partial matchings of the c directions.
        std::vector<std::pair<int, int>> chords;
        std::vector<bool> used(c, false);
        std::string bad;
        std::function<void(int)> rec = [&](int from) {
            if (!bad.empty()) return;
            VertexChordConfig cfg;
            cfg.chords = chords;
            cfg.normalize();
            ++checked;
            if (table.contains(cfg) != noncrossing_check(cfg, lat)) {
                std::ostringstream os;
                for (auto [a, b] : cfg.chords) os << '(' << a << ',' << b << ')';
                bad = to_string(lat) + " " + os.str();
                return;
            }
            for (int a = from; a < c; ++a) {
                if (used[a]) continue;
                for (int b = a + 1; b < c; ++b) {
                    if (used[b]) continue;
                    used[a] = used[b] = true;
                    chords.emplace_back(a, b);
                    rec(a + 1);
                    chords.pop_back();
                    used[a] = used[b] = false;
                }
            }
        };
        rec(0);
        if (!bad.empty()) return fail("table and noncrossing test disagree on " + bad);
    }
    return {true, std::to_string(checked) + " chord configurations"};
}

Outcome collatz_wielandt_random(int trials, std::uint32_t seed) {
    std::mt19937 rng(seed);
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
        const int n = std::uniform_int_distribution<int>(1, 40)(rng);
        const double density = std::uniform_real_distribution<double>(0.05, 0.4)(rng);
        std::bernoulli_distribution keep(density);
        std::uniform_int_distribution<int> val(1, 5);
        std::vector<Triplet> trips;
        Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (keep(rng)) {
                    int v = val(rng);
                    trips.push_back({i, j, v});
                    dense(i, j) = v;
                }
        SparseMatrix m(n, trips);
        auto br = certified_dominant_eigenvalue(m, 1e-10L);
        Eigen::EigenSolver<Eigen::MatrixXd> es(dense, false);
        double rho = es.eigenvalues().cwiseAbs().maxCoeff();
        const double slack = 1e-8 * std::max(1.0, rho);
        if (static_cast<double>(br.upper) < rho - slack || static_cast<double>(br.lower) > rho + slack) {
            std::ostringstream os;
            os << "trial " << t << " (dim " << n << "): bracket [" << static_cast<double>(br.lower) << ", "
               << static_cast<double>(br.upper) << "] misses " << rho;
            return fail(os.str());
        }
        worst = std::max(worst, static_cast<double>(br.upper - br.lower));
    }
    std::ostringstream os;
    os << trials << " matrices, widest bracket " << worst;
    return {true, os.str()};
}

Outcome twig_monomial_identity(int trials, std::uint32_t seed) {
    const TwigSet level2 = next_level(level1_twigs(2));
    std::vector<const Twig*> any, closed;
    for (const auto& t : level2.twigs) {
        any.push_back(&t);
        if (t.alive.empty()) closed.push_back(&t);
    }
    if (closed.empty()) return fail("no twig without living faces");
    std::mt19937 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const int soft_cap = std::uniform_int_distribution<int>(1, 25)(rng);
        long open = 1, count = 0, whites = 0, blacks = 0;
        BivariatePolynomial product = BivariatePolynomial::monomial(0, 0);
        while (open > 0) {
            const auto& pool = count < soft_cap ? any : closed;
            const Twig* tw = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            product = product * BivariatePolynomial::monomial(tw->x_degree(), tw->y_degree());
            open += static_cast<long>(tw->alive.size()) - 1;
            whites += static_cast<long>(tw->alive.size());
            blacks += static_cast<long>(tw->dead.size());
            ++count;
        }
        if (count != whites + 1) return fail("sequence bookkeeping broken");
        if (!(product == BivariatePolynomial::monomial(static_cast<int>(blacks - 1), static_cast<int>(blacks))))
            return fail("sequence " + std::to_string(t) + " does not multiply to x^(n-1) y^n");
    }
    return {true, std::to_string(trials) + " sequences over " + std::to_string(level2.twigs.size()) + " twigs"};
}

namespace {

ZPoly random_poly(std::mt19937& rng, int deg, int range) {
    std::uniform_int_distribution<int> c(-range, range);
    ZPoly p(deg + 1);
    for (auto& x : p) x = c(rng);
    while (p.back() == 0) p.back() = c(rng);
    return p;
}

SPoly as_spoly(const ZPoly& p) {
    SPoly q;
    for (const auto& c : p) q.push_back(c == 0 ? ZPoly{} : ZPoly{c});
    return q;
}

}  // namespace

Outcome resultant_gcd(int trials, std::uint32_t seed) {
    std::mt19937 rng(seed);
    int repeated = 0;
    for (int t = 0; t < trials; ++t) {
        // Half of the samples get a planted square factor.
        ZPoly q;
        if (t % 2 == 0) {
            q = random_poly(rng, std::uniform_int_distribution<int>(1, 4)(rng), 9);
        } else {
            ZPoly a = random_poly(rng, 1, 5);
            ZPoly b = random_poly(rng, std::uniform_int_distribution<int>(0, 2)(rng), 5);
            q = mul(mul(a, a), b);
        }
        const ZPoly dq = derivative(q);
        const ZPoly res = resultant(as_spoly(q), as_spoly(dq));
        const bool res_zero = degree(res) < 0;
        const bool common = degree(gcd(q, dq)) >= 1;
        if (res_zero != common) return fail("mismatch for q = " + to_string(q, "s"));
        repeated += common;
    }
    // Bivariate inputs: modular and Sylvester resultants agree exactly.
    for (int t = 0; t < trials / 4; ++t) {
        SPoly a, b;
        const int da = std::uniform_int_distribution<int>(1, 4)(rng), db = std::uniform_int_distribution<int>(1, 4)(rng);
        for (int i = 0; i <= da; ++i) a.push_back(random_poly(rng, std::uniform_int_distribution<int>(0, 3)(rng), 7));
        for (int i = 0; i <= db; ++i) b.push_back(random_poly(rng, std::uniform_int_distribution<int>(0, 3)(rng), 7));
        if (resultant(a, b) != resultant_sylvester(a, b)) return fail("modular and Sylvester resultants differ");
    }
    return {true, std::to_string(trials) + " univariate (" + std::to_string(repeated) + " with repeated factors), " +
                      std::to_string(trials / 4) + " bivariate"};
}

std::vector<mpz_class> redelmeier_polyominoes(int n_max) {
    // Cells (x, y) with y > 0, or y == 0 and x >= 0; the origin is the root.
    std::vector<mpz_class> counts(n_max, 0);
    const int w = 2 * n_max + 3;
    auto id = [w, n_max](int x, int y) { return (y + 1) * w + (x + n_max + 1); };
    std::vector<char> seen(static_cast<std::size_t>(w) * (n_max + 3), 0);
    auto valid = [](int x, int y) { return y > 0 || (y == 0 && x >= 0); };
    const int dx[4] = {1, 0, -1, 0}, dy[4] = {0, 1, 0, -1};

    std::vector<std::pair<int, int>> untried{{0, 0}};
    seen[id(0, 0)] = 1;
    std::function<void(std::vector<std::pair<int, int>>, int)> rec = [&](std::vector<std::pair<int, int>> pool, int size) {
        while (!pool.empty()) {
            auto [x, y] = pool.back();
            pool.pop_back();
            ++counts[size];
            if (size + 1 == n_max) continue;
            std::vector<std::pair<int, int>> next = pool, added;
            for (int d = 0; d < 4; ++d) {
                int nx = x + dx[d], ny = y + dy[d];
                if (!valid(nx, ny) || seen[id(nx, ny)]) continue;
                seen[id(nx, ny)] = 1;
                added.emplace_back(nx, ny);
                next.emplace_back(nx, ny);
            }
            rec(next, size + 1);
            for (auto [ax, ay] : added) seen[id(ax, ay)] = 0;
        }
    };
    rec(untried, 0);
    return counts;
}

}  // namespace props
