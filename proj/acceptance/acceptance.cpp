// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "lcft/alpha_modular.hpp"
#include "lcft/block_diag.hpp"
#include "lcft/bpz_closed_form.hpp"
#include "lcft/cli_io.hpp"
#include "lcft/limit_verlinde.hpp"
#include "lcft/replacement.hpp"
#include "lcft/theta_chars.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#ifndef LCFT_FIXTURE_DIR
#error "LCFT_FIXTURE_DIR must be defined"
#endif

using namespace lcft;

namespace {

std::string fixture(const std::string& n) { return std::string(LCFT_FIXTURE_DIR) + "/" + n; }

double rat(const std::string& s) {
    auto k = s.find('/');
    return k == std::string::npos ? std::stod(s) : std::stod(s.substr(0, k)) / std::stod(s.substr(k + 1));
}

struct Outcome {
    bool pass = true;
    std::ostringstream note;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) note << "failed: " << what;
        pass = pass && ok;
    }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0) o.require(dt < budget_s, "runtime budget");
    failures += !o.pass;
    std::printf("criterion %d %s  %s  (%.3f s)%s%s\n", id, o.pass ? "PASS" : "FAIL", title, dt,
                o.note.str().empty() ? "" : "  ", o.note.str().c_str());
}

}  // namespace

int main() {
    criterion(1, "golden tables", 1.0, [](Outcome& o) {
        for (int p : {2, 3}) {
            std::string sp = std::to_string(p);
            FusionTable pre = to_table(load_document(fixture("prefusion_p" + sp + ".json")));
            FusionTable post = to_table(load_document(fixture("fusion_p" + sp + ".json")));
            FusionTable bd = prefusion_matrices(p);
            o.require(same_entries(bd, pre), "blockdiag p=" + sp);
            o.require(same_entries(limit_prefusion(p).table, pre), "limit p=" + sp);
            o.require(same_entries(closed_table(p, Stage::pre), pre), "closed p=" + sp);
            o.require(same_entries(replace_table(bd), post), "replacement p=" + sp);
        }
    });

    criterion(2, "reference matrices S_2, K_2, C^-1, N_{2,1}", 0, [](Outcome& o) {
        json fx = load_json(fixture("modular_p2_p3.json"));
        auto mat = [](const json& rows) {
            Eigen::MatrixXd m(rows.size(), rows[0].size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rat(rows[i][j]);
            return m;
        };
        o.require((build_S(2) - mat(fx["S2"])).cwiseAbs().maxCoeff() < 1e-12, "S_2");
        o.require((build_K(2).M - mat(fx["K2"])).cwiseAbs().maxCoeff() < 1e-12, "K_2");
        for (int p : {2, 3}) {
            CPair c = build_C(p);
            const json& blocks = fx[p == 2 ? "C2_inv_blocks" : "C3_inv_blocks"];
            double worst = 0;
            for (int s = 1; s < p; ++s)
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) {
                        const LaurentScalar& got = c.C_inv(block_offset(s) + i, block_offset(s) + j);
                        LaurentScalar want;
                        for (const auto& [d, v] : blocks[s - 1][i][j].items())
                            want += LaurentScalar::monomial(rat(v), std::stoi(d));
                        for (int d = -max_laurent_degree; d <= max_laurent_degree; ++d)
                            worst = std::max(worst, std::abs(got.coeff(d) - want.coeff(d)));
                    }
            o.require(worst < 1e-12, "C_" + std::to_string(p) + " inverse");
        }
        IntMatrix n21 = prefusion_matrices(2).N[0];
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) o.require(n21(i, j) == fx["N21"][i][j].get<long long>(), "N_{2,1}");
        Eigen::EigenSolver<Eigen::MatrixXd> es(build_S(2));
        std::vector<double> ev;
        for (int i = 0; i < 5; ++i) {
            o.require(std::abs(es.eigenvalues()(i).imag()) < 1e-10, "real eigenvalues");
            ev.push_back(es.eigenvalues()(i).real());
        }
        std::sort(ev.begin(), ev.end());
        const double want[5] = {-1, -1, 1, 1, 1};
        for (int i = 0; i < 5; ++i) o.require(std::abs(ev[i] - want[i]) < 1e-10, "eigenvalues of S_2");
    });

    criterion(3, "modular relations p=2..12", 10.0, [](Outcome& o) {
        double s2 = 0, st = 0;
        for (int p = 2; p <= 12; ++p) {
            GroupReport g = verify_group_relations(p, {1.0, 0.1, 0.01}, 1e-9);
            s2 = std::max(s2, g.s_squared);
            for (double r : g.st_cubed) st = std::max(st, r);
        }
        o.require(s2 < 1e-10, "S^2 = 1");
        o.require(st < 1e-9, "(ST)^3 = 1");
        o.note << "S^2 " << s2 << ", (ST)^3 " << st;
    });

    criterion(4, "limit and block-diagonal methods agree p=2..12", 0, [](Outcome& o) {
        double worst = 0;
        for (int p = 2; p <= 12; ++p) {
            LimitReport r = limit_prefusion(p, default_alphas, 1e-5);
            o.require(same_entries(r.table, prefusion_matrices(p)), "tables agree p=" + std::to_string(p));
            worst = std::max(worst, r.max_residual);
        }
        o.require(worst < 1e-5, "pre-rounding discrepancy");
        if (o.pass) o.note << "max discrepancy " << worst;
    });

    criterion(5, "closed forms match the matrix tables p=2..12", 0, [](Outcome& o) {
        for (int p = 2; p <= 12; ++p) {
            FusionTable pre = prefusion_matrices(p);
            o.require(same_entries(closed_table(p, Stage::pre), pre), "pre p=" + std::to_string(p));
            o.require(same_entries(closed_table(p, Stage::post), replace_table(pre)), "post p=" + std::to_string(p));
        }
    });

    criterion(6, "irreducible rows avoid indecomposable columns p=2..12", 0, [](Outcome& o) {
        for (int p = 2; p <= 12; ++p) {
            FusionTable t = prefusion_matrices(p);
            std::vector<int> perm = permutation_newseq(p);
            for (int a = 0; a < 2 * p; ++a) {
                IntMatrix m = permute(t.N[perm[a] - 1], perm);
                o.require(m.topRightCorner(2 * p, p - 1).cwiseAbs().maxCoeff() == 0, "p=" + std::to_string(p));
            }
            project_small(t);
        }
    });

    criterion(7, "factorization legs p=2..6", 0, [](Outcome& o) {
        double a = 0, b = 0, c = 0;
        for (int p = 2; p <= 6; ++p) {
            FactorizationReport r = verify_equivalence_factorization(p, default_alphas, 1e-5, 0.01, 1e-9);
            a = std::max(a, r.leg_a), b = std::max(b, r.leg_b), c = std::max(c, r.leg_c);
        }
        o.require(a < 1e-9 && b < 1e-9 && c < 1e-5, "legs");
        o.note << "legs " << a << " " << b << " " << c;
    });

    criterion(8, "character transforms", 5.0, [](Outcome& o) {
        double st = 0, ci = 0;
        for (int p = 2; p <= 4; ++p)
            for (cplx tau : {cplx(0, 1), cplx(0.3, 1.7)}) {
                QSeriesContext ctx;
                ctx.tau = tau;
                ctx.truncation = 200;
                for (double a : {0.1, 1.0}) {
                    st = std::max({st, verify_S_transform(p, a, ctx), verify_T_transform(p, a, ctx)});
                    for (int s = 1; s < p; ++s) ci = std::max(ci, verify_char_identity(p, s, a, ctx));
                }
            }
        o.require(st < 1e-7, "S/T transforms");
        o.require(ci < 1e-9, "character identity");
        for (int p = 2; p <= 4; ++p)
            for (cplx x : {default_x, cplx(1, 0), cplx(2, 1)})
                o.require(same_entries(limit_prefusion(p, default_alphas, 1e-5, x).table, prefusion_matrices(p)),
                          "x-independence");
        o.note << "transforms " << st << ", identity " << ci;
    });

    criterion(9, "algebra properties", 0, [](Outcome& o) {
        for (int p = 2; p <= 12; ++p) {
            FusionTable pre = prefusion_matrices(p);
            FusionTable post = replace_table(pre);
            std::string sp = " p=" + std::to_string(p);
            if (p <= 8) {
                o.require(is_commutative(pre) && is_commutative(post), "commutativity" + sp);
                o.require(is_associative(pre) && is_associative(post), "associativity" + sp);
            }
            o.require(vacuum_is_identity(pre) && vacuum_is_identity(post), "vacuum" + sp);
            o.require(is_nonnegative(post), "nonnegativity" + sp);
        }
    });

    std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
