#include "lcft/verify.hpp"

#include "lcft/alpha_modular.hpp"
#include "lcft/block_diag.hpp"
#include "lcft/bpz_closed_form.hpp"
#include "lcft/cli_io.hpp"
#include "lcft/errors.hpp"
#include "lcft/limit_verlinde.hpp"
#include "lcft/replacement.hpp"
#include "lcft/reps.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <future>
#include <sstream>

namespace lcft {

namespace {

constexpr double exact_tol = 1e-9;
constexpr int algebra_p_max = 8;
constexpr int factorization_p_max = 8;

std::string num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string where(const std::array<int, 3>& d) {
    std::ostringstream os;
    os << "first difference at (I,J,K)=(" << d[0] << "," << d[1] << "," << d[2] << ")";
    return os.str();
}

CheckResult check(int p, const std::string& name, const std::function<std::string(bool&)>& f) {
    CheckResult r{p, name, false, ""};
    try {
        bool ok = true;
        r.detail = f(ok);
        r.pass = ok;
    } catch (const std::exception& e) {
        r.detail = e.what();
    }
    return r;
}

std::string compare(const FusionTable& got, const FusionTable& want, bool& ok) {
    if (!same_entries(got, want)) {
        ok = false;
        return to_string(got.method) + " " + to_string(got.stage) + ": " + where(first_difference(got, want));
    }
    return "";
}

std::vector<CheckResult> verify_one(int p, const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const FusionTable bd = prefusion_matrices(p, opt.tol);

    out.push_back(check(p, "group_relations", [&](bool& ok) {
        GroupReport g = verify_group_relations(p, {1.0, 0.1, 0.01}, exact_tol);
        ok = g.pass;
        double st = *std::max_element(g.st_cubed.begin(), g.st_cubed.end());
        return "S^2 " + num(g.s_squared) + ", (ST)^3 " + num(st);
    }));
    out.push_back(check(p, "s_two_paths", [&](bool& ok) {
        double worst = 0;
        for (double a : {1.0, 0.3, 0.01})
            worst = std::max(worst, (build_S_via_B(p, a) - build_S_alpha(p).eval(a)).cwiseAbs().maxCoeff());
        ok = worst < exact_tol;
        return num(worst);
    }));
    out.push_back(check(p, "s_conjugation", [&](bool& ok) {
        CPair C = build_C(p);
        double worst = 0;
        for (double a : {0.1, 0.01}) {
            Eigen::MatrixXcd X = C.C.eval(a) * build_S_alpha(p).eval(a) * C.C_inv.eval(a);
            worst = std::max(worst, (X - build_S(p).cast<cplx>()).cwiseAbs().maxCoeff());
        }
        ok = worst < exact_tol;
        return num(worst);
    }));
    out.push_back(check(p, "equivalence", [&](bool& ok) {
        LimitReport L = limit_prefusion(p, opt.alphas, opt.tol);
        std::string d = compare(L.table, bd, ok);
        return d.empty() ? "max residual " + num(L.max_residual) : d;
    }));
    out.push_back(check(p, "projection", [&](bool&) {
        project_small(bd);
        return std::string();
    }));
    out.push_back(check(p, "closed_form", [&](bool& ok) {
        std::string d = compare(closed_table(p, Stage::pre), bd, ok);
        if (ok) d = compare(closed_table(p, Stage::post), replace_table(bd), ok);
        return d;
    }));
    out.push_back(check(p, "replacement", [&](bool& ok) {
        FusionTable post = replace_table(bd);
        ok = is_nonnegative(post) && same_entries(replace_table(post), post);
        for (int i = 1; ok && i <= bd.dim(); ++i)
            for (int j = 1; ok && j <= bd.dim(); ++j)
                ok = character_content(p, bd.product(i, j)) == character_content(p, post.product(i, j));
        return std::to_string(flagged_products(bd).size()) + " flagged products";
    }));
    out.push_back(check(p, "algebra", [&](bool& ok) {
        FusionTable post = replace_table(bd);
        ok = vacuum_is_identity(bd) && vacuum_is_identity(post);
        if (p <= algebra_p_max)
            ok = ok && is_commutative(bd) && is_commutative(post) && is_associative(bd) && is_associative(post);
        return std::string();
    }));
    if (p <= factorization_p_max)
        out.push_back(check(p, "factorization", [&](bool&) {
            FactorizationReport f = verify_equivalence_factorization(p, opt.alphas, opt.tol);
            return "legs " + num(f.leg_a) + " " + num(f.leg_b) + " " + num(f.leg_c);
        }));
    if (!opt.fixture_dir.empty() && (p == 2 || p == 3)) {
        const std::filesystem::path dir(opt.fixture_dir);
        const std::string sp = std::to_string(p);
        out.push_back(check(p, "golden", [&](bool& ok) {
            FusionTable pre = to_table(load_document((dir / ("prefusion_p" + sp + ".json")).string()));
            FusionTable post = to_table(load_document((dir / ("fusion_p" + sp + ".json")).string()));
            std::string d = compare(bd, pre, ok);
            if (ok) d = compare(limit_prefusion(p, opt.alphas, opt.tol).table, pre, ok);
            if (ok) d = compare(closed_table(p, Stage::pre), pre, ok);
            if (ok) d = compare(replace_table(bd), post, ok);
            if (ok) d = compare(closed_table(p, Stage::post), post, ok);
            return d;
        }));
    }
    return out;
}

}  // namespace

std::vector<CheckResult> run_verify(int p_lo, int p_hi, const VerifyOptions& opt) {
    require_p(p_lo);
    require_p(p_hi);
    if (p_lo > p_hi) throw invalid_parameter("empty p range");
    std::vector<std::future<std::vector<CheckResult>>> jobs;
    for (int p = p_lo; p <= p_hi; ++p)
        jobs.push_back(std::async(std::launch::async, [p, &opt] {
            try {
                return verify_one(p, opt);
            } catch (const std::exception& e) {
                return std::vector<CheckResult>{{p, "integrality", false, e.what()}};
            }
        }));
    std::vector<CheckResult> all;
    for (auto& j : jobs) {
        auto r = j.get();
        all.insert(all.end(), r.begin(), r.end());
    }
    std::stable_sort(all.begin(), all.end(), [](const CheckResult& a, const CheckResult& b) {
        return a.p != b.p ? a.p < b.p : a.name < b.name;
    });
    return all;
}

}  // namespace lcft
