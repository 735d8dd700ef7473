#include "lcft/block_diag.hpp"
#include "lcft/bpz_closed_form.hpp"
#include "lcft/cli_io.hpp"
#include "lcft/errors.hpp"
#include "lcft/limit_verlinde.hpp"
#include "lcft/replacement.hpp"
#include "lcft/theta_chars.hpp"
#include "lcft/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <algorithm>
#include <regex>
#include <sstream>

#ifndef LCFT_FIXTURE_DIR
#define LCFT_FIXTURE_DIR ""
#endif

using namespace lcft;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

double parse_real(const std::string& s, const std::string& whole) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size()) throw usage_error("cannot parse complex number '" + whole + "'");
    return v;
}

// "0.3+1.7i", "2i", "-i", "1.5"
cplx parse_complex(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) throw usage_error("empty complex number");
    if (s.back() != 'i') return {parse_real(s, s), 0.0};
    std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    std::string re = split == std::string::npos ? "" : body.substr(0, split);
    std::string im = split == std::string::npos ? body : body.substr(split);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {re.empty() ? 0.0 : parse_real(re, s), parse_real(im, s)};
}

std::pair<int, int> parse_range(const std::string& s) {
    static const std::regex re(R"(^(\d+)(?:\.\.(\d+))?$)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw usage_error("expected p or p_lo..p_hi, got '" + s + "'");
    int lo = std::stoi(m[1].str());
    int hi = m[2].matched ? std::stoi(m[2].str()) : lo;
    if (lo < 2 || hi < lo) throw usage_error("p range must satisfy 2 <= p_lo <= p_hi");
    return {lo, hi};
}

json make_meta(const std::string& method, double tol, const std::vector<double>& alphas, bool canonical) {
    json m = json::object();
    m["generator"] = "lcft_fusion";
    m["tolerance"] = num(tol);
    if (method == "limit") {
        json a = json::array();
        for (double x : alphas) a.push_back(num(x));
        m["alphas"] = a;
    }
    if (!canonical) {
        std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
        m["timestamp"] = buf;
    }
    return m;
}

FusionTable generate(int p, Method method, Stage stage, double tol, const std::vector<double>& alphas) {
    switch (method) {
        case Method::limit: {
            FusionTable t = limit_prefusion(p, alphas, tol).table;
            return stage == Stage::pre ? t : replace_table(t);
        }
        case Method::blockdiag: {
            FusionTable t = prefusion_matrices(p, tol);
            return stage == Stage::pre ? t : replace_table(t);
        }
        case Method::closed: return closed_table(p, stage);
        case Method::reference: break;
    }
    throw usage_error("method must be limit, blockdiag or closed");
}

struct GenArgs {
    int p = 2;
    std::string method = "blockdiag";
    std::string stage = "pre";
    std::string format = "json";
    bool canonical = false;
    std::string out;
};

int cmd_gen(const GenArgs& a, double tol, const std::vector<double>& alphas) {
    if (a.p < 2) throw usage_error("p must be at least 2");
    FusionTable t = generate(a.p, parse_method(a.method), parse_stage(a.stage), tol, alphas);
    std::string text;
    if (a.format == "json") text = to_json(make_document(t, make_meta(a.method, tol, alphas, a.canonical)));
    else if (a.format == "text") text = render_text(t);
    else text = render_latex(t);
    if (a.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(a.out, std::ios::binary);
        if (!f) throw usage_error("cannot write " + a.out);
        f << text;
    }
    return exit_pass;
}

int cmd_verify(const std::string& range, double tol, const std::vector<double>& alphas, const std::string& fixtures) {
    auto [lo, hi] = parse_range(range);
    VerifyOptions opt;
    opt.tol = tol;
    opt.alphas = alphas;
    opt.fixture_dir = fixtures;
    std::vector<CheckResult> res = run_verify(lo, hi, opt);
    const CheckResult* first = nullptr;
    for (const CheckResult& r : res) {
        std::cout << "p=" << r.p << " " << r.name << " " << (r.pass ? "PASS" : "FAIL");
        if (!r.detail.empty()) std::cout << "  " << r.detail;
        std::cout << "\n";
        if (!r.pass && !first) first = &r;
    }
    if (first) {
        std::cout << "first failure: p=" << first->p << " " << first->name << ": " << first->detail << "\n";
        return exit_fail;
    }
    std::cout << "all " << res.size() << " checks passed\n";
    return exit_pass;
}

int cmd_chars(int p, double alpha, const std::string& tau_s, int terms) {
    if (p < 2) throw usage_error("p must be at least 2");
    if (alpha == 0) throw usage_error("alpha must be nonzero");
    QSeriesContext ctx;
    ctx.truncation = terms;
    ctx.tau = parse_complex(tau_s);
    if (!(ctx.tau.imag() > 0)) throw usage_error("tau must lie in the upper half-plane");
    if (terms < 1) throw usage_error("terms must be positive");
    constexpr double transform_tol = 1e-7;
    constexpr double ident_tol = 1e-9;
    double s = verify_S_transform(p, alpha, ctx);
    double t = verify_T_transform(p, alpha, ctx);
    bool ok = s < transform_tol && t < transform_tol;
    std::cout << "p=" << p << " alpha=" << alpha << " tau=" << ctx.tau.real() << (ctx.tau.imag() < 0 ? "" : "+")
              << ctx.tau.imag() << "i terms=" << terms << "\n";
    std::cout << "S-transform residual " << s << "\n";
    std::cout << "T-transform residual " << t << "\n";
    for (int k = 1; k < p; ++k) {
        double r = verify_char_identity(p, k, alpha, ctx);
        ok = ok && r < ident_tol;
        std::cout << "character identity s=" << k << " residual " << r << "\n";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? exit_pass : exit_fail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fusion rules of the c_{p,1} triplet models"};
    app.require_subcommand(1);

    double tol = 1e-5;
    std::vector<double> alphas = default_alphas;
    bool tol_given = false;

    GenArgs g;
    auto* gen = app.add_subcommand("gen", "Generate a fusion table");
    gen->add_option("--p", g.p, "Model parameter p >= 2")->required();
    gen->add_option("--method", g.method, "limit | blockdiag | closed")
        ->check(CLI::IsMember({"limit", "blockdiag", "closed"}));
    gen->add_option("--stage", g.stage, "pre | post")->check(CLI::IsMember({"pre", "post"}));
    gen->add_option("--format", g.format, "json | text | latex")->check(CLI::IsMember({"json", "text", "latex"}));
    gen->add_flag("--canonical", g.canonical, "Deterministic output without timestamp");
    gen->add_option("--out", g.out, "Output file (default stdout)");
    gen->add_option("--tol", tol, "Integrality tolerance")->each([&](const std::string&) { tol_given = true; });
    gen->add_option("--alphas", alphas, "Decreasing alpha schedule")->delimiter(',');

    std::string range = "2..3";
    std::string fixtures = LCFT_FIXTURE_DIR;
    auto* ver = app.add_subcommand("verify", "Run the invariant suite");
    ver->add_option("--p", range, "p or p_lo..p_hi");
    ver->add_option("--tol", tol, "Limit tolerance")->each([&](const std::string&) { tol_given = true; });
    ver->add_option("--alphas", alphas, "Decreasing alpha schedule")->delimiter(',');
    ver->add_option("--fixtures", fixtures, "Golden fixture directory (empty to skip)");

    int cp = 2, terms = 200;
    double alpha = 0.1;
    std::string tau = "0+1i";
    auto* chr = app.add_subcommand("chars", "Character transformation residuals");
    chr->add_option("--p", cp, "Model parameter p >= 2");
    chr->add_option("--alpha", alpha, "Deformation parameter");
    chr->add_option("--tau", tau, "Point in the upper half-plane, e.g. 0.3+1.7i");
    chr->add_option("--terms", terms, "Truncation of the q-series");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (!tol_given) tol = tolerance_from_env(tol);
        if (!(tol > 0)) throw usage_error("tolerance must be positive");
        if (*gen) return cmd_gen(g, tol, alphas);
        if (*ver) return cmd_verify(range, tol, alphas, fixtures);
        return cmd_chars(cp, alpha, tau, terms);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const invalid_parameter& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_fail;
    }
}
