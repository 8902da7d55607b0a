// Command line front end: every library operation as a subcommand, plus the
// machine-readable selftest report.

#include "siegel/clifford.hpp"
#include "siegel/hecke.hpp"
#include "siegel/qexp_io.hpp"
#include "siegel/randomgen.hpp"
#include "siegel/rootdatum.hpp"
#include "siegel/satake.hpp"
#include "siegel/selftest.hpp"
#include "siegel/theta.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace siegel;

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::istringstream is(text);
    std::string piece;
    while (std::getline(is, piece, ',')) out.push_back(std::stoll(piece));
    return out;
}

Cocharacter parse_cochar(Int g, const std::string& text) {
    std::vector<Int> c = parse_int_list(text);
    check(c.size() == static_cast<size_t>(g + 1), "BadLength",
          "expected " + std::to_string(g + 1) + " comma-separated integers");
    return Cocharacter(g, std::move(c));
}

QExpansion load_expansion(const std::string& path) {
    if (path == "-") return qexp_read(std::cin);
    return qexp_load(path);
}

void store_expansion(const std::string& path, const QExpansion& f) {
    if (path.empty() || path == "-")
        qexp_write(std::cout, f);
    else
        qexp_save(path, f);
}

// name forms: T(2), T(4) / T(2^2), T0(4) / T0(2^2)
std::pair<Int, std::string> parse_operator_name(const std::string& name) {
    auto open = name.find('(');
    auto close = name.rfind(')');
    check(open != std::string::npos && close == name.size() - 1 && close > open + 1,
          "BadOperator", "operator name must look like T(2), T(9) or T1(9)");
    std::string head = name.substr(0, open);
    std::string arg = name.substr(open + 1, close - open - 1);
    Int ell, power = 1;
    auto caret = arg.find('^');
    if (caret != std::string::npos) {
        ell = std::stoll(arg.substr(0, caret));
        power = std::stoll(arg.substr(caret + 1));
    } else {
        Int value = std::stoll(arg);
        if (is_prime(value)) {
            ell = value;
        } else {
            // accept the square written out, e.g. T(4) or T1(9)
            Int root = 1;
            while (root * root < value) ++root;
            check(root * root == value && is_prime(root), "BadOperator",
                  "operator argument must be ell or ell^2 for a prime ell");
            ell = root;
            power = 2;
        }
    }
    check(power == 1 || power == 2, "BadOperator", "only ell and ell^2 operators are named");
    std::ostringstream canonical;
    canonical << head << "(" << ell;
    if (power == 2) canonical << "^2";
    canonical << ")";
    return {ell, canonical.str()};
}

// tiny expression grammar for clifford-eval: + - *, scalars, c1..c(2g+1)
class ExprParser {
public:
    ExprParser(std::string text, Int g, RingDesc ring)
        : text_(std::move(text)), g_(g), ring_(std::move(ring)) {}

    CliffordElement parse() {
        CliffordElement e = expression();
        skip_space();
        check(pos_ == text_.size(), "ParseError", "trailing input in expression");
        return e;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    CliffordElement expression() {
        CliffordElement acc = term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }
    CliffordElement term() {
        CliffordElement acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }
    CliffordElement factor() {
        if (eat('-')) return CliffordElement::zero(g_, ring_) - factor();
        return atom();
    }
    CliffordElement atom() {
        skip_space();
        check(pos_ < text_.size(), "ParseError", "unexpected end of expression");
        if (eat('(')) {
            CliffordElement e = expression();
            check(eat(')'), "ParseError", "missing closing parenthesis");
            return e;
        }
        char c = text_[pos_];
        if (c == 'c') {
            ++pos_;
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            check(pos_ > start, "ParseError", "generator needs an index, e.g. c1");
            Int idx = std::stoll(text_.substr(start, pos_ - start));
            return CliffordElement::generator(g_, ring_, idx);
        }
        check(std::isdigit(static_cast<unsigned char>(c)), "ParseError",
              std::string("unexpected character '") + c + "'");
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
            ++pos_;
        std::string num = text_.substr(start, pos_ - start);
        Rational q;
        auto slash = num.find('/');
        if (slash == std::string::npos)
            q = Rational(BigInt(num));
        else
            q = Rational(BigInt(num.substr(0, slash)), BigInt(num.substr(slash + 1)));
        return CliffordElement::scalar(g_, ring_, RingValue::from_rational(ring_, q));
    }

    std::string text_;
    size_t pos_ = 0;
    Int g_;
    RingDesc ring_;
};

std::uint64_t effective_seed(std::uint64_t cli_seed) {
    if (const char* env = std::getenv("SIEGEL_SEED")) return std::stoull(env);
    return cli_seed;
}

int run(int argc, char** argv) {
    CLI::App app{"exact computations with degree-g modular form expansions, "
                 "double-coset operators and their eigensystem bookkeeping"};
    app.require_subcommand(1);

    // ---- rootdatum
    Int rd_g = 1;
    auto* cmd_rd = app.add_subcommand("rootdatum", "print the lattice data for a given degree");
    cmd_rd->add_option("--g", rd_g, "degree")->required();

    // ---- dominance
    Int dom_g = 1;
    std::string dom_lam, dom_mu;
    auto* cmd_dom = app.add_subcommand("dominance", "compare two dominant cocharacters");
    cmd_dom->add_option("--g", dom_g)->required();
    cmd_dom->add_option("--lam", dom_lam, "a1,..,a(g+1)")->required();
    cmd_dom->add_option("--mu", dom_mu, "b1,..,b(g+1)")->required();

    // ---- clifford-eval
    Int cl_g = 1;
    std::string cl_ring = "Q", cl_expr;
    auto* cmd_cl = app.add_subcommand("clifford-eval", "evaluate a generator expression");
    cmd_cl->add_option("--g", cl_g)->required();
    cmd_cl->add_option("--ring", cl_ring, "Q | Fp:P | QZeta:M | FpExt:P:c0,c1,..");
    cmd_cl->add_option("--expr", cl_expr, "expression in c1..c(2g+1), + - *, scalars")->required();

    // ---- qexp family
    auto* cmd_qexp = app.add_subcommand("qexp", "expansion file utilities");
    cmd_qexp->require_subcommand(1);
    Int qe_k = 4, qe_tau = 10;
    std::string qe_out;
    auto* cmd_eis = cmd_qexp->add_subcommand("eisenstein", "weight-k series, genus 1");
    cmd_eis->add_option("--k", qe_k)->required();
    cmd_eis->add_option("--tau", qe_tau)->required();
    cmd_eis->add_option("-o,--out", qe_out);
    Int qd_tau = 10;
    std::string qd_out;
    auto* cmd_delta = cmd_qexp->add_subcommand("delta", "discriminant cusp form, genus 1");
    cmd_delta->add_option("--tau", qd_tau)->required();
    cmd_delta->add_option("-o,--out", qd_out);
    std::string qm_a, qm_b, qm_out;
    auto* cmd_mul = cmd_qexp->add_subcommand("mul", "product of two expansions");
    cmd_mul->add_option("a", qm_a)->required();
    cmd_mul->add_option("b", qm_b)->required();
    cmd_mul->add_option("-o,--out", qm_out);
    std::string qa_a, qa_b, qa_out, qa_ca = "1", qa_cb = "1";
    auto* cmd_add = cmd_qexp->add_subcommand("add", "linear combination ca*a + cb*b");
    cmd_add->add_option("a", qa_a)->required();
    cmd_add->add_option("b", qa_b)->required();
    cmd_add->add_option("--ca", qa_ca, "left scalar (ring encoding)");
    cmd_add->add_option("--cb", qa_cb, "right scalar (ring encoding)");
    cmd_add->add_option("-o,--out", qa_out);
    Int qr_p = 5;
    std::string qr_in, qr_out, qr_zeta;
    auto* cmd_red = cmd_qexp->add_subcommand("reduce", "coefficientwise reduction mod p");
    cmd_red->add_option("--p", qr_p)->required();
    cmd_red->add_option("--zeta", qr_zeta, "image of the root of unity (target ring encoding)");
    cmd_red->add_option("in", qr_in)->required();
    cmd_red->add_option("-o,--out", qr_out);

    // ---- theta
    auto* cmd_theta = app.add_subcommand("theta", "diagonal theta operator");
    cmd_theta->require_subcommand(1);
    Int th_p = 5;
    std::optional<Int> th_k1;
    bool th_via = false;
    std::string th_in, th_h, th_out;
    auto* cmd_bn = cmd_theta->add_subcommand("bn", "multiply coefficients by det(n)/N^g mod p");
    cmd_bn->add_option("--p", th_p)->required();
    cmd_bn->add_flag("--via-bracket", th_via, "compute through the bracket construction");
    cmd_bn->add_option("--H", th_h, "weight p-1 rational series congruent to 1 mod p");
    cmd_bn->add_option("--k1", th_k1, "weight of the input (bracket route)");
    cmd_bn->add_option("in", th_in)->required();
    cmd_bn->add_option("-o,--out", th_out);

    // ---- bracket
    Int br_k1 = 4, br_k2 = 6;
    std::string br_f, br_g, br_out;
    auto* cmd_br = app.add_subcommand("bracket", "bilinear differential bracket of two expansions");
    cmd_br->add_option("--k1", br_k1)->required();
    cmd_br->add_option("--k2", br_k2)->required();
    cmd_br->add_option("f", br_f)->required();
    cmd_br->add_option("g", br_g)->required();
    cmd_br->add_option("-o,--out", br_out);

    // ---- cosets
    Int co_g = 1, co_ell = 2;
    std::string co_lam, co_op;
    auto* cmd_co = app.add_subcommand("cosets", "right-coset representatives of a double coset");
    cmd_co->add_option("--g", co_g)->required();
    cmd_co->add_option("--ell", co_ell, "prime (needed with --lam)");
    cmd_co->add_option("--lam", co_lam, "dominant cocharacter a1,..,a(g+1)");
    cmd_co->add_option("--op", co_op, "operator name, e.g. T(2) or T1(9)");

    // ---- hecke-apply
    std::string ha_op, ha_in, ha_out, ha_lam;
    Int ha_k = 12, ha_tau_out = -1, ha_ell = 0;
    auto* cmd_ha = app.add_subcommand("hecke-apply", "apply a double-coset operator");
    cmd_ha->add_option("--op", ha_op, "operator name, e.g. T(2)");
    cmd_ha->add_option("--lam", ha_lam, "generic dominant cocharacter (with --ell)");
    cmd_ha->add_option("--ell", ha_ell, "prime for --lam form");
    cmd_ha->add_option("--k", ha_k, "weight")->required();
    cmd_ha->add_option("--tau-out", ha_tau_out, "output trace bound (default tau/ell^r)");
    cmd_ha->add_option("in", ha_in)->required();
    cmd_ha->add_option("-o,--out", ha_out);

    // ---- commute-check
    Int cc_g = 1, cc_ell = 2, cc_p = 5, cc_k = 4, cc_tau_out = 6, cc_trials = 10;
    std::uint64_t cc_seed = 0;
    std::string cc_in, cc_op;
    auto* cmd_cc = app.add_subcommand("commute-check",
                                      "verify the theta/Hecke commutation on series");
    cmd_cc->add_option("--g", cc_g);
    cmd_cc->add_option("--ell", cc_ell);
    cmd_cc->add_option("--p", cc_p);
    cmd_cc->add_option("--k", cc_k);
    cmd_cc->add_option("--tau-out", cc_tau_out);
    cmd_cc->add_option("--trials", cc_trials);
    cmd_cc->add_option("--seed", cc_seed);
    cmd_cc->add_option("--in", cc_in, "mod-p expansion file (instead of random series)");
    cmd_cc->add_option("--op", cc_op, "operator name (default T(ell))");

    // ---- satake-verify
    Int sv_g = 1, sv_ell = 2, sv_p = 7, sv_m = 1, sv_trials = 10;
    std::uint64_t sv_seed = 0;
    std::string sv_lam, sv_table;
    auto* cmd_sv = app.add_subcommand("satake-verify",
                                      "replay both evaluation chains of the twisting identity");
    cmd_sv->add_option("--g", sv_g)->required();
    cmd_sv->add_option("--ell", sv_ell)->required();
    cmd_sv->add_option("--p", sv_p)->required();
    cmd_sv->add_option("--m", sv_m)->required();
    cmd_sv->add_option("--lam", sv_lam)->required();
    cmd_sv->add_option("--seed", sv_seed);
    cmd_sv->add_option("--trials", sv_trials);
    cmd_sv->add_option("--table", sv_table, "coefficient table file: lam ; mu ; value");

    // ---- selftest
    bool st_quick = false;
    std::uint64_t st_seed = 0;
    auto* cmd_st = app.add_subcommand("selftest", "run the acceptance suite");
    cmd_st->add_flag("--quick", st_quick, "reduced random-trial counts");
    cmd_st->add_option("--seed", st_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cmd_rd->parsed()) {
        RootDatum rd = build_root_datum(rd_g);
        std::cout << "degree g = " << rd.g << "\n";
        for (Int j = 0; j < rd.g; ++j)
            std::cout << "simple root " << j + 1 << ": " << rd.simple_roots[j].to_string()
                      << "   coroot: " << rd.simple_coroots[j].to_string() << "\n";
        std::cout << "positive roots (" << rd.positive_roots.size() << "):\n";
        for (const auto& r : rd.positive_roots) std::cout << "  " << r.to_string() << "\n";
        std::cout << "positive coroots (" << rd.positive_coroots.size() << "):\n";
        for (const auto& c : rd.positive_coroots) std::cout << "  " << c.to_string() << "\n";
        std::cout << "2rho = " << rd.rho2.to_string() << "\n";
        std::cout << "2rho-hat = " << rd.rho2_hat.to_string() << "\n";
        return 0;
    }
    if (cmd_dom->parsed()) {
        Cocharacter lam = parse_cochar(dom_g, dom_lam), mu = parse_cochar(dom_g, dom_mu);
        auto witness = dominance_witness(lam, mu);
        if (!witness) {
            std::cout << "incomparable\n";
        } else {
            std::cout << "witness";
            for (Int n : *witness) std::cout << " " << n;
            std::cout << "\n";
        }
        return 0;
    }
    if (cmd_cl->parsed()) {
        RingDesc ring = RingDesc::parse(cl_ring);
        CliffordElement e = ExprParser(cl_expr, cl_g, ring).parse();
        std::cout << e.to_string() << "\n";
        return 0;
    }
    if (cmd_eis->parsed()) {
        store_expansion(qe_out, eisenstein(qe_k, qe_tau));
        return 0;
    }
    if (cmd_delta->parsed()) {
        store_expansion(qd_out, delta_series(qd_tau));
        return 0;
    }
    if (cmd_mul->parsed()) {
        store_expansion(qm_out, qexp_mul(load_expansion(qm_a), load_expansion(qm_b)));
        return 0;
    }
    if (cmd_add->parsed()) {
        QExpansion a = load_expansion(qa_a), b = load_expansion(qa_b);
        RingValue ca = RingValue::parse(a.ring(), qa_ca), cb = RingValue::parse(a.ring(), qa_cb);
        store_expansion(qa_out, qexp_linear(ca, a, cb, b));
        return 0;
    }
    if (cmd_red->parsed()) {
        QExpansion f = load_expansion(qr_in);
        std::optional<RingValue> zeta;
        if (!qr_zeta.empty()) {
            // the zeta image is given in the extension ring's encoding: P:c0,c1,..
            auto colon = qr_zeta.find(':');
            check(colon != std::string::npos, "ParseError", "--zeta needs modulus:coeffs");
            RingDesc ext = RingDesc::parse("FpExt:" + std::to_string(qr_p) + ":" +
                                           qr_zeta.substr(0, colon));
            zeta = RingValue::parse(ext, qr_zeta.substr(colon + 1));
        }
        store_expansion(qr_out, reduce_mod_p(f, qr_p, zeta));
        return 0;
    }
    if (cmd_bn->parsed()) {
        QExpansion f = load_expansion(th_in);
        if (th_via) {
            check(!th_h.empty(), "BadKernelSeries", "--via-bracket needs --H");
            store_expansion(th_out, theta_bn_via_bracket(f, load_expansion(th_h), th_p, th_k1));
        } else {
            check(f.ring().kind() == RingKind::PrimeField && f.ring().p() == th_p, "BadRing",
                  "direct route expects an Fp:" + std::to_string(th_p) + " expansion");
            store_expansion(th_out, theta_bn_direct(f));
        }
        return 0;
    }
    if (cmd_br->parsed()) {
        QExpansion f = load_expansion(br_f), g = load_expansion(br_g);
        store_expansion(br_out, bracket(f, g, PQContext(f.g(), br_k1, br_k2)));
        return 0;
    }
    if (cmd_co->parsed()) {
        std::vector<CosetRep> reps;
        if (!co_op.empty()) {
            auto [ell, canonical] = parse_operator_name(co_op);
            HeckeOperator op = hecke_operator(co_g, ell, canonical);
            for (const auto& comp : op.components)
                reps.insert(reps.end(), comp.reps.begin(), comp.reps.end());
        } else {
            check(!co_lam.empty(), "BadOperator", "need --lam or --op");
            reps = coset_reps(co_g, co_ell, parse_cochar(co_g, co_lam));
        }
        for (const auto& rep : reps) {
            IMat m = rep.assembled();
            for (int i = 0; i < m.rows; ++i)
                for (int j = 0; j < m.cols; ++j)
                    std::cout << m(i, j) << (i == m.rows - 1 && j == m.cols - 1 ? "" : " ");
            std::cout << "\n";
        }
        std::cout << "# " << reps.size() << " representatives\n";
        return 0;
    }
    if (cmd_ha->parsed()) {
        QExpansion f = load_expansion(ha_in);
        HeckeOperator op = [&] {
            if (!ha_lam.empty()) {
                check(ha_ell != 0, "BadOperator", "--lam needs --ell");
                return hecke_operator_for(parse_cochar(f.g(), ha_lam), ha_ell);
            }
            check(!ha_op.empty(), "BadOperator", "need --op or --lam");
            auto [ell, canonical] = parse_operator_name(ha_op);
            return hecke_operator(f.g(), ell, canonical);
        }();
        Int ell_pow_r = 1;
        for (Int t = 0; t < op.r; ++t) ell_pow_r *= op.ell;
        Int tau_out = ha_tau_out >= 0 ? ha_tau_out : f.tau() / ell_pow_r;
        store_expansion(ha_out, hecke_apply(op, ha_k, f, tau_out));
        return 0;
    }
    if (cmd_cc->parsed()) {
        HeckeOperator op = [&] {
            if (!cc_op.empty()) {
                auto [ell, canonical] = parse_operator_name(cc_op);
                return hecke_operator(cc_g, ell, canonical);
            }
            return hecke_operator(cc_g, cc_ell, "T(" + std::to_string(cc_ell) + ")");
        }();
        bool all_ok = true;
        if (!cc_in.empty()) {
            QExpansion f = load_expansion(cc_in);
            CommutationReport rep = commutation_check(f, cc_k, op);
            std::cout << (rep.ok ? "PASS " : "FAIL ") << rep.detail << "\n";
            all_ok = rep.ok;
        } else {
            Rng rng(effective_seed(cc_seed));
            Int ell_pow_r = 1;
            for (Int t = 0; t < op.r; ++t) ell_pow_r *= op.ell;
            RingDesc fp = RingDesc::prime_field(cc_p);
            const int fill = cc_g == 1 ? 60 : 10;
            for (Int t = 0; t < cc_trials; ++t) {
                QExpansion f =
                    random_qexpansion(cc_g, 1, fp, ell_pow_r * cc_tau_out, rng, fill);
                CommutationReport rep = commutation_check(f, cc_k, op);
                std::cout << "trial " << t << ": " << (rep.ok ? "PASS " : "FAIL ") << rep.detail
                          << "\n";
                all_ok = all_ok && rep.ok;
            }
        }
        return all_ok ? 0 : 1;
    }
    if (cmd_sv->parsed()) {
        Cocharacter lam = parse_cochar(sv_g, sv_lam);
        auto [field, v_image] = square_root_field(sv_ell, sv_p);
        Rng rng(effective_seed(sv_seed));
        RingDesc fp = RingDesc::prime_field(sv_p);
        std::optional<SatakeCoefficients> fixed_table;
        if (!sv_table.empty()) {
            SatakeCoefficients t(sv_g, fp);
            std::ifstream in(sv_table);
            check(in.good(), "FileError", "cannot open " + sv_table);
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#') continue;
                std::istringstream ls(line);
                std::string lam_s, mu_s, val_s;
                std::getline(ls, lam_s, ';');
                std::getline(ls, mu_s, ';');
                std::getline(ls, val_s);
                auto strip = [](std::string s) {
                    size_t a = s.find_first_not_of(" \t");
                    size_t b = s.find_last_not_of(" \t");
                    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
                };
                t.set(parse_cochar(sv_g, strip(lam_s)), parse_cochar(sv_g, strip(mu_s)),
                      VLaurent::constant(RingValue::parse(fp, strip(val_s))));
            }
            t.validate();
            fixed_table = std::move(t);
        }
        bool all_ok = true;
        int distinct = 0;
        for (Int t = 0; t < sv_trials; ++t) {
            SatakeCoefficients d =
                fixed_table ? *fixed_table : random_unitriangular(lam, fp, rng);
            Eigensystem psi = random_eigensystem(lam, sv_ell, sv_p, field, rng);
            MainTheoremResult res = main_theorem_verify(lam, d, psi, sv_m, sv_ell, sv_p, v_image);
            std::cout << "--- trial " << t << " ---\n" << res.transcript;
            all_ok = all_ok && res.ok;
            if (res.symbolically_distinct) ++distinct;
        }
        std::cout << "summary: " << (all_ok ? "PASS" : "FAIL") << " (" << sv_trials
                  << " trials, " << distinct << " with symbolically distinct chains)\n";
        return all_ok ? 0 : 1;
    }
    if (cmd_st->parsed()) {
        SelftestOptions opt;
        opt.quick = st_quick;
        opt.seed = effective_seed(st_seed);
        auto results = run_selftest(opt);
        bool ok = report_selftest(std::cout, results);
        return ok ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const siegel::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
