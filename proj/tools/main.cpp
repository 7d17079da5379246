#include "momentlab/core.hpp"
#include "momentlab/growth.hpp"
#include "momentlab/multizeta.hpp"
#include "momentlab/nevanlinna.hpp"
#include "momentlab/recurrences.hpp"
#include "momentlab/valent.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr const char* kVersion = "0.1.0";

using namespace momentlab;
using nlohmann::json;

struct GlobalOpts {
    unsigned precision_bits = 256;
    std::string out;
    std::string format = "text";
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(g.out);
        if (!f) throw InvalidInputError("cannot open output file: " + g.out);
        f << text;
        if (!text.empty() && text.back() != '\n') f << '\n';
    }
}

json run_config(const GlobalOpts& g) {
    return {{"version", kVersion}, {"precision_bits", g.precision_bits}, {"format", g.format}};
}

std::vector<Real> parse_reals(const std::string& csv) {
    std::vector<Real> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw InvalidInputError("empty entry in list: " + csv);
        out.push_back(real_from_string(item));
    }
    return out;
}

PolynomialRates make_rates(int p, const std::string& e_csv, const std::string& d_csv,
                           bool default_symmetric) {
    PolynomialRates pr;
    pr.p = p;
    if (default_symmetric) {
        if (!e_csv.empty() || !d_csv.empty())
            throw InvalidInputError("--default-symmetric excludes --e/--d");
        pr.e.assign(p, Real(p) / 2);
        pr.d.assign(p, Real(0));
    } else {
        if (e_csv.empty() || d_csv.empty())
            throw InvalidInputError("--e and --d are required (or use --default-symmetric)");
        pr.e = parse_reals(e_csv);
        pr.d = parse_reals(d_csv);
    }
    pr.validate();
    return pr;
}

std::string results_table(const GlobalOpts& g, const json& config,
                          const std::vector<SumResult>& rows, int first_n) {
    if (g.format == "csv") {
        std::ostringstream os;
        os << "n,value,K_used,stability\n";
        for (std::size_t i = 0; i < rows.size(); ++i)
            os << first_n + static_cast<int>(i) << ',' << to_decimal_string(rows[i].value) << ','
               << rows[i].K_used << ',' << to_decimal_string(rows[i].stability) << '\n';
        return os.str();
    }
    if (g.format == "json") {
        json j;
        j["config"] = config;
        j["rows"] = json::array();
        for (std::size_t i = 0; i < rows.size(); ++i)
            j["rows"].push_back({{"n", first_n + static_cast<int>(i)},
                                 {"value", to_decimal_string(rows[i].value)},
                                 {"K_used", rows[i].K_used},
                                 {"stability", to_decimal_string(rows[i].stability)},
                                 {"tail_corrected", rows[i].tail_corrected}});
        return j.dump(2);
    }
    std::ostringstream os;
    os << "  n  value (25 digits)            K_used     stability\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
        os << std::setw(3) << first_n + static_cast<int>(i) << "  " << std::setw(28) << std::left
           << rows[i].value.str(25) << std::right << std::setw(9) << rows[i].K_used << "  "
           << rows[i].stability.str(3) << '\n';
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"momentlab: order and type of indeterminate moment problems"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough(); // options after the subcommand bind upward

    GlobalOpts g;
    app.add_option("--precision-bits", g.precision_bits, "working precision (>= 64)")
        ->capture_default_str();
    app.add_option("--out", g.out, "output file (default stdout)");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    // multizeta
    auto* mz = app.add_subcommand("multizeta", "interleaved multi-zeta sums");
    std::string mz_kind = "gamma";
    std::string mz_p, mz_e, mz_d;
    int mz_nmax = 10;
    long mz_K = 100000;
    mz->add_option("--kind", mz_kind)->check(CLI::IsMember({"gamma", "zeta", "sigma"}));
    mz->add_option("--p", mz_p, "exponent p (gamma/zeta) or integer p of the rates (sigma)");
    mz->add_option("--e", mz_e, "sigma: comma list e_1..e_p");
    mz->add_option("--d", mz_d, "sigma: comma list d_1..d_p");
    mz->add_option("--n-max", mz_nmax)->capture_default_str();
    mz->add_option("--K", mz_K, "truncation ceiling")->capture_default_str();

    // valent
    auto* va = app.add_subcommand("valent", "full order/type pipeline for polynomial rates");
    int va_p = 0;
    std::string va_e, va_d;
    bool va_default = false, va_gate = false;
    int va_ncoeffs = 100;
    long va_K = 10000;
    va->add_option("--p", va_p, "degree p")->required();
    va->add_option("--e", va_e, "comma list e_1..e_p");
    va->add_option("--d", va_d, "comma list d_1..d_p");
    va->add_flag("--default-symmetric", va_default, "use e_j = p/2, d_j = 0");
    va->add_option("--n-coeffs", va_ncoeffs)->capture_default_str();
    va->add_option("--K", va_K)->capture_default_str();
    va->add_flag("--gate", va_gate, "exit 4 unless order and type flags pass");

    // growth
    auto* gr = app.add_subcommand("growth", "order/type estimators on a series file");
    std::string gr_file, gr_rho;
    gr->add_option("--series", gr_file, "series JSON file")->required();
    gr->add_option("--rho", gr_rho, "order for the type estimate (omit for order estimate)");

    // nevanlinna
    auto* nv = app.add_subcommand("nevanlinna", "truncated matrix identities and C-function check");
    int nv_p = 0;
    std::string nv_e, nv_d;
    bool nv_default = false;
    int nv_ncoeffs = 10;
    long nv_K = 2000, nv_depth = 40;
    nv->add_option("--p", nv_p)->required();
    nv->add_option("--e", nv_e);
    nv->add_option("--d", nv_d);
    nv->add_flag("--default-symmetric", nv_default);
    nv->add_option("--n-coeffs", nv_ncoeffs)->capture_default_str();
    nv->add_option("--K", nv_K)->capture_default_str();
    nv->add_option("--depth", nv_depth, "product truncation for the determinant check")
        ->capture_default_str();

    // tc
    auto* tc = app.add_subcommand("tc", "T_c estimate vs the Beta-function conjecture");
    std::string tc_c = "2";
    int tc_nmax = 80;
    long tc_K = 100000;
    tc->add_option("--c", tc_c)->capture_default_str();
    tc->add_option("--n-max", tc_nmax)->capture_default_str();
    tc->add_option("--K", tc_K)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        set_precision_bits(g.precision_bits);
        json config = run_config(g);

        if (*mz) {
            config["subcommand"] = "multizeta";
            config["kind"] = mz_kind;
            config["n_max"] = mz_nmax;
            config["K"] = mz_K;
            if (mz_kind == "sigma") {
                int p = mz_p.empty() ? 0 : std::stoi(mz_p);
                PolynomialRates pr = make_rates(p, mz_e, mz_d, mz_e.empty() && mz_d.empty());
                ZeroSequences z = zero_sequences_for(pr, mz_K);
                auto rows = interleaved_sums(table_weight(z.u), table_weight(z.v), 1, mz_nmax,
                                             std::min<long>(mz_K, z.n_max()));
                emit(g, results_table(g, config, rows, 1));
            } else {
                if (mz_p.empty()) throw InvalidInputError("--p is required for gamma/zeta");
                Real p = real_from_string(mz_p);
                config["p"] = mz_p;
                if (mz_kind == "gamma")
                    emit(g, results_table(g, config, gamma_n(p, mz_nmax, mz_K), 1));
                else
                    emit(g, results_table(g, config, zeta_n(p, mz_nmax, mz_K), 2));
            }
        } else if (*va) {
            config["subcommand"] = "valent";
            PolynomialRates pr = make_rates(va_p, va_e, va_d, va_default);
            ValentBudget budget;
            budget.n_coeffs = va_ncoeffs;
            budget.K = va_K;
            ValentReport rep = full_report(pr, budget);
            if (g.format == "json") {
                json j = json::parse(report_to_json(rep));
                j["config"] = config;
                emit(g, j.dump(2));
            } else {
                emit(g, report_to_text(rep));
            }
            if (va_gate && !(rep.order_ok && rep.type_ok)) return 4;
        } else if (*gr) {
            config["subcommand"] = "growth";
            std::ifstream f(gr_file);
            if (!f) throw InvalidInputError("cannot open series file: " + gr_file);
            std::stringstream buf;
            buf << f.rdbuf();
            CoefficientSeries s = series_from_json(buf.str());
            GrowthEstimate est =
                gr_rho.empty() ? order_estimate(s) : type_estimate(s, real_from_string(gr_rho));
            json j = json::parse(estimate_to_json(est));
            j["config"] = config;
            emit(g, g.format == "text"
                        ? (gr_rho.empty() ? "rho_hat = " + to_decimal_string(est.rho_hat)
                                          : "tau_hat = " + to_decimal_string(est.tau_hat))
                        : j.dump(2));
        } else if (*nv) {
            config["subcommand"] = "nevanlinna";
            PolynomialRates pr = make_rates(nv_p, nv_e, nv_d, nv_default);
            BirthDeathRates rates = pr.tabulate(nv_K + 2);
            JacobiParams jp = rates_to_jacobi(rates, nv_K);
            CCheckReport rep = stieltjes_symmetric_c_check(jp, nv_ncoeffs, nv_K);
            ZeroSequences z = zero_sequences_for(pr, std::max<long>(nv_depth, 4));
            NevanlinnaTruncation t = truncated_product(z, nv_depth);
            Poly det = t.determinant();
            Real det_dev = abs(det[0] - 1);
            for (std::size_t k = 1; k < det.size(); ++k) det_dev = std::max(det_dev, abs(det[k]));
            json j;
            j["config"] = config;
            j["determinant_deviation"] = to_decimal_string(det_dev);
            j["max_rel_gap"] = to_decimal_string(rep.max_rel_gap);
            j["max_odd_coefficient"] = to_decimal_string(rep.max_odd_coefficient);
            j["consistent"] = rep.consistent;
            j["stieltjes_coefficients"] = json::array();
            for (const auto& c : rep.stieltjes)
                j["stieltjes_coefficients"].push_back(to_decimal_string(c));
            if (g.format == "text") {
                std::ostringstream os;
                os << "determinant deviation: " << det_dev.str(3) << "\n"
                   << "C_s(z) = C(z^2) max relative gap: " << rep.max_rel_gap.str(3) << "\n"
                   << "max odd coefficient: " << rep.max_odd_coefficient.str(3) << "\n"
                   << "consistent: " << (rep.consistent ? "yes" : "no") << "\n";
                emit(g, os.str());
            } else {
                emit(g, j.dump(2));
            }
        } else if (*tc) {
            config["subcommand"] = "tc";
            Real c = real_from_string(tc_c);
            Real est_g = tc_estimate(c, tc_nmax, tc_K);
            Real est_z = tc_estimate(c, tc_nmax, tc_K, true);
            Real conj = tc_conjecture(c);
            json j;
            j["config"] = config;
            j["c"] = tc_c;
            j["Tc_from_gamma"] = to_decimal_string(est_g);
            j["Tc_from_zeta"] = to_decimal_string(est_z);
            j["Tc_conjectured"] = to_decimal_string(conj);
            if (g.format == "text") {
                std::ostringstream os;
                os << "T_c from gamma_n(2c): " << est_g.str(10) << "\n"
                   << "T_c from zeta_n(2c):  " << est_z.str(10) << "\n"
                   << "B(1/(2c), 1-1/c):     " << conj.str(10) << " (conjectured)\n";
                emit(g, os.str());
            } else {
                emit(g, j.dump(2));
            }
        }
    } catch (const InvalidInputError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 3;
    }
    return 0;
}
