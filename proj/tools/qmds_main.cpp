#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qmds/failure.hpp"
#include "qmds/field.hpp"
#include "qmds/grs.hpp"
#include "qmds/matrix_io.hpp"
#include "qmds/params.hpp"
#include "qmds/reproduce.hpp"
#include "qmds/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

json params_to_json(const qmds::ConstructionParams& P) {
    return json{{"q", P.q},         {"lambda", P.lambda}, {"tau", P.tau},
                {"rho", P.rho},     {"sigma", P.sigma},   {"kappa", P.kappa},
                {"case", P.case_id}, {"L", P.L},           {"T", P.T},
                {"n", P.n}};
}

json certificate_to_json(const qmds::Certificate& cert) {
    json mds{{"mode", cert.mds.mode == qmds::MdsMode::full ? "full" : "sampled_structural"},
             {"all_nonzero", cert.mds.all_nonzero},
             {"minors_checked", cert.mds.minors_checked},
             {"seed", cert.mds.seed},
             {"structural_ok",
              cert.mds.structural_ok ? json(*cert.mds.structural_ok) : json(nullptr)}};
    return json{{"params", params_to_json(cert.params)},
                {"k", cert.k},
                {"self_orthogonal", cert.self_orthogonal},
                {"self_orth_pairs", cert.self_orth_pairs},
                {"mds", mds},
                {"exhaustive_distance",
                 cert.exhaustive_distance ? json(*cert.exhaustive_distance) : json(nullptr)},
                {"quantum",
                 json{{"q", cert.quantum.q},
                      {"n", cert.quantum.n},
                      {"k_Q", cert.quantum.k_q},
                      {"d", cert.quantum.d}}},
                {"notes", cert.notes},
                {"violations", cert.violations},
                {"ok", cert.ok()}};
}

std::string quantum_str(const qmds::QuantumCodeParams& Q) {
    std::ostringstream os;
    os << "[[" << Q.n << "," << Q.k_q << "," << Q.d << "]]_" << Q.q;
    return os.str();
}

int cmd_enumerate(uint32_t q, std::optional<uint64_t> max_n, const std::string& format) {
    std::vector<qmds::ConstructionParams> rows = qmds::enumerate_params(q, max_n);
    if (format == "json") {
        json arr = json::array();
        for (const auto& P : rows) arr.push_back(params_to_json(P));
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    std::cout << std::left << std::setw(6) << "q" << std::setw(8) << "lambda" << std::setw(6)
              << "tau" << std::setw(6) << "rho" << std::setw(7) << "sigma" << std::setw(7)
              << "kappa" << std::setw(6) << "case" << std::setw(5) << "L" << std::setw(5) << "T"
              << "n\n";
    for (const auto& P : rows)
        std::cout << std::left << std::setw(6) << P.q << std::setw(8) << P.lambda << std::setw(6)
                  << P.tau << std::setw(6) << P.rho << std::setw(7) << P.sigma << std::setw(7)
                  << P.kappa << std::setw(6) << P.case_id << std::setw(5) << P.L << std::setw(5)
                  << P.T << P.n << "\n";
    return 0;
}

int cmd_construct(uint32_t q, uint32_t lambda, uint32_t tau, uint32_t rho, uint32_t sigma,
                  uint32_t d, const std::string& out_path) {
    qmds::ConstructionParams P = qmds::validate_params(q, lambda, tau, rho, sigma);
    if (d < 2 || d > P.T)
        throw qmds::ParamError("distance-range",
                               "d = " + std::to_string(d) +
                                   " must satisfy 2 <= d <= T = " + std::to_string(P.T));
    auto pm = qmds::prime_power_decomposition(q);
    qmds::FieldContext F = qmds::FieldContext::make(pm->first, pm->second);
    qmds::GeneratorMatrix G = qmds::generator_matrix(F, P, d - 1);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw qmds::Error("cannot open '" + out_path + "' for writing");
    out << qmds::serialize_matrix(F, P, G);
    out.close();
    qmds::QuantumCodeParams Q = qmds::derive_quantum_params(P, d);
    std::cout << quantum_str(Q) << " case=" << P.case_id << " L=" << P.L << " T=" << P.T << " -> "
              << out_path << "\n";
    return 0;
}

int cmd_verify(const std::string& path, const qmds::VerifyCaps& caps) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qmds::Error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    qmds::LoadedMatrix M = qmds::parse_matrix(buf.str());
    qmds::Certificate cert = qmds::certify_matrix(M.ctx, M.G, caps);
    std::cout << certificate_to_json(cert).dump(2) << "\n";
    return cert.ok() ? 0 : 1;
}

int cmd_oracle(uint32_t lambda, uint32_t tau, uint32_t rho, std::optional<int64_t> L_opt,
               std::optional<int64_t> bound_opt, bool all_L, bool as_json) {
    if (lambda < 2 || tau < 2 || rho < 2)
        throw qmds::ParamError("moduli-range", "lambda, tau and rho must all exceed 1");
    const int64_t bound = bound_opt.value_or(qmds::default_search_bound(lambda, tau));

    bool admissible = true;
    int case_id = 0;
    uint32_t opt_L = 0;
    qmds::FailurePoint closed{};
    try {
        case_id = qmds::classify_case(lambda, tau, rho);
        uint32_t kappa = std::gcd(lambda, rho) * std::gcd(tau, rho);
        if (rho / kappa < 2) admissible = false;
        if (admissible) {
            opt_L = qmds::optimal_L(case_id, lambda, tau);
            closed = qmds::first_failure_point_closed_form(case_id, lambda, tau);
        }
    } catch (const qmds::Error&) {
        admissible = false;
    }

    std::vector<uint32_t> residues;
    if (all_L) {
        for (uint32_t L = 0; L < lambda; ++L) residues.push_back(L);
    } else if (L_opt) {
        if (*L_opt < 0) throw qmds::Error("L must be non-negative");
        residues.push_back(static_cast<uint32_t>(*L_opt % lambda));
    } else if (admissible) {
        residues.push_back(opt_L);
    } else {
        throw qmds::ParamError("oracle-L",
                               "tuple fails the construction hypotheses; give --L explicitly");
    }

    json arr = json::array();
    int64_t best_T2 = -1;
    std::vector<uint32_t> best_L;
    for (uint32_t L : residues) {
        auto fp = qmds::first_failure_point_bruteforce(lambda, tau, rho, L, bound);
        bool at_optimal = admissible && L == opt_L;
        json row{{"lambda", lambda}, {"tau", tau}, {"rho", rho}, {"L", L}};
        if (fp) {
            row["T1"] = fp->e1;
            row["T2"] = fp->e2;
            if (fp->e2 > best_T2) {
                best_T2 = fp->e2;
                best_L.clear();
            }
            if (fp->e2 == best_T2) best_L.push_back(L);
        } else {
            row["T1"] = nullptr;
            row["T2"] = nullptr;
        }
        row["matches_closed_form"] =
            at_optimal ? json(fp && *fp == closed) : json(nullptr);
        arr.push_back(row);
        if (!as_json) {
            std::cout << "L=" << L << " first_failure=";
            if (fp)
                std::cout << "(" << fp->e1 << "," << fp->e2 << ")";
            else
                std::cout << "none within bound " << bound;
            if (at_optimal)
                std::cout << " closed_form=(" << closed.e1 << "," << closed.e2 << ") match="
                          << ((fp && *fp == closed) ? "yes" : "no");
            std::cout << "\n";
        }
    }
    if (as_json) {
        std::cout << arr.dump(2) << "\n";
    } else if (all_L) {
        std::cout << "argmax T2=" << best_T2 << " at L in {";
        for (size_t i = 0; i < best_L.size(); ++i) std::cout << (i ? "," : "") << best_L[i];
        std::cout << "}";
        if (admissible) std::cout << " (table optimal L=" << opt_L << ")";
        std::cout << "\n";
    }
    return 0;
}

int cmd_reproduce(const std::string& fixture, std::optional<uint32_t> q_opt,
                  std::optional<uint32_t> m_opt, bool as_json, const qmds::VerifyCaps& caps) {
    const uint32_t q = q_opt.value_or(qmds::fixture_default_q(fixture));
    std::vector<qmds::FixtureCode> codes = qmds::fixture_codes(fixture, q, m_opt);
    auto pm = qmds::prime_power_decomposition(q);
    qmds::FieldContext F = qmds::FieldContext::make(pm->first, pm->second);

    bool all_ok = true;
    json arr = json::array();
    for (const auto& fc : codes) {
        qmds::Certificate cert = qmds::full_certificate(F, fc.params, fc.d, caps);
        all_ok = all_ok && cert.ok();
        if (as_json) {
            arr.push_back(certificate_to_json(cert));
        } else {
            std::cout << quantum_str(cert.quantum) << " ";
            if (cert.ok()) {
                std::cout << "certified";
            } else {
                std::cout << "FAILED:";
                for (const auto& v : cert.violations) std::cout << " " << v;
            }
            std::cout << "\n";
        }
    }
    if (as_json) std::cout << arr.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construction and certification of Hermitian self-orthogonal GRS codes "
                 "and their quantum MDS parameters"};
    app.require_subcommand(1);

    // enumerate
    uint32_t en_q = 0;
    std::optional<uint64_t> en_max_n;
    std::string en_format = "table";
    CLI::App* en = app.add_subcommand("enumerate", "list admissible parameter tuples for q");
    en->add_option("q", en_q, "prime power >= 3")->required();
    en->add_option("--max-n", en_max_n, "only tuples with n <= max-n");
    en->add_option("--format", en_format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    // construct
    uint32_t c_q = 0, c_lambda = 0, c_tau = 0, c_rho = 0, c_sigma = 0, c_d = 0;
    std::string c_out;
    CLI::App* co = app.add_subcommand("construct", "build a generator matrix file");
    co->add_option("q", c_q)->required();
    co->add_option("lambda", c_lambda)->required();
    co->add_option("tau", c_tau)->required();
    co->add_option("rho", c_rho)->required();
    co->add_option("sigma", c_sigma)->required();
    co->add_option("d", c_d, "quantum distance, 2 <= d <= T")->required();
    co->add_option("out", c_out, "output path")->required();

    // verify
    std::string v_path;
    qmds::VerifyCaps v_caps, r_caps;
    CLI::App* ve = app.add_subcommand("verify", "certify a matrix file");
    ve->add_option("path", v_path)->required();
    ve->add_option("--minor-cap", v_caps.minor_cap, "full minor sweep up to this many subsets");
    ve->add_option("--exhaustive-cap", v_caps.exhaustive_cap,
                   "exhaustive distance when q^(2k) is at most this (0 disables)");
    ve->add_option("--samples", v_caps.sample_count, "sampled minors above the cap");
    ve->add_option("--seed", v_caps.seed, "sampling seed");

    // oracle
    uint32_t o_lambda = 0, o_tau = 0, o_rho = 0;
    std::optional<int64_t> o_L, o_bound;
    bool o_all = false, o_json = false;
    CLI::App* orc = app.add_subcommand("oracle", "brute-force first failure points");
    orc->add_option("lambda", o_lambda)->required();
    orc->add_option("tau", o_tau)->required();
    orc->add_option("rho", o_rho)->required();
    orc->add_option("--L", o_L, "residue to scan (default: the table-optimal L)");
    orc->add_option("--bound", o_bound, "search bound on e2");
    orc->add_flag("--all-L", o_all, "scan every residue in [0, lambda-1]");
    orc->add_flag("--json", o_json, "emit JSON rows");

    // reproduce
    std::string r_fixture;
    std::optional<uint32_t> r_q, r_m;
    bool r_json = false;
    CLI::App* re = app.add_subcommand("reproduce", "construct and certify a named fixture family");
    re->add_option("fixture", r_fixture, "c1, c2, c3 or small-d")->required();
    re->add_option("--q", r_q, "field size (defaults per fixture)");
    re->add_option("--m", r_m, "divisor parameter for c2/c3");
    re->add_flag("--json", r_json, "emit JSON certificates");
    re->add_option("--minor-cap", r_caps.minor_cap);
    re->add_option("--exhaustive-cap", r_caps.exhaustive_cap);
    re->add_option("--samples", r_caps.sample_count);
    re->add_option("--seed", r_caps.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (en->parsed()) return cmd_enumerate(en_q, en_max_n, en_format);
        if (co->parsed()) return cmd_construct(c_q, c_lambda, c_tau, c_rho, c_sigma, c_d, c_out);
        if (ve->parsed()) return cmd_verify(v_path, v_caps);
        if (orc->parsed()) return cmd_oracle(o_lambda, o_tau, o_rho, o_L, o_bound, o_all, o_json);
        if (re->parsed()) return cmd_reproduce(r_fixture, r_q, r_m, r_json, r_caps);
    } catch (const qmds::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const qmds::ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qmds::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
