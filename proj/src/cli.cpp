#include "mubforge/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mubforge/checks.hpp"
#include "mubforge/gauss.hpp"
#include "mubforge/json_io.hpp"
#include "mubforge/qfourier.hpp"
#include "mubforge/weyl_pauli.hpp"

namespace mubforge::cli {

namespace {

using nlohmann::json;

double env_tolerance() {
    const char* v = std::getenv("MUBFORGE_TOL");
    if (!v) return 1e-10;
    char* end = nullptr;
    double t = std::strtod(v, &end);
    if (end == v || t <= 0) return 1e-10;
    return t;
}

std::string matrix_output(const PhaseMatrix& m, const std::string& format) {
    if (format == "json") return json_io::to_json(m, 2) + "\n";
    if (format == "csv") return json_io::to_csv(m.eval());
    return json_io::to_pretty(m);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
}

std::string complex_row(cdouble v) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%.15g %.15g", v.real(), v.imag());
    return buf;
}

int cmd_gen_fourier(int d, int a, const std::string& format, const std::string& out_path, std::ostream& out) {
    emit(matrix_output(qfourier::fourier_matrix({d, a}), format), out_path, out);
    return 0;
}

int cmd_gen_mub(int d, const std::string& format, const std::string& out_path, std::ostream& out) {
    auto bases = mub::complete_set_prime(d);
    std::ostringstream os;
    if (format == "json") {
        json jb = json::array();
        for (const auto& b : bases)
            jb.push_back({{"label", b.label}, {"matrix", json::parse(json_io::to_json(*b.exact))}});
        os << json{{"d", d}, {"bases", std::move(jb)}}.dump(2) << "\n";
    } else if (format == "csv") {
        for (const auto& b : bases) {
            os << "# " << b.label << "\n";
            os << json_io::to_csv(b.vectors);
        }
    } else {
        for (const auto& b : bases) {
            os << b.label << ":\n" << json_io::to_pretty(*b.exact) << "\n";
        }
    }
    emit(os.str(), out_path, out);
    return 0;
}

int cmd_verify_mub(int d, const std::string& pairs, const std::string& format, double tol,
                   const std::string& out_path, std::ostream& out, std::ostream& err) {
    if (pairs != "all") {
        err << "verify-mub: only --pairs all is supported\n";
        return 2;
    }
    std::vector<mub::Basis> bases;
    for (int a = 0; a < d; ++a) bases.push_back(mub::basis(d, a));
    bases.push_back(mub::computational_basis(d));

    std::ostringstream os;
    bool all_unbiased = true;
    json rows = json::array();
    for (size_t i = 0; i < bases.size(); ++i)
        for (size_t j = i + 1; j < bases.size(); ++j) {
            auto rep = mub::unbiased(bases[i], bases[j], tol);
            if (rep.verdict != mub::MubVerdict::Unbiased) all_unbiased = false;
            if (format == "json") {
                rows.push_back({{"pair", {rep.label1, rep.label2}},
                                {"max_modulus", rep.max_modulus},
                                {"min_modulus", rep.min_modulus},
                                {"verdict", mub::verdict_name(rep.verdict)}});
            } else if (format == "csv") {
                char buf[160];
                std::snprintf(buf, sizeof(buf), "%s,%s,%.15g,%.15g,%s\n", rep.label1.c_str(), rep.label2.c_str(),
                              rep.max_modulus, rep.min_modulus, mub::verdict_name(rep.verdict));
                os << buf;
            } else {
                char buf[160];
                std::snprintf(buf, sizeof(buf), "%-14s %-14s max %.12f  min %.12f  %s\n", rep.label1.c_str(),
                              rep.label2.c_str(), rep.max_modulus, rep.min_modulus, mub::verdict_name(rep.verdict));
                os << buf;
            }
        }
    if (format == "json")
        os << json{{"d", d}, {"tolerance", tol}, {"all_unbiased", all_unbiased}, {"pairs", std::move(rows)}}.dump(2)
           << "\n";
    emit(os.str(), out_path, out);
    return all_unbiased ? 0 : 1;
}

int cmd_gauss(long long u, long long v, long long w, const std::string& method, bool all_methods,
              const std::string& out_path, std::ostream& out) {
    gauss::GaussParams p{u, v, w};
    std::ostringstream os;
    if (all_methods) {
        cdouble b = gauss::gauss_brute(p);
        cdouble c = gauss::gauss_closed(p);
        cdouble r = gauss::gauss_reciprocity(p);
        os << "brute       " << complex_row(b) << "\n";
        os << "closed      " << complex_row(c) << "\n";
        os << "reciprocity " << complex_row(r) << "\n";
    } else {
        cdouble s;
        if (method == "closed") s = gauss::gauss_closed(p);
        else if (method == "reciprocity") s = gauss::gauss_reciprocity(p);
        else s = gauss::gauss_brute(p);
        os << complex_row(s) << "\n";
    }
    emit(os.str(), out_path, out);
    return 0;
}

int cmd_pauli(int d, int a, int b, bool show_action, const std::string& format, const std::string& out_path,
              std::ostream& out) {
    std::ostringstream os;
    if (show_action) {
        for (int k = 0; k < d; ++k) {
            long long phase = mod_reduce(static_cast<long long>(k) * b, d);
            int target = static_cast<int>(mod_reduce(k - a, d));
            os << "u|" << k << "> = q^" << phase << " |" << target << ">\n";
        }
    } else {
        os << matrix_output(weyl_pauli::pauli_u(d, {a, b}), format);
    }
    emit(os.str(), out_path, out);
    return 0;
}

int cmd_cartan(int p, const std::string& format, const std::string& out_path, std::ostream& out) {
    auto sets = weyl_pauli::cartan_decomposition(p);
    std::ostringstream os;
    if (format == "json") {
        json js = json::array();
        for (const auto& s : sets) {
            json members = json::array();
            for (const auto& m : s.members) members.push_back({m.a, m.b});
            js.push_back({{"label", s.label}, {"members", std::move(members)}});
        }
        os << json{{"p", p}, {"sets", std::move(js)}}.dump(2) << "\n";
    } else {
        for (const auto& s : sets) {
            os << s.label << ": ";
            for (const auto& m : s.members) os << "(" << m.a << m.b << ") ";
            os << "\n";
        }
    }
    emit(os.str(), out_path, out);
    return 0;
}

int cmd_pauli_group(int d, bool classes, bool show_rep3, bool diagnostics, const std::string& format,
                    const std::string& out_path, std::ostream& out) {
    std::ostringstream os;
    if (show_rep3) {
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c) {
                    auto m = pauli_group::rep3(d, {a, b, c});
                    os << "w(" << a << "," << b << "," << c << ") -> [[" << m[0][0] << "," << m[0][1] << ","
                       << m[0][2] << "],[" << m[1][0] << "," << m[1][1] << "," << m[1][2] << "],[" << m[2][0]
                       << "," << m[2][1] << "," << m[2][2] << "]]\n";
                }
    } else if (diagnostics) {
        auto rep = pauli_group::pi2_diagnostics();
        auto pi4 = pauli_group::pi_d_profile(4);
        auto p2 = pauli_group::two_qubit_pauli_profile();
        os << "Pi_2 order 8: " << (rep.order_8 ? "yes" : "no") << "\n";
        os << "Pi_2 classes: " << rep.class_sizes.size() << " (sizes";
        for (int s : rep.class_sizes) os << " " << s;
        os << ")\n";
        os << "Pi_2 irrep dims:";
        for (int v : rep.irrep_dims) os << " " << v;
        os << "\n";
        os << "Pi_2 ambivalent: " << (rep.ambivalent ? "yes" : "no") << "\n";
        os << "sign pattern x^2 = I, y^2 = -I, z^2 = I: " << (rep.sign_pattern ? "yes" : "no") << "\n";
        os << "doubled set has 16 elements, closed: " << ((rep.doubled_has_16 && rep.doubled_closed) ? "yes" : "no")
           << "\n";
        os << "embedded copy has index 2: " << (rep.subgroup_index_2 ? "yes" : "no") << "\n";
        for (const auto& [dd, amb] : rep.ambivalence_by_d)
            os << "ambivalent(Pi_" << dd << "): " << (amb ? "yes" : "no") << "\n";
        os << "Pi_4 vs P_2: ";
        os << "max element orders " << pi4.max_element_order << " vs " << p2.max_element_order
           << (pi4.order_counts != p2.order_counts ? " (distinct groups)" : " (profiles equal)") << "\n";
    } else if (classes) {
        auto table = pauli_group::class_table(d);
        if (format == "json") {
            json jc = json::array();
            for (const auto& cls : table.classes) {
                json c = json::array();
                for (const auto& g : cls) c.push_back({g.a, g.b, g.c});
                jc.push_back(std::move(c));
            }
            os << json{{"d", d}, {"classes", std::move(jc)}, {"irrep_dims", table.irrep_dims}}.dump(2) << "\n";
        } else {
            os << "d = " << d << ": " << table.classes.size() << " classes\n";
            for (const auto& cls : table.classes) {
                os << "  {";
                for (size_t t = 0; t < cls.size(); ++t) {
                    if (t) os << ", ";
                    os << "w(" << cls[t].a << "," << cls[t].b << "," << cls[t].c << ")";
                }
                os << "}\n";
            }
            os << "irrep dims:";
            for (int v : table.irrep_dims) os << " " << v;
            os << "\n";
        }
    } else {
        os << "Pi_" << d << ": order " << d * d * d << "; use --classes, --rep3 or --diagnostics\n";
    }
    emit(os.str(), out_path, out);
    return 0;
}

int cmd_check_all(const std::string& scale_name, bool inject_fault, bool serial, double tol, std::ostream& out) {
    checks::Scale scale = scale_name == "full" ? checks::Scale::Full : checks::Scale::Small;
    auto report = checks::run_all(scale, tol, inject_fault,
                                  serial ? kernels::Exec::Serial : kernels::Exec::Parallel);
    for (const auto& r : report.results) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%8.1f ms", r.millis);
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) out << " (" << r.detail << ")";
        out << "  " << buf << "\n";
    }
    out << (report.all_pass() ? "all checks passed" : std::to_string(report.failures()) + " check(s) failed")
        << " [" << report.results.size() << " total, scale " << scale_name << "]\n";
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mubforge: exact root-of-unity toolkit for quadratic Fourier matrices, "
                 "mutually unbiased bases, Gauss sums and generalized Pauli operators"};
    app.require_subcommand(1);
    double tol = env_tolerance();

    // gen-fourier
    auto* gen_fourier = app.add_subcommand("gen-fourier", "Emit the quadratic Fourier matrix F_a");
    int gf_d = 2, gf_a = 0;
    std::string gf_format = "pretty", gf_out;
    gen_fourier->add_option("--d", gf_d, "dimension")->required()->check(CLI::Range(2, 64));
    gen_fourier->add_option("--a", gf_a, "quadratic twist index")->required();
    gen_fourier->add_option("--format", gf_format)->check(CLI::IsMember({"json", "csv", "pretty"}));
    gen_fourier->add_option("--out", gf_out, "write output to file");

    // gen-mub
    auto* gen_mub = app.add_subcommand("gen-mub", "Emit the complete prime-dimension MUB set");
    int gm_d = 2;
    bool gm_json = false, gm_csv = false;
    std::string gm_out;
    gen_mub->add_option("--d", gm_d, "prime dimension")->required()->check(CLI::Range(2, 64));
    gen_mub->add_flag("--json", gm_json);
    gen_mub->add_flag("--csv", gm_csv);
    gen_mub->add_option("--out", gm_out);

    // verify-mub
    auto* verify_mub = app.add_subcommand("verify-mub", "Pairwise unbiasedness report");
    int vm_d = 2;
    std::string vm_pairs = "all", vm_format = "pretty", vm_out;
    verify_mub->add_option("--d", vm_d)->required()->check(CLI::Range(2, 64));
    verify_mub->add_option("--pairs", vm_pairs);
    verify_mub->add_option("--format", vm_format)->check(CLI::IsMember({"json", "csv", "pretty"}));
    verify_mub->add_option("--out", vm_out);

    // gauss-sum
    auto* gauss_cmd = app.add_subcommand("gauss-sum", "Evaluate the generalized quadratic Gauss sum S(u,v,w)");
    long long gs_u = 1, gs_v = 0, gs_w = 1;
    std::string gs_method = "brute", gs_out;
    bool gs_all = false;
    gauss_cmd->add_option("--u", gs_u)->required();
    gauss_cmd->add_option("--v", gs_v)->required();
    gauss_cmd->add_option("--w", gs_w)->required();
    gauss_cmd->add_option("--method", gs_method)->check(CLI::IsMember({"brute", "closed", "reciprocity"}));
    gauss_cmd->add_flag("--all-methods", gs_all, "print a three-row comparison");
    gauss_cmd->add_option("--out", gs_out);

    // pauli
    auto* pauli_cmd = app.add_subcommand("pauli", "Emit the generalized Pauli matrix X^a Z^b");
    int pl_d = 2, pl_a = 0, pl_b = 0;
    bool pl_matrix = false, pl_action = false;
    std::string pl_format = "pretty", pl_out;
    pauli_cmd->add_option("--d", pl_d)->required()->check(CLI::Range(2, 64));
    pauli_cmd->add_option("--a", pl_a)->required();
    pauli_cmd->add_option("--b", pl_b)->required();
    pauli_cmd->add_flag("--matrix", pl_matrix, "print the matrix (default)");
    pauli_cmd->add_flag("--action", pl_action, "print the ladder-phase action on basis kets");
    pauli_cmd->add_option("--format", pl_format)->check(CLI::IsMember({"json", "csv", "pretty"}));
    pauli_cmd->add_option("--out", pl_out);

    // cartan
    auto* cartan_cmd = app.add_subcommand("cartan", "Emit the p+1 commuting families for prime p");
    int ct_p = 2;
    std::string ct_format = "pretty", ct_out;
    cartan_cmd->add_option("--p", ct_p)->required()->check(CLI::Range(2, 64));
    cartan_cmd->add_option("--format", ct_format)->check(CLI::IsMember({"json", "pretty"}));
    cartan_cmd->add_option("--out", ct_out);

    // pauli-group
    auto* group_cmd = app.add_subcommand("pauli-group", "Group diagnostics, classes and the 3x3 representation");
    int pg_d = 2;
    bool pg_classes = false, pg_rep3 = false, pg_diag = false;
    std::string pg_format = "pretty", pg_out;
    group_cmd->add_option("--d", pg_d)->required()->check(CLI::Range(2, 8));
    group_cmd->add_flag("--classes", pg_classes);
    group_cmd->add_flag("--rep3", pg_rep3);
    group_cmd->add_flag("--diagnostics", pg_diag);
    group_cmd->add_option("--format", pg_format)->check(CLI::IsMember({"json", "pretty"}));
    group_cmd->add_option("--out", pg_out);

    // check-all
    auto* check_cmd = app.add_subcommand("check-all", "Run the full property suite");
    std::string ca_scale = "small";
    bool ca_fault = false, ca_serial = false;
    check_cmd->add_option("--scale", ca_scale)->check(CLI::IsMember({"small", "full"}));
    check_cmd->add_flag("--inject-fault", ca_fault, "negative control: perturb one phase");
    check_cmd->add_flag("--serial", ca_serial, "run the serial reference kernels");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (gen_fourier->parsed()) return cmd_gen_fourier(gf_d, gf_a, gf_format, gf_out, out);
        if (gen_mub->parsed())
            return cmd_gen_mub(gm_d, gm_json ? "json" : (gm_csv ? "csv" : "pretty"), gm_out, out);
        if (verify_mub->parsed()) return cmd_verify_mub(vm_d, vm_pairs, vm_format, tol, vm_out, out, err);
        if (gauss_cmd->parsed()) return cmd_gauss(gs_u, gs_v, gs_w, gs_method, gs_all, gs_out, out);
        if (pauli_cmd->parsed()) return cmd_pauli(pl_d, pl_a, pl_b, pl_action, pl_format, pl_out, out);
        if (cartan_cmd->parsed()) return cmd_cartan(ct_p, ct_format, ct_out, out);
        if (group_cmd->parsed())
            return cmd_pauli_group(pg_d, pg_classes, pg_rep3, pg_diag, pg_format, pg_out, out);
        if (check_cmd->parsed()) return cmd_check_all(ca_scale, ca_fault, ca_serial, tol, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << app.help();
    return 2;
}

}  // namespace mubforge::cli
