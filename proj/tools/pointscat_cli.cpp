// Batch front end: scattering sweeps, trapped spectra, the coupling
// dictionary, renormalization-group flows, and the built-in check suite.
//
// Exit codes: 0 success, 2 invalid input, 3 numerical failure, 4 check-suite
// failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pointscat/checks.hpp"
#include "pointscat/eft.hpp"
#include "pointscat/scattering.hpp"
#include "pointscat/serialize.hpp"
#include "pointscat/sweep.hpp"
#include "pointscat/trap.hpp"

namespace ps = pointscat;
using nlohmann::json;

namespace {

// A double option that may come from a flag or from the --params JSON file;
// flags win.
struct FileBacked {
    struct Entry {
        std::string key;
        CLI::Option* opt;
        double* value;
    };
    std::vector<Entry> entries;

    CLI::Option* add(CLI::App* cmd, const std::string& flag, const std::string& key,
                     double* value, const std::string& desc) {
        CLI::Option* opt = cmd->add_option(flag, *value, desc);
        entries.push_back({key, opt, value});
        return opt;
    }

    void apply(const json& file) {
        for (const Entry& e : entries)
            if (e.opt->count() == 0 && file.contains(e.key))
                *e.value = file.at(e.key).get<double>();
    }

    bool given(const json& file, const std::string& key) const {
        for (const Entry& e : entries)
            if (e.key == key) return e.opt->count() > 0 || file.contains(key);
        return false;
    }
};

json load_params_file(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw ps::ValidationError("cannot open params file: " + path);
    json j = json::parse(in, nullptr, true);
    if (!j.is_object()) throw ps::ValidationError("params file must hold a JSON object");
    return j;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ps::IoFailure("cannot open output file: " + out_path);
    out << text;
    if (!out) throw ps::IoFailure("write failed: " + out_path);
}

const char* kind_name(ps::PoleKind k) {
    switch (k) {
        case ps::PoleKind::Bound: return "bound";
        case ps::PoleKind::Antibound: return "antibound";
        case ps::PoleKind::Threshold: return "threshold";
    }
    return "unknown";
}

std::string pole_json(const std::vector<ps::Pole>& poles) {
    std::string out = "[";
    for (std::size_t i = 0; i < poles.size(); ++i) {
        if (i) out += ", ";
        out += "{\"kappa\": " + ps::format_double(poles[i].kappa) + ", \"kind\": \"" +
               kind_name(poles[i].kind) + "\"}";
    }
    return out + "]";
}

struct OutputOpts {
    std::string format = "csv";
    std::string out_path;
    std::string params_path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out_path, "output path (default: standard output)");
        cmd->add_option("--params", params_path, "JSON file with parameter values");
    }
};

struct SweepOpts {
    double lo = 0.1, hi = 10.0;
    int steps = 50;
    std::string spacing = "log";

    void attach(CLI::App* cmd, const std::string& stem, FileBacked& fb) {
        fb.add(cmd, "--" + stem + "-min", stem + "_min", &lo, "sweep start");
        fb.add(cmd, "--" + stem + "-max", stem + "_max", &hi, "sweep end");
        cmd->add_option("--" + stem + "-steps", steps, "sweep point count");
        cmd->add_option("--spacing", spacing, "grid spacing")
            ->check(CLI::IsMember({"linear", "log"}));
    }

    std::vector<double> grid() const {
        return ps::momentum_grid(lo, hi, steps, spacing == "log");
    }
};

struct SaeOpts {
    double alpha = 1.0, beta = 0.0, gamma = 1.0, delta = 0.0, phi = 0.0;

    void attach(CLI::App* cmd, FileBacked& fb) {
        fb.add(cmd, "--alpha", "alpha", &alpha, "transfer-matrix alpha");
        fb.add(cmd, "--beta", "beta", &beta, "transfer-matrix beta (1/length)");
        fb.add(cmd, "--gamma", "gamma", &gamma, "transfer-matrix gamma");
        fb.add(cmd, "--delta", "delta", &delta, "transfer-matrix delta (length)");
        fb.add(cmd, "--phi", "phi", &phi, "transfer-matrix phase");
    }

    ps::ExtensionParams validated() const {
        return ps::validate_extension(alpha, beta, gamma, delta, phi);
    }
};

int run_scatter(const SaeOpts& sae, const SweepOpts& sweep, double k_single,
                bool k_given, const OutputOpts& out) {
    ps::ExtensionParams p = sae.validated();
    std::vector<double> grid =
        k_given ? std::vector<double>{k_single} : sweep.grid();
    std::vector<ps::ScatterRow> rows = ps::scatter_sweep(p, grid);
    std::vector<ps::Pole> poles = ps::smatrix_poles(p);

    ps::Table t;
    t.columns = {{"k", false},          {"R_plus", true},      {"R_minus", true},
                 {"T_plus", true},      {"T_minus", true},     {"delta_plus", false},
                 {"delta_minus", false}, {"Theta", false},     {"Phi", false}};
    for (const ps::ScatterRow& r : rows)
        t.add_row({r.k, r.r_plus, r.r_minus, r.t_plus, r.t_minus, r.delta_plus,
                   r.delta_minus, r.theta, r.phi_rel});

    if (out.format == "csv") {
        std::vector<std::string> preamble;
        if (poles.empty()) {
            preamble.push_back("poles: none");
        } else {
            for (const ps::Pole& q : poles)
                preamble.push_back("pole kappa=" + ps::format_double(q.kappa) +
                                   " kind=" + kind_name(q.kind));
        }
        emit(ps::to_csv(t, preamble), out.out_path);
    } else {
        emit("{\n\"poles\": " + pole_json(poles) + ",\n\"rows\": " + ps::rows_to_json(t) +
                 "\n}\n",
             out.out_path);
    }
    return 0;
}

int emit_spectrum(const ps::SpectrumResult& r, const OutputOpts& out) {
    ps::Table t;
    t.columns = {{"index", false},
                 {"E_over_omega", false},
                 {"bracket_lo", false},
                 {"bracket_hi", false},
                 {"residual", false}};
    for (std::size_t i = 0; i < r.levels.size(); ++i)
        t.add_row({static_cast<double>(i), r.levels[i].e_over_omega, r.levels[i].bracket_lo,
                   r.levels[i].bracket_hi, r.levels[i].residual});
    emit(out.format == "csv" ? ps::to_csv(t) : ps::rows_to_json(t) + "\n", out.out_path);
    return 0;
}

int run_dictionary(const SaeOpts& sae, bool has_sae, double c0, double c1, double c1_tilde,
                   double c2p, bool has_couplings, const OutputOpts& out) {
    if (has_sae == has_couplings)
        throw ps::ValidationError(
            "dictionary needs either transfer-matrix parameters or couplings, not both");

    ps::ExtensionParams p;
    ps::ContactCouplings c;
    double residual = 0.0;
    if (has_sae) {
        p = sae.validated();
        c = ps::sae_to_couplings(p);
        ps::ExtensionParams q = ps::couplings_to_sae(c);
        residual = std::max({std::abs(q.alpha - p.alpha), std::abs(q.beta - p.beta),
                             std::abs(q.gamma - p.gamma), std::abs(q.delta - p.delta),
                             std::abs(q.phi - p.phi)});
    } else {
        c.scheme = ps::Scheme::ndr();
        c.c0 = c0;
        c.c1 = c1;
        c.c1_tilde = c1_tilde;
        c.c2p = c2p;
        p = ps::couplings_to_sae(c);
        ps::ContactCouplings b = ps::sae_to_couplings(p);
        residual = std::max({std::abs(b.c0 - c.c0), std::abs(b.c1 - c.c1),
                             std::abs(b.c1_tilde - c.c1_tilde), std::abs(b.c2p - c.c2p)});
    }

    ps::Table t;
    t.columns = {{"alpha", false}, {"beta", false},     {"gamma", false},
                 {"delta", false}, {"phi", false},      {"c0", false},
                 {"c1", false},    {"c1_tilde", false}, {"c2p", false},
                 {"roundtrip_residual", false}};
    t.add_row({p.alpha, p.beta, p.gamma, p.delta, p.phi, c.c0, c.c1, c.c1_tilde, c.c2p,
               residual});
    emit(out.format == "csv" ? ps::to_csv(t) : ps::rows_to_json(t) + "\n", out.out_path);
    return 0;
}

int run_rgflow(double kappa0, double phi_rel, double a_theta, bool anomaly,
               const SweepOpts& sweep, const OutputOpts& out) {
    ps::RenormConditions conds{kappa0, phi_rel, a_theta};
    std::vector<ps::RgFlowRow> rows = ps::rgflow_sweep(conds, sweep.grid(), anomaly);
    ps::Table t;
    t.columns = {{"mu", false}, {"c1_mod", false}, {"c0_mu", false}, {"k_cot_Theta", false}};
    for (const ps::RgFlowRow& r : rows) t.add_row({r.mu, r.c1_mod, r.c0_mu, r.k_cot_theta});
    emit(out.format == "csv" ? ps::to_csv(t) : ps::rows_to_json(t) + "\n", out.out_path);
    return 0;
}

int run_check() {
    int passed = 0, total = 0;
    auto report = [&](const std::vector<ps::CheckResult>& results) {
        for (const ps::CheckResult& r : results) {
            std::printf("%s: %s (%s)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                        r.detail.c_str());
            ++total;
            if (r.passed) ++passed;
        }
    };
    report(ps::run_acceptance_checks());
    report(ps::run_invariant_checks());
    std::printf("passed %d/%d\n", passed, total);
    return passed == total ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-dimensional point-interaction scattering toolkit"};
    app.require_subcommand(1);

    // scatter
    CLI::App* scatter = app.add_subcommand("scatter", "reflection/transmission sweep over k");
    FileBacked scatter_fb;
    OutputOpts scatter_out;
    SaeOpts scatter_sae;
    SweepOpts scatter_sweep_opts;
    scatter_sweep_opts.lo = 0.1;
    double k_single = 1.0;
    scatter_out.attach(scatter);
    scatter_sae.attach(scatter, scatter_fb);
    scatter_sweep_opts.attach(scatter, "k", scatter_fb);
    scatter_fb.add(scatter, "--k", "k", &k_single, "single momentum instead of a sweep");

    // spectrum
    CLI::App* spectrum = app.add_subcommand("spectrum", "trapped two-body levels");
    FileBacked spectrum_fb;
    OutputOpts spectrum_out;
    SaeOpts spectrum_sae;
    int dim = 0, levels = 5;
    double m = 1.0, omega = 1.0, a_3d = 0.0, inv_a_3d = 0.0;
    bool unitary = false;
    spectrum_out.attach(spectrum);
    spectrum->add_option("--dim", dim, "trap dimension")->required()->check(CLI::IsMember({1, 3}));
    spectrum->add_option("--levels", levels, "number of levels");
    spectrum_fb.add(spectrum, "--m", "m", &m, "reduced mass");
    spectrum_fb.add(spectrum, "--omega", "omega", &omega, "trap frequency");
    spectrum_sae.attach(spectrum, spectrum_fb);
    spectrum_fb.add(spectrum, "--a", "a", &a_3d, "3D scattering length");
    spectrum_fb.add(spectrum, "--inv-a", "inv_a", &inv_a_3d, "inverse 3D scattering length");
    spectrum->add_flag("--unitary", unitary, "3D unitary limit (1/a = 0)");

    // dictionary
    CLI::App* dictionary =
        app.add_subcommand("dictionary", "transfer-matrix <-> coupling translation");
    FileBacked dict_fb;
    OutputOpts dict_out;
    SaeOpts dict_sae;
    double c0 = 0.0, c1 = 0.0, c1_tilde = 0.0, c2p = 0.0;
    dict_out.attach(dictionary);
    dict_sae.attach(dictionary, dict_fb);
    dict_fb.add(dictionary, "--c0", "c0", &c0, "s-wave coupling (1/length)");
    dict_fb.add(dictionary, "--c1", "c1", &c1, "mixing coupling");
    dict_fb.add(dictionary, "--c1-tilde", "c1_tilde", &c1_tilde, "anomalous mixing coupling");
    dict_fb.add(dictionary, "--c2p", "c2p", &c2p, "p-wave coupling (length)");

    // rgflow
    CLI::App* rgflow = app.add_subcommand("rgflow", "running couplings over a mu grid");
    FileBacked rg_fb;
    OutputOpts rg_out;
    SweepOpts rg_sweep;
    rg_sweep.lo = 1.0;
    rg_sweep.hi = 100.0;
    double kappa0 = 1.0, phi_rel = 0.0, a_theta = 0.0;
    bool anomaly = false;
    rg_out.attach(rgflow);
    rg_fb.add(rgflow, "--kappa0", "kappa0", &kappa0, "pole momentum");
    rg_fb.add(rgflow, "--phi-rel", "phi_rel", &phi_rel, "relative phase Phi");
    rg_fb.add(rgflow, "--a-theta", "a_theta", &a_theta, "mixing length");
    rgflow->add_flag("--anomaly", anomaly, "bare c0 = 0 flow (running mixing angle)");
    rg_sweep.attach(rgflow, "mu", rg_fb);

    // check
    app.add_subcommand("check", "run the verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(scatter)) {
            json file = load_params_file(scatter_out.params_path);
            scatter_fb.apply(file);
            bool k_given = scatter_fb.given(file, "k");
            return run_scatter(scatter_sae, scatter_sweep_opts, k_single, k_given,
                               scatter_out);
        }
        if (app.got_subcommand(spectrum)) {
            json file = load_params_file(spectrum_out.params_path);
            spectrum_fb.apply(file);
            ps::SpectrumResult r;
            if (dim == 3) {
                if (unitary)
                    r = ps::busch_levels_3d_inverse(0.0, m, omega, levels);
                else if (spectrum_fb.given(file, "inv_a"))
                    r = ps::busch_levels_3d_inverse(inv_a_3d, m, omega, levels);
                else if (spectrum_fb.given(file, "a"))
                    r = ps::busch_levels_3d(a_3d, m, omega, levels);
                else
                    throw ps::ValidationError("dim 3 needs --a, --inv-a, or --unitary");
            } else {
                r = ps::trap_levels_1d(spectrum_sae.validated(), m, omega, levels);
            }
            return emit_spectrum(r, spectrum_out);
        }
        if (app.got_subcommand(dictionary)) {
            json file = load_params_file(dict_out.params_path);
            dict_fb.apply(file);
            bool has_sae = false, has_couplings = false;
            for (const char* key : {"alpha", "beta", "gamma", "delta", "phi"})
                has_sae = has_sae || dict_fb.given(file, key);
            for (const char* key : {"c0", "c1", "c1_tilde", "c2p"})
                has_couplings = has_couplings || dict_fb.given(file, key);
            return run_dictionary(dict_sae, has_sae, c0, c1, c1_tilde, c2p, has_couplings,
                                  dict_out);
        }
        if (app.got_subcommand(rgflow)) {
            json file = load_params_file(rg_out.params_path);
            rg_fb.apply(file);
            return run_rgflow(kappa0, phi_rel, a_theta, anomaly, rg_sweep, rg_out);
        }
        return run_check();
    } catch (const ps::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ps::NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
