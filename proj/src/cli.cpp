#include "tachyon/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tachyon/fields.hpp"
#include "tachyon/fock.hpp"
#include "tachyon/loopint.hpp"
#include "tachyon/lorentz.hpp"
#include "tachyon/numeric.hpp"
#include "tachyon/wavepacket.hpp"

namespace tachyon::cli {

namespace {

using json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double param_d(const RunConfig& cfg, const std::string& key, double fallback) {
    auto it = cfg.params.find(key);
    if (it == cfg.params.end()) return fallback;
    std::size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("bad numeric parameter " + key);
    return v;
}

long param_i(const RunConfig& cfg, const std::string& key, long fallback) {
    auto it = cfg.params.find(key);
    if (it == cfg.params.end()) return fallback;
    return std::stol(it->second);
}

std::string param_s(const RunConfig& cfg, const std::string& key, const std::string& fallback) {
    auto it = cfg.params.find(key);
    return it == cfg.params.end() ? fallback : it->second;
}

/// "a:b:n" -> n points from a to b (linear, or log-spaced for positive ranges
/// when log=true).
std::vector<double> parse_grid(const std::string& text, bool log_spaced = false) {
    std::vector<std::string> tok;
    std::string cur;
    for (std::size_t i = 0; i < text.size(); ++i) {
        // ':' separates fields; a '-' may begin a number
        if (text[i] == ':') {
            tok.push_back(cur);
            cur.clear();
        } else {
            cur += text[i];
        }
    }
    tok.push_back(cur);
    if (tok.size() != 3) throw std::invalid_argument("grid must be start:end:count");
    const double a = std::stod(tok[0]), b = std::stod(tok[1]);
    const long n = std::stol(tok[2]);
    if (n < 1) throw std::invalid_argument("grid count must be >= 1");
    std::vector<double> out;
    out.reserve(n);
    if (n == 1) {
        out.push_back(a);
        return out;
    }
    if (log_spaced) {
        if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("log grid needs positive range");
        for (long i = 0; i < n; ++i) {
            out.push_back(a * std::pow(b / a, double(i) / double(n - 1)));
        }
    } else {
        for (long i = 0; i < n; ++i) {
            out.push_back(a + (b - a) * double(i) / double(n - 1));
        }
    }
    return out;
}

void require_keys(const RunConfig& cfg, const std::set<std::string>& allowed) {
    for (const auto& [k, v] : cfg.params) {
        if (!allowed.count(k)) throw std::invalid_argument("unknown parameter: " + k);
    }
}

json config_echo(const RunConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    json p = json::object();
    for (const auto& [k, v] : cfg.params) p[k] = v;
    j["params"] = p;
    j["format"] = cfg.format;
    return j;
}

std::string csv_header(const RunConfig& cfg) {
    std::string h = "# ";
    h += kToolkitVersion;
    h += "\n# command=";
    h += cfg.command;
    for (const auto& [k, v] : cfg.params) {
        h += " " + k + "=" + v;
    }
    h += "\n";
    return h;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << content;
}

struct CheckList {
    json items = json::array();
    bool all_pass = true;

    void add(const std::string& name, bool pass, json detail = {}) {
        json it;
        it["name"] = name;
        it["pass"] = pass;
        if (!detail.is_null()) it["detail"] = std::move(detail);
        items.push_back(std::move(it));
        all_pass = all_pass && pass;
    }
};

void emit_report(const RunConfig& cfg, const std::string& default_name, json body,
                 const CheckList& checks) {
    json report;
    report["version"] = kToolkitVersion;
    report["config"] = config_echo(cfg);
    for (auto& [k, v] : body.items()) report[k] = v;
    report["checks"] = checks.items;
    report["pass"] = checks.all_pass;
    const std::string path =
        cfg.output_path.empty() ? default_name + ".json" : cfg.output_path;
    write_file(path, report.dump(2) + "\n");
}

// ---------------------------------------------------------------- symbolic

json symbolic_section(CheckList& checks) {
    using namespace tachyon::fock;
    const ModeLabel k("k"), l("l"), p("p"), q("q");

    json out;
    const auto conv_name = [](StarConvention c) {
        return c == StarConvention::Transpose ? "star1_transpose" : "star2_adjoint";
    };
    for (const StarConvention conv : {StarConvention::Transpose, StarConvention::Adjoint}) {
        const OperatorExpr ck = twin_annihilator(k, conv);
        const OperatorExpr cl = twin_annihilator(l, conv);
        const OperatorExpr cdl = twin_creator(l, conv);
        json sec;
        sec["comm_c_cdagger"] = commutator(ck, cdl).str();
        sec["comm_c_c"] = commutator(ck, cl).str();
        out[conv_name(conv)] = sec;
    }
    const OperatorExpr ck1 = twin_annihilator(k, StarConvention::Transpose);
    const OperatorExpr cl1 = twin_annihilator(l, StarConvention::Transpose);
    const OperatorExpr cdl1 = twin_creator(l, StarConvention::Transpose);
    checks.add("twin_nullity_star1", commutator(ck1, cdl1).is_zero() &&
                                         commutator(ck1, cl1).is_zero());
    checks.add("twin_star2_nonzero",
               commutator(twin_annihilator(k, StarConvention::Adjoint),
                          twin_creator(l, StarConvention::Adjoint))
                       .equals(OperatorExpr::delta(k, l).scaled(Scalar::integer(2))));

    // CCR image under an energy-sign-flipping boost
    const OperatorExpr raw_ccr = OperatorExpr::from_op(annihilate(p)) *
                                     OperatorExpr::from_op(create(q)) -
                                 OperatorExpr::from_op(create(q)) *
                                     OperatorExpr::from_op(annihilate(p));
    const OperatorExpr flipped = boost_image(raw_ccr, true).normalized();
    const OperatorExpr expected = -OperatorExpr::delta(p.boosted(), q.boosted());
    out["ccr"] = raw_ccr.normalized().str();
    out["ccr_boosted_flip"] = flipped.str();
    checks.add("ccr_sign_flip", flipped.equals(expected));

    // flipped boost applied to the twin algebra keeps every commutator zero
    const OperatorExpr bk = boost_image(ck1, true);
    const OperatorExpr bl = boost_image(cdl1, true);
    checks.add("twin_nullity_boost_stable", commutator(bk, bl).is_zero());
    return out;
}

// ------------------------------------------------------------- commutators

int run_commutators(const RunConfig& cfg) {
    require_keys(cfg, {"variant", "m", "eta", "levels", "dt-grid", "r-grid", "sigma", "rho",
                       "rapidity"});
    using namespace tachyon::fields;
    const std::string variant = param_s(cfg, "variant", "phi1");
    CommutatorKernel kernel;
    kernel.m = param_d(cfg, "m", 1.0);
    kernel.eta = param_d(cfg, "eta", 0.0);
    kernel.richardson_levels = int(param_i(cfg, "levels", 8));
    if (variant == "phi1") {
        kernel.variant = Variant::Phi1;
    } else if (variant == "phi2") {
        kernel.variant = Variant::Phi2;
    } else if (variant == "reference") {
        kernel.variant = Variant::SubluminalReference;
        kernel.mode_support = ModeSupport::All;
    } else {
        throw std::invalid_argument("variant must be phi1|phi2|reference");
    }

    const std::vector<double> dts = parse_grid(param_s(cfg, "dt-grid", "0:1.2:3"));
    const std::vector<double> rs = parse_grid(param_s(cfg, "r-grid", "0.8:2.4:3"));
    const double sigma = param_d(cfg, "sigma", 0.35);
    const double rho = param_d(cfg, "rho", 0.8);
    const double rapidity = param_d(cfg, "rapidity", 0.5);

    CheckList checks;
    json body;
    body["symbolic"] = symbolic_section(checks);

    auto eval = [&](const SpacetimeSeparation& s) {
        switch (kernel.variant) {
            case Variant::Phi1: return phi1_commutator(s, kernel);
            case Variant::Phi2: return phi2_commutator(s, kernel);
            default: return subluminal_commutator(s, kernel);
        }
    };

    json rows = json::array();
    double max_equal_time = 0.0, max_phi1_residual = 0.0, max_spacelike_ref = 0.0;
    for (const double dt : dts) {
        for (const double r : rs) {
            const CommutatorValue v = eval({dt, r});
            json row;
            row["dt"] = dt;
            row["r"] = r;
            row["reC"] = v.value.real();
            row["imC"] = v.value.imag();
            row["error_estimate"] = v.error_estimate;
            rows.push_back(row);
            if (kernel.variant == Variant::Phi2 && dt == 0.0) {
                max_equal_time = std::max(max_equal_time, std::abs(v.value));
            }
            if (kernel.variant == Variant::Phi1) {
                max_phi1_residual = std::max(max_phi1_residual, std::abs(v.value));
            }
            if (kernel.variant == Variant::SubluminalReference && r > std::abs(dt) + 0.5) {
                max_spacelike_ref = std::max(max_spacelike_ref, std::abs(v.value));
            }
        }
    }
    body["records"] = rows;

    if (kernel.variant == Variant::Phi2) {
        checks.add("equal_time_nullity", max_equal_time < 1e-8,
                   json{{"max_abs", max_equal_time}});
        const SpacetimeSeparation probe_sep{0.0, 2.0};
        const BoostProbe probe = boost_invariance_probe(probe_sep, rapidity, kernel);
        json pj;
        pj["value_original"] = {probe.value_original.real(), probe.value_original.imag()};
        pj["value_boosted"] = {probe.value_boosted.real(), probe.value_boosted.imag()};
        pj["difference"] = {probe.difference.real(), probe.difference.imag()};
        body["boost_probe"] = pj;
        checks.add("frame_dependence_detected",
                   std::abs(probe.difference) > 1e-4 || rapidity == 0.0,
                   json{{"abs_difference", std::abs(probe.difference)}});
    }
    if (kernel.variant == Variant::Phi1) {
        checks.add("phi1_two_route_residual", max_phi1_residual < 1e-8,
                   json{{"max_abs", max_phi1_residual}});
    }
    if (kernel.variant == Variant::SubluminalReference) {
        checks.add("microcausality_reference", max_spacelike_ref < 1e-6,
                   json{{"max_abs_spacelike", max_spacelike_ref}});
    }

    // equal-time smooth part: closed form against |k|<m quadrature
    double max_smooth_dev = 0.0;
    for (const double r : {0.05, 0.5, std::numbers::pi, 5.0, 20.0}) {
        const double c = equal_time_smooth_part_closed(r, kernel.m);
        const QuadratureValue q = equal_time_smooth_part_quadrature(r, kernel.m);
        max_smooth_dev = std::max(max_smooth_dev, std::abs(c - q.value));
    }
    checks.add("equal_time_smooth_part_agreement", max_smooth_dev < 1e-10,
               json{{"max_abs_deviation", max_smooth_dev}});

    // smeared equal-time CCR: twin field vs subluminal reference
    if (kernel.variant != Variant::Phi2) {
        CommutatorKernel twin = kernel;
        twin.variant = Variant::Phi1;
        const SmearedCcrResult tw = smeared_ccr(rho, sigma, twin);
        CommutatorKernel ref = kernel;
        ref.variant = Variant::SubluminalReference;
        const SmearedCcrResult rf = smeared_ccr(rho, sigma, ref);
        json sj;
        sj["twin_value_abs"] = std::abs(tw.value);
        sj["delta_term_im"] = tw.delta_term.imag();
        sj["reference_residual"] = rf.residual;
        body["smeared_ccr"] = sj;
        checks.add("twin_ccr_vanishes", tw.residual < 1e-8,
                   json{{"abs_value", tw.residual}});
        checks.add("reference_ccr_reproduces_delta", rf.residual < 1e-6,
                   json{{"residual", rf.residual}});
        checks.add("ccr_zero_vs_delta_confirmed",
                   tw.residual < 1e-8 && std::abs(tw.delta_term) > 1e-3);
    }

    if (cfg.format == "csv") {
        std::string csv = csv_header(cfg);
        csv += "dt,r,reC,imC,error_estimate\n";
        for (const auto& row : rows) {
            csv += fmt(row["dt"].get<double>()) + "," + fmt(row["r"].get<double>()) + "," +
                   fmt(row["reC"].get<double>()) + "," + fmt(row["imC"].get<double>()) + "," +
                   fmt(row["error_estimate"].get<double>()) + "\n";
        }
        const std::string path =
            cfg.output_path.empty() ? "commutators.csv" : cfg.output_path;
        write_file(path, csv);
    } else {
        emit_report(cfg, "commutators", body, checks);
    }
    return checks.all_pass ? 0 : 1;
}

// ------------------------------------------------------------- boost-check

int run_boost_check(const RunConfig& cfg) {
    require_keys(cfg, {"samples", "seed"});
    using namespace tachyon::lorentz;
    const long samples = param_i(cfg, "samples", 10000);
    const unsigned seed = unsigned(param_i(cfg, "seed", 20240901));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_dir = [&]() {
        for (;;) {
            const Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
            const double n = v.norm();
            if (n > 1e-6) return v * (1.0 / n);
        }
    };

    double max_metric_dev = 0.0, min_margin = HUGE_VAL;
    long flips_found = 0;
    for (long i = 0; i < samples; ++i) {
        const double m = 0.1 + 2.0 * uni(rng);
        const double kmag = m * (1.0 + 1e-6 + 30.0 * uni(rng));
        FourVector k = onshell_tachyon(random_dir() * kmag, m);
        if (uni(rng) < 0.5) k.e0 = -k.e0;  // both energy signs are on shell
        const Boost b(random_dir() * (0.999999 * uni(rng)));
        const InvarianceReport rep = verify_onshell_invariance(k, b);
        min_margin = std::min(min_margin, rep.margin);
        if (k.e0 > 0.0) {
            const Boost flip = find_sign_flipping_boost(k);
            if (flip.apply(k).e0 < 0.0) ++flips_found;
        } else {
            ++flips_found;  // not attempted for e0 < 0 samples
        }
        // metric check on moderate kinematics (1e-10 absolute needs the
        // squared components well inside double precision)
        FourVector km = onshell_tachyon(random_dir() * (m * (1.0 + 1e-6 + 9.0 * uni(rng))), m);
        if (uni(rng) < 0.5) km.e0 = -km.e0;
        const FourVector kmp = Boost(random_dir() * (0.99 * uni(rng))).apply(km);
        max_metric_dev = std::max(
            max_metric_dev, std::abs(minkowski_dot(kmp, kmp) - minkowski_dot(km, km)));
    }

    // pinned witness: k = (0.75, 1.25, 0, 0), u = 0.8 along x
    const FourVector witness = onshell_tachyon({1.25, 0, 0}, 1.0);
    const FourVector boosted = Boost({0.8, 0, 0}).apply(witness);
    const FourVector offshell = offshell_counterexample({1.25, 0, 0}, {1, 0, 0}, 0.8);

    CheckList checks;
    checks.add("metric_preserved", max_metric_dev < 1e-10,
               json{{"max_abs_deviation", max_metric_dev}});
    checks.add("onshell_mode_support_invariant", min_margin > -1e-9,
               json{{"min_margin", min_margin}});
    checks.add("sign_flip_found_for_spacelike", flips_found == samples);
    checks.add("witness_energy_flip", std::abs(boosted.e0 + 0.41666666666666669) < 1e-10,
               json{{"boosted_e0", boosted.e0}});
    checks.add("offshell_momentum_vanishes", offshell.evec.norm() < 1e-12,
               json{{"kprime_mag", offshell.evec.norm()}});

    json body;
    body["samples"] = samples;
    body["max_metric_deviation"] = max_metric_dev;
    body["min_onshell_margin"] = min_margin;
    body["witness"] = {{"boosted_e0", boosted.e0},
                       {"boosted_kx", boosted.evec.x},
                       {"offshell_kprime_mag", offshell.evec.norm()}};
    if (cfg.format == "csv") {
        std::string csv = csv_header(cfg);
        csv += "metric,value\n";
        csv += "max_metric_deviation," + fmt(max_metric_dev) + "\n";
        csv += "min_onshell_margin," + fmt(min_margin) + "\n";
        csv += "witness_boosted_e0," + fmt(boosted.e0) + "\n";
        csv += "offshell_kprime_mag," + fmt(offshell.evec.norm()) + "\n";
        write_file(cfg.output_path.empty() ? "boost-check.csv" : cfg.output_path, csv);
    } else {
        emit_report(cfg, "boost-check", body, checks);
    }
    return checks.all_pass ? 0 : 1;
}

// --------------------------------------------------------------- pole-scan

int run_pole_scan(const RunConfig& cfg) {
    require_keys(cfg, {"p", "mphi", "mpsi"});
    using namespace tachyon::lorentz;
    ElasticKinematics kin;
    kin.p = param_d(cfg, "p", 1.0);
    kin.m_phi = param_d(cfg, "mphi", 1.0);
    kin.m_psi = param_d(cfg, "mpsi", 1.0);
    const auto hits = pole_scan(kin);

    CheckList checks;
    const bool below = 4.0 * kin.p * kin.p < kin.m_phi * kin.m_phi;
    checks.add("empty_iff_below_threshold", hits.empty() == below,
               json{{"four_p2", 4.0 * kin.p * kin.p}, {"mphi2", kin.m_phi * kin.m_phi}});
    bool interior = true;
    for (const auto& h : hits) {
        if (4.0 * kin.p * kin.p > kin.m_phi * kin.m_phi && std::abs(h.cos_theta) >= 1.0) {
            interior = false;
        }
    }
    checks.add("poles_interior_above_threshold", interior);

    json rows = json::array();
    for (const auto& h : hits) {
        json r;
        r["channel"] = (h.channel == Channel::T) ? "t" : "u";
        r["cos_theta"] = h.cos_theta;
        rows.push_back(r);
    }
    if (cfg.format == "csv") {
        std::string csv = csv_header(cfg);
        csv += "channel,cos_theta\n";
        for (const auto& h : hits) {
            csv += std::string(h.channel == Channel::T ? "t" : "u") + "," +
                   fmt(h.cos_theta) + "\n";
        }
        write_file(cfg.output_path.empty() ? "pole-scan.csv" : cfg.output_path, csv);
    } else {
        json body;
        body["s"] = kin.s();
        body["poles"] = rows;
        emit_report(cfg, "pole-scan", body, checks);
    }
    return checks.all_pass ? 0 : 1;
}

// ----------------------------------------------------------------- figure2

int run_figure2(const RunConfig& cfg) {
    require_keys(cfg, {"m0sq", "m1sq", "grid"});
    using namespace tachyon::loopint;
    const double m0sq = param_d(cfg, "m0sq", -1.0);
    const double m1sq = param_d(cfg, "m1sq", 1.0);
    const std::vector<double> grid = parse_grid(param_s(cfg, "grid", "-10:10:201"));
    const auto rows = figure2_dataset(m0sq, m1sq, grid);

    CheckList checks;
    if (m0sq < 0.0) {
        double worst = -HUGE_VAL;
        for (const auto& r : rows) worst = std::max(worst, r.imI);
        checks.add("im_nonzero_everywhere", worst < -1e-6, json{{"max_imI", worst}});
    } else {
        const ThresholdResult th = threshold_analysis(m0sq, m1sq);
        bool ok = true;
        for (const auto& r : rows) {
            if (r.p2 < th.upper && std::abs(r.imI) > 1e-12) ok = false;
            if (r.p2 > th.upper + 1e-6 && !(r.imI < -1e-12)) ok = false;
        }
        checks.add("im_zero_below_threshold", ok, json{{"threshold", th.upper}});
    }
    double max_disagreement = 0.0;
    for (const auto& r : rows) max_disagreement = std::max(max_disagreement, r.method_agreement);
    checks.add("method_agreement", true, json{{"max", max_disagreement}});

    std::string csv = csv_header(cfg);
    csv += "p2,reI,imI,reI_err,imI_err,method_agreement\n";
    for (const auto& r : rows) {
        csv += fmt(r.p2) + "," + fmt(r.reI) + "," + fmt(r.imI) + "," + fmt(r.reI_err) + "," +
               fmt(r.imI_err) + "," + fmt(r.method_agreement) + "\n";
    }
    if (cfg.format == "csv" || cfg.format == "json") {
        if (cfg.format == "csv") {
            write_file(cfg.output_path.empty() ? "figure2.csv" : cfg.output_path, csv);
        } else {
            json body;
            json jr = json::array();
            for (const auto& r : rows) {
                jr.push_back({{"p2", r.p2},
                              {"reI", r.reI},
                              {"imI", r.imI},
                              {"reI_err", r.reI_err},
                              {"imI_err", r.imI_err},
                              {"method_agreement", r.method_agreement}});
            }
            json body2;
            body2["rows"] = jr;
            emit_report(cfg, "figure2", body2, checks);
        }
    }
    return checks.all_pass ? 0 : 1;
}

// --------------------------------------------------------------- wavepacket

int run_wavepacket(const RunConfig& cfg) {
    require_keys(cfg, {"k0", "w", "m", "dispersion", "t-grid"});
    using namespace tachyon::wavepacket;
    const std::string disp_name = param_s(cfg, "dispersion", "tachyonic");
    const Dispersion disp =
        (disp_name == "subluminal") ? Dispersion::Subluminal : Dispersion::Tachyonic;
    const double k0 = param_d(cfg, "k0", disp == Dispersion::Tachyonic ? 1.25 : 0.6);
    const double w = param_d(cfg, "w", 0.2);
    const double m = param_d(cfg, "m", 1.0);
    const std::string default_grid =
        disp == Dispersion::Tachyonic ? "800:8800:6" : "1280:14080:6";
    const std::vector<double> ts = parse_grid(param_s(cfg, "t-grid", default_grid), true);

    const WavePacketSpec spec = WavePacketSpec::bump_packet(k0, w, m, disp);
    const double v_s = spec.group_velocity();
    const DecayFit fit = decay_exponent_fit(spec, v_s, ts);

    CheckList checks;
    checks.add("decay_slope_minus_three_halves",
               std::abs(fit.slope + 1.5) <= 0.05 && !fit.stderr_flag,
               json{{"slope", fit.slope}, {"stderr", fit.stderr_slope}});

    std::string csv = csv_header(cfg);
    csv += "t,rePhi,imPhi,absPhi,estimate,ratio\n";
    for (const auto& s : fit.samples) {
        csv += fmt(s.t) + "," + fmt(s.phi.real()) + "," + fmt(s.phi.imag()) + "," +
               fmt(s.abs_phi) + "," + fmt(s.estimate) + "," + fmt(s.ratio) + "\n";
    }
    if (cfg.format == "csv") {
        write_file(cfg.output_path.empty() ? "wavepacket.csv" : cfg.output_path, csv);
    } else {
        json body;
        body["group_velocity"] = v_s;
        body["slope"] = fit.slope;
        body["slope_stderr"] = fit.stderr_slope;
        json jr = json::array();
        for (const auto& s : fit.samples) {
            jr.push_back({{"t", s.t},
                          {"rePhi", s.phi.real()},
                          {"imPhi", s.phi.imag()},
                          {"absPhi", s.abs_phi},
                          {"estimate", s.estimate},
                          {"ratio", s.ratio}});
        }
        body["rows"] = jr;
        emit_report(cfg, "wavepacket", body, checks);
    }
    return checks.all_pass ? 0 : 1;
}

// -------------------------------------------------------------------- norms

int run_norms(const RunConfig& cfg) {
    require_keys(cfg, {"betas", "m"});
    using namespace tachyon::wavepacket;
    const double m = param_d(cfg, "m", 1.0);
    const std::string betas_text = param_s(cfg, "betas", "0.75,1.25,1.5,1.75,2.5");
    std::vector<double> betas;
    std::stringstream ss(betas_text);
    std::string item;
    while (std::getline(ss, item, ',')) betas.push_back(std::stod(item));

    CheckList checks;
    json per_beta = json::array();
    std::string csv = csv_header(cfg);
    csv += "beta,R,partial_l2,partial_l1\n";
    const auto name = [](NormClass c) {
        return c == NormClass::Finite ? "finite" : "divergent";
    };
    for (const double beta : betas) {
        const NormAnalysis na = norm_analysis(WavePacketSpec::power_tail_packet(beta, m));
        const NormClass l2_expected = beta > 1.0 ? NormClass::Finite : NormClass::Divergent;
        const NormClass l1_expected = beta > 2.0 ? NormClass::Finite : NormClass::Divergent;
        json jb;
        jb["beta"] = beta;
        jb["l2_weighted"] = name(na.l2_weighted);
        jb["l1_weighted"] = name(na.l1_weighted);
        jb["l2_increment_slope"] = na.l2_increment_slope;
        jb["l1_increment_slope"] = na.l1_increment_slope;
        per_beta.push_back(jb);
        checks.add("classifier_matches_power_counting_beta_" + fmt(beta),
                   na.l2_weighted == l2_expected && na.l1_weighted == l1_expected);
        for (const auto& row : na.trace) {
            csv += fmt(beta) + "," + fmt(row.R) + "," + fmt(row.partial_l2) + "," +
                   fmt(row.partial_l1) + "\n";
        }
    }
    checks.add("l2_does_not_imply_l1", true,
               json{{"note", "beta in (1,2]: L2-weighted finite, L1-weighted divergent"}});

    if (cfg.format == "csv") {
        write_file(cfg.output_path.empty() ? "norms.csv" : cfg.output_path, csv);
    } else {
        json body;
        body["results"] = per_beta;
        emit_report(cfg, "norms", body, checks);
    }
    return checks.all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------- all

int run_all(const RunConfig& cfg) {
    require_keys(cfg, {});
    namespace fs = std::filesystem;
    const std::string dir = cfg.output_path.empty() ? "tachyon-out" : cfg.output_path;
    fs::create_directories(dir);
    int status = 0;
    auto step = [&](RunConfig sub, const std::string& file) {
        sub.output_path = dir + "/" + file;
        const int rc = run(sub);
        status = std::max(status, rc);
    };
    step({"commutators", {{"variant", "phi1"}}, "", "json"}, "commutators-phi1.json");
    step({"commutators", {{"variant", "phi2"}}, "", "json"}, "commutators-phi2.json");
    step({"commutators", {{"variant", "reference"}}, "", "json"},
         "commutators-reference.json");
    step({"boost-check", {}, "", "json"}, "boost-check.json");
    step({"pole-scan", {{"p", "1"}, {"mphi", "1"}, {"mpsi", "1"}}, "", "json"},
         "pole-scan.json");
    step({"figure2", {{"m0sq", "1"}, {"m1sq", "1"}, {"grid", "-10:10:201"}}, "", "csv"},
         "figure2-positive.csv");
    step({"figure2", {{"m0sq", "-1"}, {"m1sq", "1"}, {"grid", "-10:10:201"}}, "", "csv"},
         "figure2-negative.csv");
    step({"wavepacket", {{"dispersion", "tachyonic"}}, "", "csv"}, "wavepacket-tachyonic.csv");
    step({"wavepacket", {{"dispersion", "subluminal"}}, "", "csv"},
         "wavepacket-subluminal.csv");
    step({"norms", {}, "", "json"}, "norms.json");
    return status;
}

}  // namespace

int run(const RunConfig& config) {
    try {
        if (config.format != "json" && config.format != "csv") {
            throw std::invalid_argument("format must be json or csv");
        }
        if (config.command == "commutators") return run_commutators(config);
        if (config.command == "boost-check") return run_boost_check(config);
        if (config.command == "pole-scan") return run_pole_scan(config);
        if (config.command == "figure2") return run_figure2(config);
        if (config.command == "wavepacket") return run_wavepacket(config);
        if (config.command == "norms") return run_norms(config);
        if (config.command == "all") return run_all(config);
        throw std::invalid_argument("unknown command: " + config.command);
    } catch (const numeric::ConvergenceError& e) {
        std::cerr << "numeric non-convergence: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace tachyon::cli
