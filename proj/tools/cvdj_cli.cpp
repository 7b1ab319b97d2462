// Command-line front end; talks to the library through the C API only.
#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cvdj/cvdj.h"

namespace {

constexpr double kPi = std::numbers::pi;

const char* kUsage =
    "usage: cvdj <subcommand> [options]\n"
    "subcommands:\n"
    "  dv-run             exact qubit-register run: --z BITS\n"
    "  cv-encode          sampled momentum signal: --z BITS --P REAL --samples M\n"
    "  cv-pdf             position density on a grid: --z BITS --P REAL --xmin A --xmax B --points K\n"
    "  cv-prob            window detection probability: --z BITS --P REAL --delta D\n"
    "  optimal-delta      best window half-width: --P REAL\n"
    "  asb-check          block-pair dominance: --N EVEN --grid POINTS\n"
    "  amplify            majority-vote Monte Carlo: --m QUERIES --runs R [--illustrative]\n"
    "  classical-baseline classical query bounds: --N EVEN --m QUERIES\n"
    "  reproduce-figures  write figure CSV data files: [--output DIR]\n"
    "global options: --format {json,csv}, --output PATH, --seed U64\n";

// ---------------------------------------------------------------- formatting

std::string float_text(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// JSON numbers carry 17 significant digits; integral values keep a ".0" so
// they read back as floating point.
std::string json_number(double v) {
    std::string s = float_text(v);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

std::string json_quote(const std::string& s) { return "\"" + s + "\""; }

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw CLI::ValidationError("--output", "cannot open '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

// ------------------------------------------------------------------ C glue

[[noreturn]] void fail_api(cvdj_status status) {
    std::cerr << "error: " << cvdj_last_error() << "\n";
    std::exit(1);
}

void check(cvdj_status status) {
    if (status != CVDJ_OK) fail_api(status);
}

struct BitsDeleter {
    void operator()(cvdj_bitstring* z) const { cvdj_bitstring_free(z); }
};
using BitsPtr = std::unique_ptr<cvdj_bitstring, BitsDeleter>;

BitsPtr parse_bits(const std::string& text) {
    cvdj_bitstring* z = nullptr;
    check(cvdj_bitstring_parse(text.c_str(), &z));
    return BitsPtr(z);
}

const char* class_name(int promise_class) {
    switch (promise_class) {
        case CVDJ_PROMISE_CONSTANT: return "Constant";
        case CVDJ_PROMISE_BALANCED: return "Balanced";
        default: return "Neither";
    }
}

// ------------------------------------------------------------- subcommands

struct GlobalOpts {
    std::string format;  // empty = subcommand default
    std::string output;
    std::uint64_t seed = 0;
};

void emit_table(std::ostream& os, const std::string& format_default, const GlobalOpts& g,
                const std::vector<std::string>& names,
                const std::vector<const std::vector<double>*>& columns) {
    const std::string fmt = g.format.empty() ? format_default : g.format;
    const std::size_t rows = columns.empty() ? 0 : columns[0]->size();
    if (fmt == "csv") {
        for (std::size_t c = 0; c < names.size(); ++c)
            os << (c ? "," : "") << names[c];
        os << "\n";
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < columns.size(); ++c)
                os << (c ? "," : "") << float_text((*columns[c])[r]);
            os << "\n";
        }
    } else {
        os << "{";
        for (std::size_t c = 0; c < names.size(); ++c) {
            if (c) os << ",";
            os << json_quote(names[c]) << ":[";
            for (std::size_t r = 0; r < rows; ++r)
                os << (r ? "," : "") << json_number((*columns[c])[r]);
            os << "]";
        }
        os << "}\n";
    }
}

// One flat record, JSON object or a two-line CSV.
struct Record {
    std::vector<std::string> keys;
    std::vector<std::string> json_values;  // already serialized
    std::vector<std::string> csv_values;

    void add_number(const std::string& key, double v) {
        keys.push_back(key);
        json_values.push_back(json_number(v));
        csv_values.push_back(float_text(v));
    }
    void add_integer(const std::string& key, std::uint64_t v) {
        keys.push_back(key);
        json_values.push_back(std::to_string(v));
        csv_values.push_back(std::to_string(v));
    }
    void add_string(const std::string& key, const std::string& v) {
        keys.push_back(key);
        json_values.push_back(json_quote(v));
        csv_values.push_back(v);
    }
    void add_bool(const std::string& key, bool v) {
        keys.push_back(key);
        json_values.push_back(v ? "true" : "false");
        csv_values.push_back(v ? "true" : "false");
    }
    void add_raw_json(const std::string& key, const std::string& v,
                      const std::string& csv_form) {
        keys.push_back(key);
        json_values.push_back(v);
        csv_values.push_back(csv_form);
    }

    void emit(std::ostream& os, const std::string& format_default, const GlobalOpts& g) const {
        const std::string fmt = g.format.empty() ? format_default : g.format;
        if (fmt == "csv") {
            for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
            os << "\n";
            for (std::size_t i = 0; i < csv_values.size(); ++i)
                os << (i ? "," : "") << csv_values[i];
            os << "\n";
        } else {
            os << "{";
            for (std::size_t i = 0; i < keys.size(); ++i) {
                if (i) os << ",";
                os << json_quote(keys[i]) << ":" << json_values[i];
            }
            os << "}\n";
        }
    }
};

int cmd_dv_run(const std::string& z_text, const GlobalOpts& g) {
    BitsPtr z = parse_bits(z_text);
    std::uint32_t n = 0;
    double prob = 0.0;
    check(cvdj_dv_run(z.get(), &n, &prob));
    Record rec;
    rec.add_integer("n", n);
    rec.add_string("class", class_name(cvdj_bitstring_classify(z.get())));
    rec.add_number("prob_zero", prob);
    Output out(g.output);
    rec.emit(out.stream(), "json", g);
    return 0;
}

int cmd_cv_encode(const std::string& z_text, double P, std::uint32_t samples,
                  const GlobalOpts& g) {
    BitsPtr z = parse_bits(z_text);
    std::vector<double> p(samples), value(samples);
    check(cvdj_encoded_momentum_samples(z.get(), P, samples, p.data(), value.data()));
    Output out(g.output);
    emit_table(out.stream(), "csv", g, {"p", "value"}, {&p, &value});
    return 0;
}

int cmd_cv_pdf(const std::string& z_text, double P, double xmin, double xmax,
               std::uint32_t points, const GlobalOpts& g) {
    BitsPtr z = parse_bits(z_text);
    std::vector<double> x(points), density(points);
    check(cvdj_pdf_samples(z.get(), P, xmin, xmax, points, x.data(), density.data()));
    Output out(g.output);
    emit_table(out.stream(), "csv", g, {"x", "pdf"}, {&x, &density});
    return 0;
}

int cmd_cv_prob(const std::string& z_text, double P, double delta, const GlobalOpts& g) {
    BitsPtr z = parse_bits(z_text);
    double prob = 0.0;
    check(cvdj_window_probability(z.get(), P, delta, &prob));
    Record rec;
    rec.add_number("prob", prob);
    Output out(g.output);
    rec.emit(out.stream(), "json", g);
    return 0;
}

int cmd_optimal_delta(double P, const GlobalOpts& g) {
    double delta = 0.0;
    check(cvdj_optimal_delta(P, &delta));
    Record rec;
    rec.add_number("delta", delta);
    rec.add_number("P_delta_product", delta * P);
    Output out(g.output);
    rec.emit(out.stream(), "json", g);
    return 0;
}

int cmd_asb_check(std::uint32_t n, std::uint32_t grid, const GlobalOpts& g) {
    cvdj_dominance_report rep{};
    check(cvdj_verify_asb_dominance(n, grid, &rep));
    Record rec;
    rec.add_bool("holds", rep.holds != 0);
    rec.add_number("worst_margin", rep.worst_margin);
    if (rep.has_witness) {
        const std::string w = std::string("{\"z\":") + json_quote(rep.witness_bits) +
                              ",\"x\":" + json_number(rep.witness_x) +
                              ",\"excess\":" + json_number(rep.witness_excess) + "}";
        rec.add_raw_json("witness", w, std::string(rep.witness_bits));
    } else {
        rec.add_raw_json("witness", "null", "");
    }
    rec.add_integer("strings_checked", rep.strings_checked);
    rec.add_integer("grid_points", rep.grid_points);
    Output out(g.output);
    rec.emit(out.stream(), "json", g);
    return 0;
}

int cmd_amplify(std::uint64_t m, std::uint64_t runs, bool illustrative, const GlobalOpts& g) {
    cvdj_query_model model{};
    check(illustrative ? cvdj_query_model_illustrative(&model)
                       : cvdj_query_model_optimal(&model));
    cvdj_amplification_report reports[2] = {};
    check(cvdj_monte_carlo_error(&model, m, runs, g.seed, reports));

    Output out(g.output);
    std::ostream& os = out.stream();
    const std::string fmt = g.format.empty() ? "json" : g.format;
    if (fmt == "csv") {
        os << "truth,m,runs,seed,first_run_detections,first_run_decision,error_count,"
              "empirical_error,chernoff_bound\n";
        for (const auto& r : reports) {
            os << class_name(r.truth) << "," << r.queries << "," << r.runs << "," << r.seed
               << "," << r.first_run_detections << "," << class_name(r.first_run_decision)
               << "," << r.error_count << "," << float_text(r.empirical_error) << ","
               << float_text(r.chernoff_bound) << "\n";
        }
        return 0;
    }
    os << "{\"m\":" << m << ",\"runs\":" << runs << ",\"seed\":" << g.seed
       << ",\"illustrative\":" << (illustrative ? "true" : "false")
       << ",\"p_detect_constant\":" << json_number(model.p_detect_constant)
       << ",\"p_detect_balanced\":" << json_number(model.p_detect_balanced)
       << ",\"success_bound\":" << json_number(cvdj_success_bound(m));
    for (const auto& r : reports) {
        os << ",\"" << (r.truth == CVDJ_PROMISE_CONSTANT ? "constant" : "balanced") << "\":{"
           << "\"first_run_detections\":" << r.first_run_detections
           << ",\"first_run_decision\":" << json_quote(class_name(r.first_run_decision))
           << ",\"error_count\":" << r.error_count
           << ",\"empirical_error\":" << json_number(r.empirical_error)
           << ",\"chernoff_bound\":" << json_number(r.chernoff_bound) << "}";
    }
    os << "}\n";
    return 0;
}

int cmd_classical_baseline(std::uint64_t n, std::uint64_t m, const GlobalOpts& g) {
    double exact = 0.0, lower = 0.0;
    check(cvdj_classical_probabilistic_bound(n, m, &exact, &lower));
    Record rec;
    rec.add_number("exact", exact);
    rec.add_number("lower_bound", lower);
    Output out(g.output);
    rec.emit(out.stream(), "json", g);
    return 0;
}

// ------------------------------------------------------- figure data files

void write_samples_csv(const std::filesystem::path& path, const char* z_text, double P,
                       std::uint32_t samples) {
    BitsPtr z = parse_bits(z_text);
    std::vector<double> p(samples), value(samples);
    check(cvdj_encoded_momentum_samples(z.get(), P, samples, p.data(), value.data()));
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot write '" << path.string() << "'\n";
        std::exit(1);
    }
    os << "p,value\n";
    for (std::uint32_t k = 0; k < samples; ++k)
        os << float_text(p[k]) << "," << float_text(value[k]) << "\n";
}

void write_pdf_csv(const std::filesystem::path& path, const char* z_text, double P,
                   double xmin, double xmax, std::uint32_t points) {
    BitsPtr z = parse_bits(z_text);
    std::vector<double> x(points), density(points);
    check(cvdj_pdf_samples(z.get(), P, xmin, xmax, points, x.data(), density.data()));
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot write '" << path.string() << "'\n";
        std::exit(1);
    }
    os << "x,pdf\n";
    for (std::uint32_t i = 0; i < points; ++i)
        os << float_text(x[i]) << "," << float_text(density[i]) << "\n";
}

int cmd_reproduce_figures(const GlobalOpts& g) {
    namespace fs = std::filesystem;
    const fs::path dir = g.output.empty() ? fs::path(".") : fs::path(g.output);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        std::cerr << "error: cannot create directory '" << dir.string() << "': " << ec.message()
                  << "\n";
        return 1;
    }

    // Encoded momentum signals, N = 4, P = 1, one file per panel setting.
    const char* settings[4] = {"0000", "0011", "0101", "0110"};
    const char* panels = "abcd";
    for (int i = 0; i < 4; ++i) {
        write_samples_csv(dir / (std::string("fig4_") + panels[i] + ".csv"), settings[i], 1.0,
                          256);
    }
    // Position densities for the same settings over [-4 pi, 4 pi].
    for (int i = 0; i < 4; ++i) {
        write_pdf_csv(dir / (std::string("fig6_") + panels[i] + ".csv"), settings[i], 1.0,
                      -4.0 * kPi, 4.0 * kPi, 2001);
    }

    // Phasor angles for N = 8 at two representative positions.
    {
        std::ofstream os(dir / "fig7_phasors.csv", std::ios::binary);
        if (!os) {
            std::cerr << "error: cannot write 'fig7_phasors.csv'\n";
            return 1;
        }
        os << "x,slot,angle\n";
        for (double x : {kPi / 2.0, kPi / 4.0}) {
            double angles[8] = {};
            check(cvdj_phasor_angles(8, 1.0, x, angles));
            for (int j = 0; j < 8; ++j)
                os << float_text(x) << "," << (j + 1) << "," << float_text(angles[j]) << "\n";
        }
    }

    // Window probabilities and their separation as the window widens.
    {
        std::ofstream os(dir / "fig8_window.csv", std::ios::binary);
        if (!os) {
            std::cerr << "error: cannot write 'fig8_window.csv'\n";
            return 1;
        }
        os << "delta,prob_constant,prob_asb,separation\n";
        for (int k = 1; k <= 1000; ++k) {
            const double delta = 2.0 * kPi * static_cast<double>(k) / 1000.0;
            double pc = 0.0, pa = 0.0;
            check(cvdj_constant_window_prob(1.0, delta, &pc));
            check(cvdj_asb_window_prob(1.0, delta, &pa));
            os << float_text(delta) << "," << float_text(pc) << "," << float_text(pa) << ","
               << float_text(pc - pa) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::string> known = {
        "dv-run",  "cv-encode", "cv-pdf",             "cv-prob",           "optimal-delta",
        "asb-check", "amplify",   "classical-baseline", "reproduce-figures",
    };
    if (argc < 2) {
        std::cerr << kUsage;
        return 2;
    }
    const std::string first = argv[1];
    if (first == "-h" || first == "--help") {
        std::cout << kUsage;
        return 0;
    }
    if (first == "--version") {
        std::cout << cvdj_version() << "\n";
        return 0;
    }
    if (std::find(known.begin(), known.end(), first) == known.end()) {
        std::cerr << "error: unknown subcommand '" << first << "'\n" << kUsage;
        return 2;
    }

    CLI::App app{"promise-decision simulator: exact qubit runs and the continuous analogue"};
    app.require_subcommand(1);

    GlobalOpts g;
    // Registered on every subcommand so they can appear anywhere on the line.
    auto add_global = [&g](CLI::App* cmd) {
        cmd->add_option("--format", g.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--output", g.output, "output file (or directory for figure data)");
        cmd->add_option("--seed", g.seed, "random seed (default 0)");
    };

    std::string z_text;
    double P = 1.0, delta = 0.0, xmin = 0.0, xmax = 0.0;
    std::uint32_t samples = 0, points = 0, N = 0, grid = 2001;
    std::uint64_t m = 0, runs = 10000, Nq = 0;
    bool illustrative = false;

    CLI::App* dv = app.add_subcommand("dv-run", "exact qubit-register run");
    dv->add_option("--z", z_text, "oracle setting bits")->required();
    add_global(dv);

    CLI::App* enc = app.add_subcommand("cv-encode", "sampled momentum signal");
    enc->add_option("--z", z_text)->required();
    enc->add_option("--P", P, "half-extent")->required();
    enc->add_option("--samples", samples, "sample count")->required();
    add_global(enc);

    CLI::App* pdfc = app.add_subcommand("cv-pdf", "position density grid");
    pdfc->add_option("--z", z_text)->required();
    pdfc->add_option("--P", P)->required();
    pdfc->add_option("--xmin", xmin)->required();
    pdfc->add_option("--xmax", xmax)->required();
    pdfc->add_option("--points", points)->required();
    add_global(pdfc);

    CLI::App* prob = app.add_subcommand("cv-prob", "window detection probability");
    prob->add_option("--z", z_text)->required();
    prob->add_option("--P", P)->required();
    prob->add_option("--delta", delta, "window half-width")->required();
    add_global(prob);

    CLI::App* opt = app.add_subcommand("optimal-delta", "best window half-width");
    opt->add_option("--P", P)->required();
    add_global(opt);

    CLI::App* asb = app.add_subcommand("asb-check", "block-pair dominance check");
    asb->add_option("--N", N, "even bit count")->required();
    asb->add_option("--grid", grid, "grid points over [0, pi/2]");
    add_global(asb);

    CLI::App* amp = app.add_subcommand("amplify", "majority-vote Monte Carlo");
    amp->add_option("--m", m, "queries per run")->required();
    amp->add_option("--runs", runs, "Monte-Carlo runs");
    amp->add_flag("--illustrative", illustrative, "use the (3/4, 1/4) model");
    add_global(amp);

    CLI::App* cls = app.add_subcommand("classical-baseline", "classical query bounds");
    cls->add_option("--N", Nq, "even bit count")->required();
    cls->add_option("--m", m, "query count")->required();
    add_global(cls);

    CLI::App* fig = app.add_subcommand("reproduce-figures", "write figure CSV data");
    add_global(fig);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (dv->parsed()) return cmd_dv_run(z_text, g);
        if (enc->parsed()) return cmd_cv_encode(z_text, P, samples, g);
        if (pdfc->parsed()) return cmd_cv_pdf(z_text, P, xmin, xmax, points, g);
        if (prob->parsed()) return cmd_cv_prob(z_text, P, delta, g);
        if (opt->parsed()) return cmd_optimal_delta(P, g);
        if (asb->parsed()) return cmd_asb_check(N, grid, g);
        if (amp->parsed()) return cmd_amplify(m, runs, illustrative, g);
        if (cls->parsed()) return cmd_classical_baseline(Nq, m, g);
        if (fig->parsed()) return cmd_reproduce_figures(g);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << kUsage;
    return 2;
}
