#include "bergman/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bergman/bounds.hpp"
#include "bergman/csv.hpp"
#include "bergman/errors.hpp"
#include "bergman/extremal.hpp"
#include "bergman/function_spec.hpp"
#include "bergman/norms.hpp"
#include "bergman/suites.hpp"

namespace bergman::cli {

namespace {

constexpr const char* kCsvHelp = R"(CSV tables (floats with 17 significant digits):
  norm     space,f,alpha,p,q,value,abs_error,converged
  bounds   quantity,alpha,p,value
  verify   name,alpha,p,lhs,relation,rhs,margin,passed,tolerance,note
  search   alpha,p,c_tilde,residual,n_coeffs,restarts,seed
           plus <output stem>_coefficients.csv with n,re,im
  bracket  alpha,lo,hi,c_tilde_lo,c_tilde_hi,hi_certified,searches
  scan     alpha,p,c_tilde,c_tilde_over_p,liminf_bound,limsup_bound,growth_lower,growth_upper
`report --input table.csv --output plot.svg` renders any of these.)";

struct Options {
    double alpha = 0.0;
    double p = 2.0;
    double q = 2.0;
    std::string f;
    std::string space = "bergman";
    std::string suite = "all";
    std::string output;
    std::string input;
    std::string format;
    double plo = 2.0;
    double phi = 6.25;
    double c2 = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> pgrid{2.0, 4.0, 8.0, 16.0};
    QuadratureScheme scheme;
    SearchConfig search;
};

std::string fmt(double x) { return csv::num(x); }

// Output sink: --output path or the stream, format from --format or the extension.
class Sink {
public:
    Sink(const Options& o, std::ostream& out) : path_(o.output), out_(out) {
        format_ = o.format;
        if (format_.empty()) {
            const auto ext = std::filesystem::path(path_).extension().string();
            format_ = path_.empty() ? "text" : (ext == ".svg" ? "svg" : "csv");
        }
        if (format_ != "text" && format_ != "csv" && format_ != "svg")
            throw ArgumentError("--format must be text, csv or svg");
    }

    const std::string& format() const { return format_; }

    // Emits a CSV table, or its SVG rendering.
    void table(const std::string& csv_text) { write(format_ == "svg" ? render_svg(csv_text) : csv_text); }

    void text(const std::string& s) { write(s); }

    // Extra file next to --output, e.g. coefficient tables.
    void sidecar(const std::string& suffix, const std::string& body) const {
        if (path_.empty()) return;
        const std::filesystem::path p(path_);
        write_file((p.parent_path() / (p.stem().string() + suffix)).string(), body);
    }

private:
    static void write_file(const std::string& path, const std::string& body) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ArgumentError("cannot open output file '" + path + "'");
        f << body;
    }

    void write(const std::string& body) {
        if (path_.empty())
            out_ << body;
        else
            write_file(path_, body);
    }

    std::string path_;
    std::string format_;
    std::ostream& out_;
};

std::string rows_to_csv(const std::string& header, const std::vector<std::string>& rows) {
    std::string s = header + "\n";
    for (const auto& r : rows) s += r + "\n";
    return s;
}

int cmd_norm(const Options& o, Sink& sink) {
    if (o.f.empty()) throw ArgumentError("norm: --f is required");
    const auto f = parse_function_spec(o.f);
    double value = 0.0, err = 0.0;
    bool converged = true;
    if (o.space == "bergman") {
        const auto r = bergman_norm(f, o.p, o.alpha, o.scheme);
        value = r.value;
        err = r.abs_error_estimate;
        converged = r.converged;
    } else if (o.space == "bloch") {
        value = bloch_norm(f);
    } else if (o.space == "besov1" || o.space == "besov2") {
        const auto r = besov_norm(f, o.q, o.space == "besov1" ? BesovVariant::norm1 : BesovVariant::norm2, o.scheme);
        value = r.value;
        err = r.abs_error_estimate;
        converged = r.converged;
    } else if (o.space == "b1atomic") {
        value = b1_atomic_upper_bound(f);
    } else {
        throw ArgumentError("norm: unknown --space '" + o.space + "'");
    }
    if (sink.format() == "text") {
        sink.text(fmt(value) + "\n");
    } else {
        sink.table(rows_to_csv("space,f,alpha,p,q,value,abs_error,converged",
                               {csv::join({o.space, o.f, fmt(o.alpha), fmt(o.p), fmt(o.q), fmt(value), fmt(err),
                                           converged ? "true" : "false"})}));
    }
    return kExitOk;
}

int cmd_bounds(const Options& o, Sink& sink) {
    std::vector<std::pair<std::string, double>> rows;
    if (o.alpha >= 0.0) rows.emplace_back("contractivity_threshold", contractivity_threshold(o.alpha));
    if (o.p >= 1.0) {
        rows.emplace_back("growth_lower", growth_lower(o.alpha, o.p));
        rows.emplace_back("growth_upper", growth_upper(o.alpha, o.p));
    }
    const double c2 = std::isnan(o.c2) ? 1.0 / std::sqrt(o.alpha + 1.0) : o.c2;
    if (o.p > 2.0) rows.emplace_back("upper_bound_via_2n", upper_bound_via_2n(o.alpha, o.p, c2));
    const auto ab = asymptotic_bounds(o.alpha);
    rows.emplace_back("liminf_bound", ab.liminf_bound);
    rows.emplace_back("limsup_bound", ab.limsup_bound);

    if (sink.format() == "text") {
        std::string s;
        for (const auto& [k, v] : rows) s += k + " " + fmt(v) + "\n";
        sink.text(s);
    } else {
        std::vector<std::string> lines;
        for (const auto& [k, v] : rows) lines.push_back(csv::join({k, fmt(o.alpha), fmt(o.p), fmt(v)}));
        sink.table(rows_to_csv("quantity,alpha,p,value", lines));
    }
    return kExitOk;
}

int cmd_verify(const Options& o, Sink& sink) {
    if (o.suite != "inclusion" && o.suite != "identities" && o.suite != "all")
        throw ArgumentError("verify: --suite must be inclusion, identities or all");
    std::vector<BoundReport> reports;
    if (o.suite != "identities") {
        auto r = verify_inclusion_suite(o.alpha, o.p, default_sample(o.search.seed), o.scheme, o.search.seed);
        reports.insert(reports.end(), r.begin(), r.end());
    }
    if (o.suite != "inclusion") {
        auto r = verify_identity_suite(o.alpha, o.search.seed, o.scheme);
        reports.insert(reports.end(), r.begin(), r.end());
    }
    const auto failed = std::count_if(reports.begin(), reports.end(), [](const BoundReport& r) { return !r.passed; });
    if (sink.format() == "text") {
        std::string s;
        for (const auto& r : reports) {
            s += std::string(r.passed ? "PASS " : "FAIL ") + r.name + ": " + fmt(r.lhs) + " " +
                 relation_symbol(r.relation) + " " + fmt(r.rhs) + " (margin " + fmt(r.margin) + ")";
            if (!r.note.empty()) s += " " + r.note;
            s += "\n";
        }
        s += std::to_string(reports.size() - static_cast<std::size_t>(failed)) + "/" + std::to_string(reports.size()) +
             " passed\n";
        sink.text(s);
    } else {
        std::vector<std::string> lines;
        for (const auto& r : reports) lines.push_back(report_csv_row(r));
        sink.table(rows_to_csv(report_csv_header(), lines));
    }
    return failed == 0 ? kExitOk : kExitFailedReport;
}

int cmd_search(const Options& o, Sink& sink) {
    SearchConfig cfg = o.search;
    const auto est = search_c_tilde(o.alpha, o.p, cfg, o.scheme);
    if (sink.format() == "text") {
        std::ostringstream s;
        s << "c_tilde " << fmt(est.c_tilde) << "\n"
          << "residual " << fmt(est.residual) << "\n"
          << "log_one_sided_weight " << fmt(est.log_one_sided_weight.real()) << " " << fmt(est.log_one_sided_weight.imag())
          << "\n"
          << "log_two_sided_weight " << fmt(est.log_two_sided_weight.real()) << " " << fmt(est.log_two_sided_weight.imag())
          << "\n"
          << "moebius_point " << fmt(est.moebius_point.real()) << " " << fmt(est.moebius_point.imag()) << "\n";
        for (const auto& r : est.restarts)
            s << "restart " << r.init << " evaluations " << r.evaluations << " objective " << fmt(r.objective) << " "
              << r.status << "\n";
        sink.text(s.str());
    } else {
        sink.table(rows_to_csv(estimate_csv_header(), {estimate_csv_row(est)}));
        sink.sidecar("_coefficients.csv", coefficients_csv(est));
    }
    return kExitOk;
}

int cmd_bracket(const Options& o, Sink& sink) {
    const auto b = p_alpha_bracket(o.alpha, o.plo, o.phi, o.search, o.scheme);
    if (sink.format() == "text") {
        sink.text("[" + fmt(b.lo) + ", " + fmt(b.hi) + "] c_tilde_lo " + fmt(b.c_tilde_lo) + " c_tilde_hi " +
                  fmt(b.c_tilde_hi) + " searches " + std::to_string(b.searches) + "\n");
    } else {
        sink.table(rows_to_csv(bracket_csv_header(), {bracket_csv_row(o.alpha, b)}));
    }
    return kExitOk;
}

int cmd_scan(const Options& o, Sink& sink) {
    const auto rows = asymptotic_scan(o.alpha, o.pgrid, o.search, o.scheme);
    std::vector<std::string> lines;
    for (const auto& r : rows) lines.push_back(scan_csv_row(r));
    const auto table = rows_to_csv(scan_csv_header(), lines);
    if (sink.format() == "text") {
        std::string s;
        for (const auto& r : rows)
            s += "p " + fmt(r.p) + " c_tilde " + fmt(r.c_tilde) + " c_tilde/p " + fmt(r.c_tilde_over_p) + "\n";
        sink.text(s);
    } else {
        sink.table(table);
    }
    return kExitOk;
}

int cmd_report(const Options& o, Sink& sink) {
    if (o.input.empty()) throw ArgumentError("report: --input is required");
    std::ifstream f(o.input, std::ios::binary);
    if (!f) throw ArgumentError("report: cannot read '" + o.input + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    sink.text(render_svg(buf.str()));
    return kExitOk;
}

// ---------------------------------------------------------------------------
// SVG

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> pts;
    bool markers = true;
};

struct Plot {
    std::string title, xlabel, ylabel;
    std::vector<Series> series;
    std::optional<double> hline;
};

std::string f2(double x) {
    char b[32];
    std::snprintf(b, sizeof b, "%.2f", x);
    return b;
}

std::string tick(double x) {
    char b[32];
    std::snprintf(b, sizeof b, "%.4g", x);
    return b;
}

std::string xml_escape(std::string_view s) {
    std::string o;
    for (char c : s) {
        switch (c) {
            case '&': o += "&amp;"; break;
            case '<': o += "&lt;"; break;
            case '>': o += "&gt;"; break;
            case '"': o += "&quot;"; break;
            default: o += c;
        }
    }
    return o;
}

std::string draw(const Plot& plot) {
    constexpr double W = 720, H = 440, L = 80, R = 200, T = 40, B = 60;
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

    double x0 = HUGE_VAL, x1 = -HUGE_VAL, y0 = HUGE_VAL, y1 = -HUGE_VAL;
    for (const auto& s : plot.series) {
        for (const auto& [x, y] : s.pts) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
    }
    if (plot.hline) {
        y0 = std::min(y0, *plot.hline);
        y1 = std::max(y1, *plot.hline);
    }
    if (!(x0 <= x1)) x0 = 0.0, x1 = 1.0;
    if (!(y0 <= y1)) y0 = 0.0, y1 = 1.0;
    if (x1 - x0 == 0.0) x0 -= 0.5, x1 += 0.5;
    if (y1 - y0 == 0.0) {
        const double d = std::max(std::abs(y0) * 0.1, 0.5);
        y0 -= d;
        y1 += d;
    }
    const double pad = 0.05 * (y1 - y0);
    y0 -= pad;
    y1 += pad;

    auto X = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
    auto Y = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W << "\" height=\"" << H
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << f2(W / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << xml_escape(plot.title)
      << "</text>\n"
      << "<rect x=\"" << f2(L) << "\" y=\"" << f2(T) << "\" width=\"" << f2(W - L - R) << "\" height=\""
      << f2(H - T - B) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double xv = x0 + (x1 - x0) * i / 5.0, yv = y0 + (y1 - y0) * i / 5.0;
        s << "<line x1=\"" << f2(X(xv)) << "\" y1=\"" << f2(H - B) << "\" x2=\"" << f2(X(xv)) << "\" y2=\""
          << f2(H - B + 5) << "\" stroke=\"black\"/>\n"
          << "<text x=\"" << f2(X(xv)) << "\" y=\"" << f2(H - B + 18) << "\" text-anchor=\"middle\">" << tick(xv)
          << "</text>\n"
          << "<line x1=\"" << f2(L - 5) << "\" y1=\"" << f2(Y(yv)) << "\" x2=\"" << f2(L) << "\" y2=\"" << f2(Y(yv))
          << "\" stroke=\"black\"/>\n"
          << "<text x=\"" << f2(L - 8) << "\" y=\"" << f2(Y(yv) + 4) << "\" text-anchor=\"end\">" << tick(yv)
          << "</text>\n";
    }
    s << "<text x=\"" << f2(L + (W - L - R) / 2) << "\" y=\"" << f2(H - 15) << "\" text-anchor=\"middle\">"
      << xml_escape(plot.xlabel) << "</text>\n"
      << "<text x=\"18\" y=\"" << f2(T + (H - T - B) / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << f2(T + (H - T - B) / 2) << ")\">" << xml_escape(plot.ylabel) << "</text>\n";
    if (plot.hline) {
        s << "<line x1=\"" << f2(L) << "\" y1=\"" << f2(Y(*plot.hline)) << "\" x2=\"" << f2(W - R) << "\" y2=\""
          << f2(Y(*plot.hline)) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    }
    for (std::size_t k = 0; k < plot.series.size(); ++k) {
        const auto& ser = plot.series[k];
        const char* c = colors[k % 7];
        std::string pts;
        for (const auto& [x, y] : ser.pts) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            if (!pts.empty()) pts += " ";
            pts += f2(X(x)) + "," + f2(Y(y));
        }
        s << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.5\" points=\"" << pts << "\"/>\n";
        if (ser.markers) {
            for (const auto& [x, y] : ser.pts) {
                if (!std::isfinite(x) || !std::isfinite(y)) continue;
                s << "<circle cx=\"" << f2(X(x)) << "\" cy=\"" << f2(Y(y)) << "\" r=\"3\" fill=\"" << c << "\"/>\n";
            }
        }
        const double ly = T + 10 + 18.0 * k;
        s << "<line x1=\"" << f2(W - R + 12) << "\" y1=\"" << f2(ly) << "\" x2=\"" << f2(W - R + 32) << "\" y2=\""
          << f2(ly) << "\" stroke=\"" << c << "\" stroke-width=\"2\"/>\n"
          << "<text x=\"" << f2(W - R + 38) << "\" y=\"" << f2(ly + 4) << "\">" << xml_escape(ser.label) << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

double num_field(const std::string& s) {
    if (s == "nan" || s == "-nan") return std::numeric_limits<double>::quiet_NaN();
    try {
        return std::stod(s);
    } catch (const std::exception&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

}  // namespace

std::string render_svg(std::string_view csv_text) {
    const auto rows = csv::parse(csv_text);
    if (rows.empty()) throw ArgumentError("report: empty CSV");
    const auto& head = rows.front();
    auto col = [&](std::string_view name) -> std::size_t {
        for (std::size_t i = 0; i < head.size(); ++i)
            if (head[i] == name) return i;
        throw ArgumentError("report: CSV lacks column '" + std::string(name) + "'");
    };
    auto get = [&](std::size_t r, std::string_view name) { return num_field(rows[r].at(col(name))); };
    const std::string h = csv::join(head);

    Plot plot;
    if (h == scan_csv_header()) {
        Series ratio{"c_tilde / p", {}}, lo{"liminf bound", {}, false}, hi{"limsup bound", {}, false},
            gl{"growth_lower / p", {}, false}, gu{"growth_upper / p", {}, false};
        for (std::size_t r = 1; r < rows.size(); ++r) {
            const double p = get(r, "p");
            ratio.pts.emplace_back(p, get(r, "c_tilde_over_p"));
            lo.pts.emplace_back(p, get(r, "liminf_bound"));
            hi.pts.emplace_back(p, get(r, "limsup_bound"));
            gl.pts.emplace_back(p, get(r, "growth_lower") / p);
            gu.pts.emplace_back(p, get(r, "growth_upper") / p);
        }
        plot = {"C~(p) / p against the bounds (alpha = " + (rows.size() > 1 ? rows[1][0] : std::string("?")) + ")",
                "p", "ratio", {ratio, lo, hi, gl, gu}, std::nullopt};
    } else if (h == estimate_csv_header()) {
        Series s{"c_tilde", {}};
        for (std::size_t r = 1; r < rows.size(); ++r) s.pts.emplace_back(get(r, "p"), get(r, "c_tilde"));
        plot = {"search estimates", "p", "c_tilde", {s}, 1.0};
    } else if (h == "n,re,im") {
        Series re{"Re c_n", {}}, im{"Im c_n", {}};
        for (std::size_t r = 1; r < rows.size(); ++r) {
            re.pts.emplace_back(get(r, "n"), get(r, "re"));
            im.pts.emplace_back(get(r, "n"), get(r, "im"));
        }
        plot = {"Taylor coefficients of the incumbent", "n", "coefficient", {re, im}, 0.0};
    } else if (h == bracket_csv_header()) {
        Series s{"c_tilde at the endpoints", {}};
        for (std::size_t r = 1; r < rows.size(); ++r) {
            s.pts.emplace_back(get(r, "lo"), get(r, "c_tilde_lo"));
            s.pts.emplace_back(get(r, "hi"), get(r, "c_tilde_hi"));
        }
        plot = {"bracket for the crossing c_tilde = 1", "p", "c_tilde", {s}, 1.0};
    } else if (h == report_csv_header()) {
        Series s{"margin", {}};
        for (std::size_t r = 1; r < rows.size(); ++r) s.pts.emplace_back(double(r - 1), get(r, "margin"));
        plot = {"verification margins (>= -tolerance passes)", "report index", "margin", {s}, 0.0};
    } else if (h == "quantity,alpha,p,value" || h == "space,f,alpha,p,q,value,abs_error,converged") {
        Series s{"value", {}};
        for (std::size_t r = 1; r < rows.size(); ++r) s.pts.emplace_back(double(r - 1), get(r, "value"));
        plot = {head[0] == "quantity" ? "closed-form bounds" : "norms", "row", "value", {s}, std::nullopt};
    } else {
        throw ArgumentError("report: unrecognised CSV header '" + h + "'");
    }
    return draw(plot);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bloch to weighted Bergman inclusion constants", "bergman"};
    app.footer(kCsvHelp);
    app.require_subcommand(1, 1);
    Options o;

    auto add_scheme = [&](CLI::App* c) {
        c->add_option("--n-radial", o.scheme.n_radial, "radial nodes (initial m = n_radial / 8 per panel)");
        c->add_option("--n-angular", o.scheme.n_angular, "initial angular nodes per circle");
        c->add_option("--rel-tol", o.scheme.rel_tol, "relative tolerance of the quadrature");
    };
    auto add_search = [&](CLI::App* c) {
        c->add_option("--n-coeffs", o.search.n_coeffs, "Taylor coefficients searched");
        c->add_option("--restarts", o.search.restarts, "initializations");
        c->add_option("--max-iters", o.search.max_iters, "objective evaluations per restart");
        c->add_option("--step-tol", o.search.step_tol, "final pattern step");
    };
    auto add_io = [&](CLI::App* c) {
        c->add_option("--output", o.output, "write here instead of stdout");
        c->add_option("--format", o.format, "text, csv or svg")->check(CLI::IsMember({"text", "csv", "svg"}));
        c->add_option("--seed", o.search.seed, "seed for samples and random restarts");
    };

    auto* norm = app.add_subcommand("norm", "norm of one function");
    norm->add_option("--f", o.f, "function spec, e.g. mono:1,1,0 or log2:0.5")->required();
    norm->add_option("--space", o.space, "bergman, bloch, besov1, besov2 or b1atomic")
        ->check(CLI::IsMember({"bergman", "bloch", "besov1", "besov2", "b1atomic"}));
    norm->add_option("--p", o.p, "Bergman exponent");
    norm->add_option("--q", o.q, "Besov exponent");
    norm->add_option("--alpha", o.alpha, "weight exponent");

    auto* bounds = app.add_subcommand("bounds", "closed-form constants at (alpha, p)");
    bounds->add_option("--alpha", o.alpha);
    bounds->add_option("--p", o.p);
    bounds->add_option("--c2", o.c2, "upper bound for C~(2), default 1/sqrt(alpha + 1)");

    auto* verify = app.add_subcommand("verify", "verification suites; exit 1 if any report fails");
    verify->add_option("--suite", o.suite, "inclusion, identities or all")
        ->check(CLI::IsMember({"inclusion", "identities", "all"}));
    verify->add_option("--alpha", o.alpha);
    verify->add_option("--p", o.p);

    auto* search = app.add_subcommand("search", "lower bound for C~(p) by search");
    search->add_option("--alpha", o.alpha);
    search->add_option("--p", o.p);

    auto* bracket = app.add_subcommand("bracket", "bracket the p where c_tilde crosses 1");
    bracket->add_option("--alpha", o.alpha);
    bracket->add_option("--plo", o.plo);
    bracket->add_option("--phi", o.phi);

    auto* scan = app.add_subcommand("scan", "c_tilde(p) / p over a grid of p");
    scan->add_option("--alpha", o.alpha);
    scan->add_option("--pgrid", o.pgrid, "increasing p values, comma separated")->delimiter(',');

    auto* report = app.add_subcommand("report", "render a CSV written by this tool as SVG");
    report->add_option("--input", o.input, "CSV file")->required();
    report->add_option("--output", o.output, "SVG file, stdout if absent");

    for (auto* c : {norm, bounds, verify, search, bracket, scan}) {
        add_io(c);
        add_scheme(c);
    }
    for (auto* c : {search, bracket, scan}) add_search(c);

    std::vector<const char*> argv{"bergman"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "bergman: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    const auto* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();
    try {
        if (verb == "report") o.format = "svg";
        Sink sink(o, out);
        if (verb == "norm") return cmd_norm(o, sink);
        if (verb == "bounds") return cmd_bounds(o, sink);
        if (verb == "verify") return cmd_verify(o, sink);
        if (verb == "search") return cmd_search(o, sink);
        if (verb == "bracket") return cmd_bracket(o, sink);
        if (verb == "scan") return cmd_scan(o, sink);
        return cmd_report(o, sink);
    } catch (const ConvergenceError& e) {
        err << "bergman " << verb << ": did not converge: " << e.what() << " (last two iterates " << fmt(e.previous())
            << ", " << fmt(e.last()) << ")\n";
        return kExitNonConvergence;
    } catch (const SearchError& e) {
        err << "bergman " << verb << ": " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const BracketError& e) {
        err << "bergman " << verb << ": " << e.what() << "\n";
        return kExitFailedReport;
    } catch (const std::exception& e) {
        err << "bergman " << verb << ": " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace bergman::cli
