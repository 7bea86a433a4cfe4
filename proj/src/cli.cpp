#include "schubertq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "schubertq/glbc.hpp"
#include "schubertq/jsonio.hpp"
#include "schubertq/qh.hpp"
#include "schubertq/spectral.hpp"
#include "schubertq/version.hpp"

namespace schubertq::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::string fmt(double v) { return Json::format_double(v); }

Json envelope(const std::string& command, const std::string& space, int n, Json payload) {
    Json env = Json::object();
    env.set("command", command);
    env.set("space", space.empty() ? Json(nullptr) : Json(space));
    env.set("n", std::to_string(n));
    env.set("payload", std::move(payload));
    env.set("tool_version", kToolVersion);
    return env;
}

void emit(std::ostream& out, Json env) { out << env.pretty(); }

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

struct CommonOptions {
    std::string space = "og";
    int n = 2;
    std::string format = "json";
    double tol = 1e-8;
};

void add_format_flag(CLI::App* cmd, std::string& format, std::initializer_list<std::string> allowed) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember(std::vector<std::string>(allowed)));
}

// ---- basis ----------------------------------------------------------------

int cmd_basis(const CommonOptions& opt, std::ostream& out) {
    const auto basis = enumerate_basis(opt.n);
    if (opt.format == "json") {
        Json payload = Json::object();
        payload.set("count", std::to_string(basis.size()));
        Json rows = Json::array();
        for (size_t i = 0; i < basis.size(); ++i) {
            Json row = Json::object();
            row.set("index", std::to_string(i));
            row.set("parts", basis[i].to_csv());
            row.set("weight", std::to_string(basis[i].weight()));
            row.set("length", std::to_string(basis[i].length()));
            rows.push(std::move(row));
        }
        payload.set("elements", std::move(rows));
        emit(out, envelope("basis", opt.space, opt.n, std::move(payload)));
    } else if (opt.format == "csv") {
        out << "index,parts,weight,length\n";
        for (size_t i = 0; i < basis.size(); ++i)
            out << i << ',' << csv_quote(basis[i].to_csv()) << ',' << basis[i].weight() << ','
                << basis[i].length() << '\n';
    } else {
        out << "Schubert basis of " << (opt.space == "lg" ? "LG(" : "OG(") << opt.n << "), "
            << basis.size() << " elements\n";
        for (size_t i = 0; i < basis.size(); ++i)
            out << std::setw(4) << i << "  " << basis[i].to_string() << "\n";
    }
    return kExitOk;
}

// ---- pieri ----------------------------------------------------------------

int cmd_pieri(const CommonOptions& opt, int k, const std::string& lambda_text, std::ostream& out) {
    const StrictPartition lambda = StrictPartition::parse(lambda_text);
    const PieriProduct product = pieri(parse_space(opt.space), k, lambda, opt.n);
    if (opt.format == "json") {
        Json payload = Json::object();
        payload.set("k", std::to_string(k));
        payload.set("lambda", lambda.to_csv());
        payload.set("text", product.to_text());
        Json terms = Json::array();
        auto add_terms = [&terms](const std::map<StrictPartition, long long>& part, int q_power) {
            for (const auto& [label, coeff] : part) {
                Json term = Json::object();
                term.set("parts", label.to_csv());
                term.set("coeff", std::to_string(coeff));
                term.set("q_power", std::to_string(q_power));
                terms.push(std::move(term));
            }
        };
        add_terms(product.classical, 0);
        add_terms(product.quantum, 1);
        payload.set("terms", std::move(terms));
        emit(out, envelope("pieri", opt.space, opt.n, std::move(payload)));
    } else {
        out << class_symbol(product.space) << "(" << std::to_string(k) << ") * "
            << class_symbol(product.space) << lambda.to_string() << " = " << product.to_text()
            << "\n";
    }
    return kExitOk;
}

// ---- matrix ---------------------------------------------------------------

int cmd_matrix(const CommonOptions& opt, int k, std::ostream& out) {
    const Space space = parse_space(opt.space);
    const bool c1 = (k == 0);
    const IntMatrix m = c1 ? c1_matrix(space, opt.n) : operator_matrix(space, opt.n, k);
    const std::string name =
        c1 ? "c1" : class_symbol(space) + "(" + std::to_string(k) + ")";
    if (opt.format == "json") {
        Json payload = Json::object();
        payload.set("operator", name);
        payload.set("dim", std::to_string(m.dim()));
        Json rows = Json::array();
        for (int r = 0; r < m.dim(); ++r) {
            Json row = Json::array();
            for (int c = 0; c < m.dim(); ++c) row.push(std::to_string(m(r, c)));
            rows.push(std::move(row));
        }
        payload.set("entries", std::move(rows));
        emit(out, envelope("matrix", opt.space, opt.n, std::move(payload)));
    } else if (opt.format == "csv") {
        for (int r = 0; r < m.dim(); ++r) {
            for (int c = 0; c < m.dim(); ++c) out << (c ? "," : "") << m(r, c);
            out << '\n';
        }
    } else {
        long long widest = 1;
        for (int r = 0; r < m.dim(); ++r)
            for (int c = 0; c < m.dim(); ++c) widest = std::max(widest, m(r, c));
        const int w = static_cast<int>(std::to_string(widest).size());
        out << "[" << name << "] on basis of size " << m.dim() << "\n";
        for (int r = 0; r < m.dim(); ++r) {
            for (int c = 0; c < m.dim(); ++c) out << (c ? " " : "") << std::setw(w) << m(r, c);
            out << '\n';
        }
    }
    return kExitOk;
}

// ---- spectrum ---------------------------------------------------------------

int cmd_spectrum(const CommonOptions& opt, std::ostream& out) {
    const Space space = parse_space(opt.space);
    const std::vector<EigenPair> pairs = eigenbasis(space, opt.n);
    const double closed = delta0_closed_form(space, opt.n);
    double delta0 = 0.0;
    for (const EigenPair& p : pairs) delta0 = std::max(delta0, std::abs(p.c1_eigenvalue));
    const bool have_residual = opt.n <= 8;
    const double residual = have_residual ? verify_eigenpairs(space, opt.n) : 0.0;
    const bool pass = !have_residual || residual <= opt.tol;

    if (opt.format == "json") {
        Json payload = Json::object();
        payload.set("delta0", delta0);
        payload.set("delta0_closed_form", closed);
        payload.set("max_eigen_residual", have_residual ? Json(residual) : Json(nullptr));
        Json values = Json::array();
        for (const EigenPair& p : pairs) {
            Json v = Json::object();
            v.set("index", p.index.to_string());
            v.set("re", p.c1_eigenvalue.real());
            v.set("im", p.c1_eigenvalue.imag());
            values.push(std::move(v));
        }
        payload.set("eigenvalues", std::move(values));
        emit(out, envelope("spectrum", opt.space, opt.n, std::move(payload)));
    } else if (opt.format == "csv") {
        out << "index,re,im\n";
        for (const EigenPair& p : pairs)
            out << csv_quote(p.index.to_string()) << ',' << fmt(p.c1_eigenvalue.real()) << ','
                << fmt(p.c1_eigenvalue.imag()) << '\n';
    } else {
        out << "spectrum of [c1] on " << (space == Space::LG ? "LG(" : "OG(") << opt.n << ")\n";
        for (const EigenPair& p : pairs)
            out << "  " << p.index.to_string() << "  " << fmt(p.c1_eigenvalue.real()) << " + "
                << fmt(p.c1_eigenvalue.imag()) << "i\n";
        out << "delta0 = " << fmt(delta0) << " (closed form " << fmt(closed) << ")\n";
        if (have_residual) out << "max eigenpair residual = " << fmt(residual) << "\n";
    }
    return pass ? kExitOk : kExitVerificationFailure;
}

// ---- glbc -------------------------------------------------------------------

Json glbc_row_json(const GlbcReport& r) {
    Json row = Json::object();
    row.set("n", std::to_string(r.n));
    row.set("dim", std::to_string(r.dim));
    row.set("bound", std::to_string(r.bound));
    row.set("delta0_closed", r.delta0_closed);
    row.set("delta0_numeric", r.delta0_numeric ? Json(*r.delta0_numeric) : Json(nullptr));
    row.set("verdict", verdict_name(r.verdict));
    row.set("equality", r.equality());
    row.set("margin", r.margin ? Json(*r.margin) : Json(nullptr));
    return row;
}

int cmd_glbc(const CommonOptions& opt, int n_max, std::ostream& out) {
    const Space space = parse_space(opt.space);
    std::vector<GlbcReport> rows;
    rows.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) rows.push_back(glbc_report(space, n));
    const bool pass = std::none_of(rows.begin(), rows.end(),
                                   [](const GlbcReport& r) { return r.verdict == Verdict::Fail; });

    if (opt.format == "json") {
        Json payload = Json::object();
        payload.set("n_max", std::to_string(n_max));
        Json arr = Json::array();
        for (const GlbcReport& r : rows) arr.push(glbc_row_json(r));
        payload.set("rows", std::move(arr));
        emit(out, envelope("glbc", opt.space, n_max, std::move(payload)));
    } else if (opt.format == "csv") {
        out << "n,dim,bound,delta0_closed,delta0_numeric,verdict,margin\n";
        for (const GlbcReport& r : rows) {
            out << r.n << ',' << r.dim << ',' << r.bound << ',' << fmt(r.delta0_closed) << ',';
            if (r.delta0_numeric) out << fmt(*r.delta0_numeric);
            out << ',' << verdict_name(r.verdict) << ',';
            if (r.margin) out << fmt(*r.margin);
            out << '\n';
        }
    } else {
        out << "delta0 >= dim+1 for " << (space == Space::LG ? "LG" : "OG") << "(n), n = 1.."
            << n_max << "\n";
        for (const GlbcReport& r : rows) {
            out << "  n=" << std::setw(2) << r.n << "  d(n)=" << std::setw(3) << r.bound
                << "  delta0=" << fmt(r.delta0_closed) << "  " << verdict_name(r.verdict);
            if (r.delta0_numeric)
                out << "  (power iteration " << fmt(*r.delta0_numeric) << ")";
            out << '\n';
        }
    }
    return pass ? kExitOk : kExitVerificationFailure;
}

// ---- property-o -------------------------------------------------------------

int cmd_property_o(const CommonOptions& opt, std::ostream& out) {
    const Space space = parse_space(opt.space);
    const PropertyOReport report = property_o_check(space, opt.n, opt.tol);
    if (opt.format == "json") {
        Json payload = Json::object();
        payload.set("fano_index", std::to_string(report.fano_index));
        payload.set("delta0", report.delta0);
        payload.set("delta0_is_eigenvalue", report.delta0_is_eigenvalue);
        payload.set("delta0_simple", report.delta0_simple);
        payload.set("max_modulus_are_roots_of_unity", report.max_modulus_are_roots);
        payload.set("delta0_multiplicity", std::to_string(report.delta0_multiplicity));
        payload.set("max_modulus_count", std::to_string(report.max_modulus_count));
        payload.set("pass", report.pass());
        emit(out, envelope("property-o", opt.space, opt.n, std::move(payload)));
    } else {
        out << "property O for " << (space == Space::LG ? "LG(" : "OG(") << opt.n
            << "), Fano index r = " << report.fano_index << "\n"
            << "  (1) delta0 is an eigenvalue:        "
            << (report.delta0_is_eigenvalue ? "yes" : "NO") << "\n"
            << "  (2) delta0 has multiplicity one:    " << (report.delta0_simple ? "yes" : "NO")
            << "\n"
            << "  (3) max-modulus values are delta0 * r-th roots of unity: "
            << (report.max_modulus_are_roots ? "yes" : "NO") << " (" << report.max_modulus_count
            << " of modulus delta0)\n";
    }
    return report.pass() ? kExitOk : kExitVerificationFailure;
}

// ---- rietsch ----------------------------------------------------------------

int cmd_rietsch(int n, double tol, const std::string& format, std::ostream& out) {
    const RietschResult result = rietsch_check(n);
    if (format == "json") {
        Json payload = Json::object();
        payload.set("maximizer", result.maximizer.to_string());
        payload.set("value", result.value);
        payload.set("expected", result.expected);
        payload.set("abs_error", std::abs(result.value - result.expected));
        payload.set("imag_part", result.imag_part);
        payload.set("pass", result.pass(tol));
        emit(out, envelope("rietsch", "", n, std::move(payload)));
    } else {
        out << "max Re E1(zeta^I) over I_" << n << " at I0 = " << result.maximizer.to_string()
            << "\n  value    = " << fmt(result.value) << "\n  expected = " << fmt(result.expected)
            << " (= 1/sin(pi/" << 2 * n << "))\n";
    }
    return result.pass(tol) ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"schubertq: exact quantum Schubert calculus for Lagrangian and orthogonal "
                 "Grassmannians"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "print help for all subcommands");

    CommonOptions opt;
    int k = 1;
    int matrix_k = 0;
    int n_max = 8;
    int rietsch_n = 2;
    double rietsch_tol = 1e-9;
    std::string lambda_text;

    auto add_space = [&](CLI::App* cmd) {
        cmd->add_option("--space", opt.space, "target space")
            ->check(CLI::IsMember({"lg", "og"}));
    };
    auto add_n = [&](CLI::App* cmd, int lo, int hi) {
        cmd->add_option("--n", opt.n, "rank n")->check(CLI::Range(lo, hi));
    };
    auto add_tol = [&](CLI::App* cmd) {
        cmd->add_option("--tol", opt.tol, "verification tolerance");
    };

    CLI::App* basis = app.add_subcommand("basis", "list the Schubert basis D(n)");
    add_space(basis);
    add_n(basis, 1, 16);
    add_format_flag(basis, opt.format, {"json", "csv", "table"});

    CLI::App* pieri_cmd = app.add_subcommand("pieri", "quantum Pieri product of a special class");
    add_space(pieri_cmd);
    add_n(pieri_cmd, 1, 16);
    pieri_cmd->add_option("--k", k, "index of the Pieri class");
    pieri_cmd->add_option("--lambda", lambda_text,
                          "comma-separated strict partition; empty for the unit class");
    add_format_flag(pieri_cmd, opt.format, {"json", "table"});

    CLI::App* matrix_cmd =
        app.add_subcommand("matrix", "exact integer matrix of [c1] (or of a Pieri class with --k)");
    add_space(matrix_cmd);
    add_n(matrix_cmd, 1, 12);
    matrix_cmd->add_option("--k", matrix_k, "print the Pieri operator matrix instead of c1");
    add_format_flag(matrix_cmd, opt.format, {"json", "csv", "table"});

    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "closed-form spectrum of [c1] with eigenpair residuals");
    add_space(spectrum_cmd);
    add_n(spectrum_cmd, 1, 10);
    add_tol(spectrum_cmd);
    add_format_flag(spectrum_cmd, opt.format, {"json", "csv", "table"});

    CLI::App* glbc_cmd = app.add_subcommand("glbc", "lower-bound verdicts delta0 >= dim + 1");
    add_space(glbc_cmd);
    glbc_cmd->add_option("--n-max", n_max, "report rows for n = 1..n_max")->check(CLI::Range(1, 12));
    add_format_flag(glbc_cmd, opt.format, {"json", "csv", "table"});

    CLI::App* property_cmd = app.add_subcommand("property-o", "three-part spectral check on [c1]");
    add_space(property_cmd);
    add_n(property_cmd, 1, 8);
    add_tol(property_cmd);
    add_format_flag(property_cmd, opt.format, {"json", "table"});

    CLI::App* rietsch_cmd =
        app.add_subcommand("rietsch", "maximize Re E1 over I_n against 1/sin(pi/2n)");
    rietsch_cmd->add_option("--n", rietsch_n, "rank n")->check(CLI::Range(1, 12));
    rietsch_cmd->add_option("--tol", rietsch_tol, "verification tolerance");
    add_format_flag(rietsch_cmd, opt.format, {"json", "table"});

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (basis->parsed()) return cmd_basis(opt, out);
        if (pieri_cmd->parsed()) return cmd_pieri(opt, k, lambda_text, out);
        if (matrix_cmd->parsed()) return cmd_matrix(opt, matrix_k, out);
        if (spectrum_cmd->parsed()) return cmd_spectrum(opt, out);
        if (glbc_cmd->parsed()) return cmd_glbc(opt, n_max, out);
        if (property_cmd->parsed()) return cmd_property_o(opt, out);
        if (rietsch_cmd->parsed()) return cmd_rietsch(rietsch_n, rietsch_tol, opt.format, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace schubertq::cli
