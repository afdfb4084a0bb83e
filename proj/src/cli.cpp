#include <qgenocchi/cli.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <qgenocchi/analytic.hpp>
#include <qgenocchi/audit.hpp>
#include <qgenocchi/errors.hpp>
#include <qgenocchi/genocchi.hpp>
#include <qgenocchi/padic.hpp>
#include <qgenocchi/series_oracle.hpp>

#ifndef QGENOCCHI_DATA_DIR
#define QGENOCCHI_DATA_DIR "data"
#endif

namespace qgenocchi::cli
{

namespace
{

using Json = nlohmann::ordered_json;

constexpr int max_symbolic_n = 512;

struct UnexpectedResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_complex(analytic::ComplexF z)
{
    const double im = z.imag();
    return fmt(z.real()) + (std::signbit(im) ? " - " : " + ") + fmt(std::abs(im)) + "*i";
}

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string> &fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        out += (i ? "," : "") + csv_field(fields[i]);
    }
    return out + "\n";
}

std::string dump(const Json &j)
{
    return j.dump(2) + "\n";
}

void check_range(const char *name, long v, long lo, long hi)
{
    if (v < lo || v > hi) {
        throw domain_error(std::string("--") + name + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
    }
}

double parse_real(const std::string &text)
{
    return parse_rational_or_decimal(text).get_d();
}

analytic::ComplexF parse_complex(const std::string &text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        return {parse_real(text), 0.0};
    }
    return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

// ---------------------------------------------------------------------------

struct GenocchiArgs {
    int n = 0;
    std::string x;
    std::string q;
    bool all = false;
    bool poly = false;
    std::string format = "text";
};

std::string run_genocchi(const GenocchiArgs &a)
{
    check_range("n", a.n, 0, max_symbolic_n);
    const bool have_q = !a.q.empty();
    const bool have_x = !a.x.empty();
    const Rational q0 = have_q ? parse_rational(a.q) : Rational(0);
    const Rational x0 = have_x ? parse_rational(a.x) : Rational(0);
    if (have_q && q0 == -1) {
        throw domain_error("G_{n,q} has a pole at q = -1");
    }

    auto value = [&](int n) -> std::string {
        if (a.poly) {
            return have_q ? specialize_q(genocchi_poly(n), q0).to_string() : genocchi_poly(n).to_string();
        }
        if (have_x) {
            if (have_q) {
                return to_string(genocchi_poly_value_at(n, x0, q0));
            }
            return genocchi_poly(n).substitute_x(PolyXY(RatFuncQ(x0))).coeff(0, 0).to_string();
        }
        return have_q ? to_string(genocchi_numbers_at(q0, n)[static_cast<std::size_t>(n)]) : genocchi_number(n).to_string();
    };
    auto label = [&](int n) {
        std::string l = "G_" + std::to_string(n);
        if (a.poly) {
            l += "(x)";
        } else if (have_x) {
            l += "(" + to_string(x0) + ")";
        }
        return l;
    };

    const int first = a.all ? 0 : a.n;
    std::string out;
    if (a.format == "csv") {
        out = csv_row({"n", "value"});
        for (int n = first; n <= a.n; ++n) {
            out += csv_row({std::to_string(n), value(n)});
        }
    } else if (a.format == "json") {
        Json arr = Json::array();
        for (int n = first; n <= a.n; ++n) {
            Json row;
            row["n"] = n;
            if (have_q) {
                row["q"] = to_string(q0);
            }
            if (have_x) {
                row["x"] = to_string(x0);
            }
            row["value"] = value(n);
            arr.push_back(row);
        }
        out = dump(arr);
    } else {
        for (int n = first; n <= a.n; ++n) {
            out += label(n) + " = " + value(n) + "\n";
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

struct SeriesArgs {
    int n = 0;
    std::string q;
    std::string format = "text";
};

std::string run_series(const SeriesArgs &a)
{
    check_range("n", a.n, 0, max_symbolic_n);
    std::vector<std::string> values;
    std::vector<bool> agree;
    if (a.q.empty()) {
        const auto oracle = series::genocchi_from_series(a.n);
        for (int k = 0; k <= a.n; ++k) {
            values.push_back(oracle[static_cast<std::size_t>(k)].to_string());
            agree.push_back(oracle[static_cast<std::size_t>(k)] == genocchi_poly(k));
        }
    } else {
        const Rational q0 = parse_rational(a.q);
        if (q0 == -1) {
            throw domain_error("the generating function has no expansion at q = -1");
        }
        const auto oracle = series::genocchi_polys_at(q0, a.n);
        for (int k = 0; k <= a.n; ++k) {
            values.push_back(oracle[static_cast<std::size_t>(k)].to_string());
            agree.push_back(oracle[static_cast<std::size_t>(k)] == specialize_q(genocchi_poly(k), q0));
        }
    }

    std::string out;
    if (a.format == "csv") {
        out = csv_row({"n", "series_coefficient", "matches_recurrence"});
        for (int k = 0; k <= a.n; ++k) {
            out += csv_row({std::to_string(k), values[static_cast<std::size_t>(k)], agree[static_cast<std::size_t>(k)] ? "yes" : "no"});
        }
    } else if (a.format == "json") {
        Json arr = Json::array();
        for (int k = 0; k <= a.n; ++k) {
            Json row;
            row["n"] = k;
            row["series_coefficient"] = values[static_cast<std::size_t>(k)];
            row["matches_recurrence"] = static_cast<bool>(agree[static_cast<std::size_t>(k)]);
            arr.push_back(row);
        }
        out = dump(arr);
    } else {
        for (int k = 0; k <= a.n; ++k) {
            out += "G_" + std::to_string(k) + "(x) = " + values[static_cast<std::size_t>(k)]
                   + (agree[static_cast<std::size_t>(k)] ? "" : "  [differs from recurrence]") + "\n";
        }
    }
    if (std::find(agree.begin(), agree.end(), false) != agree.end()) {
        throw UnexpectedResult("series oracle and recurrence disagree\n" + out);
    }
    return out;
}

// ---------------------------------------------------------------------------

struct AuditArgs {
    int n_max = 10;
    std::string format = "text";
    std::string expectations = QGENOCCHI_DATA_DIR "/audit_expectations.tsv";
};

std::string run_audit(const AuditArgs &a, std::string &diagnostics)
{
    check_range("n-max", a.n_max, 2, 40);
    std::ifstream in(a.expectations);
    if (!in) {
        throw std::invalid_argument("cannot read expectation table " + a.expectations);
    }
    std::stringstream expected;
    expected << in.rdbuf();

    const auto records = audit::audit_all(a.n_max);
    std::string out;
    if (a.format == "json") {
        Json arr = Json::array();
        for (const auto &r : records) {
            Json row;
            row["identity_id"] = r.identity_id;
            row["variant"] = r.variant;
            row["n_tested"] = r.n_tested;
            row["verdict"] = audit::to_string(r.verdict);
            row["residual_text"] = r.residual_text;
            arr.push_back(row);
        }
        out = dump(arr);
    } else if (a.format == "tsv") {
        out = audit::expectation_table(records);
    } else {
        out = audit::render_text(records);
    }

    const std::string actual = audit::expectation_table(records);
    if (actual != expected.str()) {
        diagnostics = "verdicts differ from " + a.expectations + "\n";
        std::istringstream e(expected.str());
        std::istringstream g(actual);
        std::string le, lg;
        while (true) {
            const bool he = static_cast<bool>(std::getline(e, le));
            const bool hg = static_cast<bool>(std::getline(g, lg));
            if (!he && !hg) {
                break;
            }
            if (!he || !hg || le != lg) {
                diagnostics += "  expected: " + (he ? le : "<none>") + "\n  actual:   " + (hg ? lg : "<none>") + "\n";
            }
        }
        throw UnexpectedResult(out);
    }
    return out;
}

// ---------------------------------------------------------------------------

struct PadicArgs {
    long p = 3;
    std::string q = "4";
    int n = 1;
    std::string x = "0";
    int levels = 6;
    std::string format = "text";
};

std::string run_padic(const PadicArgs &a)
{
    check_range("n", a.n, 1, 64);
    check_range("levels", a.levels, 1, 12);
    const padic::PadicContext ctx(a.p, parse_rational(a.q), a.levels);
    const Rational x0 = parse_rational(a.x);
    const auto rows = padic::convergence_table(a.n, x0, a.levels, ctx);

    std::string out;
    if (a.format == "csv") {
        out = csv_row({"level", "partial_sum", "error_valuation"});
        for (const auto &r : rows) {
            out += csv_row({std::to_string(r.level), to_string(r.partial_sum), padic::to_string(r.error_valuation)});
        }
    } else if (a.format == "json") {
        Json arr = Json::array();
        for (const auto &r : rows) {
            Json row;
            row["level"] = r.level;
            row["partial_sum"] = to_string(r.partial_sum);
            row["error_valuation"] = padic::to_string(r.error_valuation);
            arr.push_back(row);
        }
        out = dump(arr);
    } else {
        out = "p = " + std::to_string(a.p) + ", q = " + to_string(ctx.q0()) + ", n = " + std::to_string(a.n) + ", x = "
              + to_string(x0) + "\n";
        out += "G_" + std::to_string(a.n) + "(x) = " + to_string(genocchi_poly_value_at(a.n, x0, ctx.q0())) + "\n";
        for (const auto &r : rows) {
            out += "N=" + std::to_string(r.level) + "  v_p(error)=" + padic::to_string(r.error_valuation)
                   + "  sum=" + to_string(r.partial_sum) + "\n";
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

struct ZetaArgs {
    std::string s;
    std::string q = "1/2";
    std::string x = "0";
    std::string variant = "printed";
    std::string tolerance = "1e-15";
    long tail_terms = 2'000'000;
    int neg = -1;
    bool with_x = false;
    std::string format = "text";
};

std::string run_zeta(const ZetaArgs &a)
{
    if (a.neg >= 0) {
        check_range("neg", a.neg, 0, max_symbolic_n);
        const std::string label = a.with_x ? "zeta(-" + std::to_string(a.neg) + ", x : q)" : "zeta(-" + std::to_string(a.neg) + " : q)";
        const std::string value = a.with_x ? analytic::zeta_neg_exact_with_x(a.neg).to_string() : analytic::zeta_neg_exact(a.neg).to_string();
        if (a.format == "csv") {
            return csv_row({"m", "with_x", "value"}) + csv_row({std::to_string(a.neg), a.with_x ? "yes" : "no", value});
        }
        if (a.format == "json") {
            Json j;
            j["m"] = a.neg;
            j["with_x"] = a.with_x;
            j["value"] = value;
            return dump(j);
        }
        return label + " = " + value + "\n";
    }
    if (a.s.empty()) {
        throw std::invalid_argument("zeta needs --s or --neg");
    }
    analytic::ZetaParams params;
    params.q0 = parse_real(a.q);
    params.x0 = parse_real(a.x);
    params.tolerance = parse_real(a.tolerance);
    params.tail_terms = a.tail_terms;
    const analytic::ComplexF s = parse_complex(a.s);
    const auto variant = a.variant == "hurwitz" ? analytic::ZetaVariant::hurwitz : analytic::ZetaVariant::printed;
    const analytic::ZetaResult r = analytic::zeta_series(s, params, variant);
    const std::string method = r.euler_transformed ? "euler" : "plain";

    if (a.format == "csv") {
        return csv_row({"re", "im", "terms", "tail_bound", "method"})
               + csv_row({fmt(r.value.real()), fmt(r.value.imag()), std::to_string(r.terms), fmt(r.tail_bound), method});
    }
    if (a.format == "json") {
        Json j;
        j["s"] = {s.real(), s.imag()};
        j["q"] = params.q0;
        j["x"] = params.x0;
        j["variant"] = a.variant;
        j["re"] = r.value.real();
        j["im"] = r.value.imag();
        j["terms"] = r.terms;
        j["tail_bound"] = r.tail_bound;
        j["method"] = method;
        return dump(j);
    }
    return "zeta(" + fmt_complex(s) + ") = " + fmt_complex(r.value) + "\nterms: " + std::to_string(r.terms) + "\ntail bound: " + fmt(r.tail_bound)
           + "\nmethod: " + method + "\n";
}

// ---------------------------------------------------------------------------

struct CauchyArgs {
    int n = 0;
    std::string q;
    std::string x = "0";
    std::string radius = "1";
    int nodes = 64;
    std::string format = "text";
};

std::string run_cauchy(const CauchyArgs &a)
{
    check_range("n", a.n, 0, 60);
    const Rational q0 = parse_rational_or_decimal(a.q);
    const Rational x0 = parse_rational_or_decimal(a.x);
    const analytic::ComplexF z = analytic::cauchy_contour(a.n, x0.get_d(), q0.get_d(), parse_real(a.radius), a.nodes);
    const Rational exact = genocchi_poly_value_at(a.n, x0, q0);
    const double err = std::abs(z - analytic::ComplexF(exact.get_d(), 0.0));

    if (a.format == "csv") {
        return csv_row({"n", "re", "im", "exact", "abs_error"})
               + csv_row({std::to_string(a.n), fmt(z.real()), fmt(z.imag()), to_string(exact), fmt(err)});
    }
    if (a.format == "json") {
        Json j;
        j["n"] = a.n;
        j["re"] = z.real();
        j["im"] = z.imag();
        j["exact"] = to_string(exact);
        j["abs_error"] = err;
        return dump(j);
    }
    return "contour:   " + fmt_complex(z) + "\nexact:     " + to_string(exact) + " (" + fmt(exact.get_d()) + ")\nabs error: " + fmt(err) + "\n";
}

void add_format(CLI::App *cmd, std::string &target, std::vector<std::string> allowed)
{
    std::string desc = "Output format:";
    for (const auto &f : allowed) {
        desc += " " + f;
    }
    cmd->add_option("--format", target, desc)->check(CLI::IsMember(allowed))->capture_default_str();
}

} // namespace

RunResult run(const std::vector<std::string> &args)
{
    CLI::App app{"q-Genocchi numbers and polynomials: exact tables, identity audit, p-adic and analytic checks", "qgenocchi"};
    app.require_subcommand(1);
    std::string output_path;
    app.add_option("--output", output_path, "Write the report to this file instead of stdout");

    GenocchiArgs ga;
    auto *gen = app.add_subcommand("genocchi", "q-Genocchi number G_n or polynomial G_n(x)");
    gen->add_option("--n", ga.n, "Index n >= 0")->required();
    auto *gen_x = gen->add_option("--x", ga.x, "Evaluate at x = a/b");
    gen->add_option("--q", ga.q, "Specialise q = a/b");
    gen->add_flag("--all", ga.all, "Print every index 0..n");
    gen->add_flag("--poly", ga.poly, "Print the polynomial G_n(x)")->excludes(gen_x);
    add_format(gen, ga.format, {"text", "csv", "json"});

    SeriesArgs sa;
    auto *ser = app.add_subcommand("series", "Coefficients of 2t e^{xt}/(q e^t + 1) by series arithmetic");
    ser->add_option("--n", sa.n, "Highest coefficient index")->required();
    ser->add_option("--q", sa.q, "Specialise q = a/b before expanding");
    add_format(ser, sa.format, {"text", "csv", "json"});

    AuditArgs aa;
    auto *aud = app.add_subcommand("audit", "Symbolic residuals of every audited identity");
    aud->add_option("--n-max", aa.n_max, "Highest n (or m) tested")->capture_default_str();
    aud->add_option("--expectations", aa.expectations, "Expected verdict table (TSV)")->capture_default_str();
    add_format(aud, aa.format, {"text", "json", "tsv"});

    PadicArgs pa;
    auto *pad = app.add_subcommand("padic", "Fermionic partial sums against the recurrence values");
    pad->add_option("--p", pa.p, "Odd prime p")->capture_default_str();
    pad->add_option("--q", pa.q, "q0 = a/b with |1 - q0|_p < 1")->capture_default_str();
    pad->add_option("--n", pa.n, "Index n >= 1")->capture_default_str();
    pad->add_option("--x", pa.x, "x0 = a/b")->capture_default_str();
    pad->add_option("--levels", pa.levels, "Truncation levels N = 1..L")->capture_default_str();
    add_format(pad, pa.format, {"text", "csv", "json"});

    ZetaArgs za;
    auto *zet = app.add_subcommand("zeta", "q-zeta series at s, or its exact value at s = -m");
    auto *z_s = zet->add_option("--s", za.s, "s as RE or RE,IM");
    zet->add_option("--q", za.q, "q0 in (0, 1)")->capture_default_str();
    zet->add_option("--x", za.x, "x0 >= 0 (hurwitz variant)")->capture_default_str();
    zet->add_option("--variant", za.variant, "printed or hurwitz")->check(CLI::IsMember({"printed", "hurwitz"}))->capture_default_str();
    zet->add_option("--tolerance", za.tolerance, "Stop when the remaining tail is below this")->capture_default_str();
    zet->add_option("--tail-terms", za.tail_terms, "Maximum number of terms")->capture_default_str();
    auto *z_neg = zet->add_option("--neg", za.neg, "Exact value at s = -M in Q(q)")->excludes(z_s);
    zet->add_flag("--with-x", za.with_x, "Hurwitz form in Q(q)[x] (with --neg)")->needs(z_neg);
    add_format(zet, za.format, {"text", "csv", "json"});

    CauchyArgs ca;
    auto *cau = app.add_subcommand("cauchy", "G_n(x) at q0 from the trapezoid rule on a circle");
    cau->add_option("--n", ca.n, "Index n >= 0")->required();
    cau->add_option("--q", ca.q, "q0 > 0")->required();
    cau->add_option("--x", ca.x, "x0")->capture_default_str();
    cau->add_option("--radius", ca.radius, "Contour radius")->capture_default_str();
    cau->add_option("--nodes", ca.nodes, "Quadrature nodes (>= 16)")->capture_default_str();
    add_format(cau, ca.format, {"text", "csv", "json"});

    RunResult result;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        result.exit_code = code == 0 ? ok : parameter_error;
        return result;
    }

    try {
        if (gen->parsed()) {
            result.out = run_genocchi(ga);
        } else if (ser->parsed()) {
            result.out = run_series(sa);
        } else if (aud->parsed()) {
            result.out = run_audit(aa, result.err);
        } else if (pad->parsed()) {
            result.out = run_padic(pa);
        } else if (zet->parsed()) {
            result.out = run_zeta(za);
        } else if (cau->parsed()) {
            result.out = run_cauchy(ca);
        }
    } catch (const UnexpectedResult &e) {
        result.exit_code = unexpected_result;
        result.out = e.what();
    } catch (const non_convergence &e) {
        result.exit_code = unexpected_result;
        result.err = std::string("error: ") + e.what() + "\n";
        return result;
    } catch (const std::domain_error &e) {
        result.exit_code = parameter_error;
        result.err = std::string("error: ") + e.what() + "\n";
        return result;
    } catch (const std::invalid_argument &e) {
        result.exit_code = parameter_error;
        result.err = std::string("error: ") + e.what() + "\n";
        return result;
    }

    if (!output_path.empty()) {
        std::ofstream file(output_path, std::ios::binary);
        if (!file || !(file << result.out)) {
            result.exit_code = parameter_error;
            result.err += "error: cannot write " + output_path + "\n";
        }
        result.out.clear();
    }
    return result;
}

int main_entry(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    const RunResult r = run(args);
    std::cout << r.out << std::flush;
    std::cerr << r.err << std::flush;
    return r.exit_code;
}

} // namespace qgenocchi::cli
