#include <qgenocchi/audit.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <numeric>

#include <qgenocchi/analytic.hpp>
#include <qgenocchi/errors.hpp>
#include <qgenocchi/genocchi.hpp>
#include <qgenocchi/identities.hpp>
#include <qgenocchi/series_oracle.hpp>

namespace qgenocchi::audit
{

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::holds:
        return "holds";
    case Verdict::fails:
        return "fails";
    case Verdict::holds_at_q1_only:
        return "holds-at-q=1-only";
    }
    return "?";
}

namespace
{

using identities::SymbolicEnv;
using identities::Variant;
using Job = std::function<AuditRecord()>;

bool vanishes_at_one(const PolyXY &r)
{
    try {
        return specialize_q(r, Rational(1)).is_zero();
    } catch (const pole_error &) {
        return false;
    }
}

Job symbolic(std::string id, std::string variant, int first, int last, std::function<PolyXY(int)> residual)
{
    return [=]() {
        AuditRecord rec;
        rec.identity_id = id;
        rec.variant = variant;
        rec.n_tested.resize(static_cast<std::size_t>(last - first + 1));
        std::iota(rec.n_tested.begin(), rec.n_tested.end(), first);

        bool all_zero = true;
        bool zero_at_one = true;
        for (int n : rec.n_tested) {
            PolyXY r = residual(n);
            if (r.is_zero()) {
                continue;
            }
            if (all_zero) {
                rec.residual = r;
                rec.residual_text = "n=" + std::to_string(n) + ": " + r.to_string();
                all_zero = false;
            }
            zero_at_one = zero_at_one && vanishes_at_one(r);
        }
        if (all_zero) {
            rec.verdict = Verdict::holds;
            rec.residual_text = "0";
        } else {
            rec.verdict = zero_at_one ? Verdict::holds_at_q1_only : Verdict::fails;
        }
        return rec;
    };
}

const char *variant_name(Variant v)
{
    switch (v) {
    case Variant::printed:
        return "printed";
    case Variant::printed_derivation:
        return "printed-derivation";
    case Variant::corrected:
        return "corrected";
    }
    return "?";
}

// Coefficient extraction from the generating function, against the recurrence.
PolyXY residual_thm11(int n)
{
    return series::genocchi_from_series(n)[static_cast<std::size_t>(n)] - genocchi_poly(n);
}

Job contour_job(int n_max)
{
    return [n_max]() {
        const int last = std::min(n_max, 10);
        const double tolerance = 1e-10;
        const Rational q0 = make_rational(1, 2);
        const Rational x_points[] = {Rational(0), make_rational(1, 2)};

        AuditRecord rec;
        rec.identity_id = "thm12";
        rec.variant = "printed";
        double worst = 0.0;
        int worst_n = 0;
        for (int n = 0; n <= last; ++n) {
            rec.n_tested.push_back(n);
            for (const auto &x0 : x_points) {
                const double exact = genocchi_poly_value_at(n, x0, q0).get_d();
                const analytic::ComplexF z = analytic::cauchy_contour(n, x0.get_d(), q0.get_d(), 1.0, 64);
                const double err = std::abs(z - analytic::ComplexF(exact, 0.0));
                if (err > worst) {
                    worst = err;
                    worst_n = n;
                }
            }
        }
        rec.verdict = worst < tolerance ? Verdict::holds : Verdict::fails;
        char buf[96];
        std::snprintf(buf, sizeof buf, "max |error| = %.1e at n=%d (q=1/2, x in {0, 1/2}, 64 nodes)", worst, worst_n);
        rec.residual_text = buf;
        return rec;
    };
}

std::vector<Job> jobs(int n_max)
{
    using namespace identities;
    const SymbolicEnv sym(false);
    const SymbolicEnv cls(true);
    std::vector<Job> out;
    auto add = [&](std::string id, std::string variant, int first, std::function<PolyXY(int)> f) {
        out.push_back(symbolic(std::move(id), std::move(variant), first, n_max, std::move(f)));
    };

    add("thm1", "printed", 0, [=](int n) { return residual_thm1(sym, n); });
    add("thm2", "printed", 0, [=](int n) { return residual_thm2(sym, n); });
    add("thm3", "printed", 0, [=](int n) { return residual_thm3(sym, n); });
    add("thm4", "printed", 0, [=](int n) { return residual_thm4(sym, n); });
    add("eq109", "printed", 0, [=](int n) { return residual_eq109(sym, n); });
    add("eq110", "printed", 0, [=](int n) { return residual_eq110(sym, n); });
    add("thm5", "printed", 0, [=](int n) { return residual_thm5(sym, n); });
    add("cor6", "printed", 0, [=](int n) { return residual_cor6(cls, n); });
    for (Variant v : {Variant::printed, Variant::corrected}) {
        add(std::string("thm7-") + variant_name(v), variant_name(v), 0, [=](int n) { return residual_thm7(sym, n, v); });
    }
    for (Variant v : {Variant::printed, Variant::corrected}) {
        add(std::string("cor8-") + variant_name(v), variant_name(v), 0, [=](int n) { return residual_cor8(cls, n, v); });
    }
    for (Variant v : {Variant::printed, Variant::printed_derivation, Variant::corrected}) {
        add(std::string("thm9-") + variant_name(v), variant_name(v), 0, [=](int n) { return residual_thm9(sym, n, v); });
    }
    add("cor10", "printed", 0, [=](int n) { return residual_cor10(cls, n); });
    add("thm11", "printed", 0, residual_thm11);
    out.push_back(contour_job(n_max));
    for (Variant v : {Variant::printed, Variant::corrected}) {
        for (int d : {1, 3, 5}) {
            add(std::string("distribution-") + variant_name(v) + " d=" + std::to_string(d), variant_name(v), 0,
                [=](int n) { return residual_distribution(sym, n, d, v); });
        }
    }
    for (Variant v : {Variant::printed, Variant::corrected}) {
        add(std::string("eq118-") + variant_name(v), variant_name(v), 1, [=](int m) { return residual_eq118(sym, m, v); });
    }
    add("eq121-printed", "printed", 1, [=](int m) { return residual_eq121(sym, m, Variant::printed); });
    add("eq121-hurwitz", "hurwitz", 1, [](int m) { return analytic::interpolation_residual(m); });
    return out;
}

} // namespace

std::vector<AuditRecord> audit_all(int n_max)
{
    if (n_max < 2) {
        throw domain_error("audit_all: n_max must be >= 2");
    }
    // Warm the shared table once rather than from every worker.
    genocchi_poly(2 * n_max + 3);

    std::vector<std::future<AuditRecord>> pending;
    for (auto &job : jobs(n_max)) {
        pending.push_back(std::async(std::launch::async, std::move(job)));
    }
    std::vector<AuditRecord> records;
    records.reserve(pending.size());
    for (auto &f : pending) {
        records.push_back(f.get());
    }
    return records;
}

std::string expectation_table(const std::vector<AuditRecord> &records)
{
    std::string out = "identity_id\tvariant\tverdict\n";
    for (const auto &r : records) {
        out += r.identity_id + "\t" + r.variant + "\t" + to_string(r.verdict) + "\n";
    }
    return out;
}

std::string render_text(const std::vector<AuditRecord> &records)
{
    std::size_t width = 0;
    for (const auto &r : records) {
        width = std::max(width, r.identity_id.size());
    }
    std::string out;
    for (const auto &r : records) {
        std::string line = r.identity_id;
        line.resize(width + 2, ' ');
        line += to_string(r.verdict);
        line.resize(width + 2 + 19, ' ');
        line += "n=" + std::to_string(r.n_tested.front()) + ".." + std::to_string(r.n_tested.back());
        line += "  " + r.residual_text + "\n";
        out += line;
    }
    return out;
}

} // namespace qgenocchi::audit
