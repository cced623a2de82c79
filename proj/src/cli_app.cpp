#include "korder/cli_app.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "korder/bessel_reference.hpp"
#include "korder/order_derivatives.hpp"
#include "korder/quadrature.hpp"
#include "korder/verification.hpp"
#include "korder/zeta_link.hpp"

namespace korder {

namespace {

// All numeric output funnels through one formatter so every mode prints the
// same, locale-independent representation.
std::string num(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

struct TableRow {
    double x;
    int n;
    double value;
    double error_estimate;
};

TableRow make_row(int n, double x, double tol) {
    if (n == 0) return {x, 0, t_half(x), 4e-16 * t_half(x)};
    const UTermMaps maps = u_term_maps(n);
    double bracket = maps.constant;
    double est = 0.0;
    for (const auto& [ab, coeff] : maps.scaled_by_x) {
        const QuadratureResult r = u_integral({ab.first, ab.second, 0, x}, tol);
        bracket += x * coeff * r.value;
        est += std::fabs(x * coeff) * r.abs_error_estimate;
    }
    for (const auto& [ab, coeff] : maps.over_u_plus_2) {
        const QuadratureResult r = u_integral({ab.first, ab.second, 1, x}, tol);
        bracket += coeff * r.value;
        est += std::fabs(coeff) * r.abs_error_estimate;
    }
    const double sign = n % 2 ? -1.0 : 1.0;
    return {x, n, sign * t_half(x) * bracket, t_half(x) * est};
}

int fail_infrastructure(std::ostream& err, const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_infrastructure;
}

} // namespace

std::vector<double> parse_grid(const std::string& text) {
    double start = 0.0, stop = 0.0;
    int count = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf,%d%c", &start, &stop, &count, &extra) != 3)
        throw std::invalid_argument("x-grid must be start,stop,count");
    if (count < 1) throw std::invalid_argument("x-grid count must be >= 1");
    if (count > 10000) throw std::invalid_argument("x-grid count too large");
    std::vector<double> g;
    g.reserve(static_cast<size_t>(count));
    if (count == 1) {
        g.push_back(start);
        return g;
    }
    const double step = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i) g.push_back(start + step * i);
    return g;
}

int run_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const int d = cfg.digits;
        const double t_val = cfg.n == 0 ? t_half(cfg.x) : t_deriv_n(cfg.n, cfg.x, cfg.tol);
        const double k_val = k_jet(cfg.n, cfg.x, cfg.tol)[cfg.n];
        double oracle, rel;
        if (cfg.n == 0) {
            oracle = t_kernel(0.5, cfg.x);
        } else {
            oracle = fd_order_derivative(
                         {cfg.n, DerivTarget::t_kernel_at_half, cfg.x,
                          Defaults::fd_base_step, Defaults::fd_levels})
                         .value;
        }
        rel = oracle != 0.0 ? std::fabs(t_val - oracle) / std::fabs(oracle)
                            : std::fabs(t_val - oracle);
        if (cfg.format == OutputFormat::json) {
            out << "{\"command\":\"eval\",\"n\":" << cfg.n << ",\"x\":" << num(cfg.x, d)
                << ",\"t_derivative\":" << num(t_val, d)
                << ",\"k_derivative\":" << num(k_val, d)
                << ",\"oracle\":" << num(oracle, d) << ",\"rel_diff\":" << num(rel, d)
                << ",\"tol\":" << num(cfg.tol, d) << "}\n";
        } else {
            const TableRow row = make_row(cfg.n, cfg.x, cfg.tol);
            out << "x,n,value,error_estimate\n"
                << num(row.x, d) << "," << row.n << "," << num(row.value, d) << ","
                << num(row.error_estimate, d) << "\n";
        }
        return exit_ok;
    } catch (const std::exception& e) {
        return fail_infrastructure(err, e);
    }
}

int run_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const int d = cfg.digits;
        std::vector<TableRow> rows;
        for (double x : cfg.x_grid.empty() ? std::vector<double>{cfg.x} : cfg.x_grid)
            for (int n = 0; n <= cfg.n; ++n) rows.push_back(make_row(n, x, cfg.tol));
        if (cfg.format == OutputFormat::json) {
            out << "{\"command\":\"table\",\"tol\":" << num(cfg.tol, d) << ",\"rows\":[";
            for (size_t i = 0; i < rows.size(); ++i) {
                const TableRow& r = rows[i];
                out << (i ? "," : "") << "{\"x\":" << num(r.x, d) << ",\"n\":" << r.n
                    << ",\"value\":" << num(r.value, d)
                    << ",\"error_estimate\":" << num(r.error_estimate, d) << "}";
            }
            out << "]}\n";
        } else {
            out << "x,n,value,error_estimate\n";
            for (const TableRow& r : rows)
                out << num(r.x, d) << "," << r.n << "," << num(r.value, d) << ","
                    << num(r.error_estimate, d) << "\n";
        }
        return exit_ok;
    } catch (const std::exception& e) {
        return fail_infrastructure(err, e);
    }
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<VerificationReport> checks;
    try {
        checks = verify_suite(cfg.suite);
    } catch (const std::exception& e) {
        return fail_infrastructure(err, e);
    }
    const int d = cfg.digits;
    int failed = 0;
    for (const auto& c : checks)
        if (!c.pass) ++failed;
    if (cfg.format == OutputFormat::json) {
        out << "{\"command\":\"verify\",\"suite\":\"" << cfg.suite << "\",\"checks\":[";
        for (size_t i = 0; i < checks.size(); ++i) {
            const auto& c = checks[i];
            out << (i ? "," : "") << "{\"check_id\":\"" << c.check_id
                << "\",\"lhs\":" << num(c.lhs, d) << ",\"rhs\":" << num(c.rhs, d)
                << ",\"abs_diff\":" << num(c.abs_diff, d)
                << ",\"rel_diff\":" << num(c.rel_diff, d) << ",\"tol\":" << num(c.tol, d)
                << ",\"pass\":" << (c.pass ? "true" : "false") << "}";
        }
        out << "],\"passed\":" << (checks.size() - static_cast<size_t>(failed))
            << ",\"failed\":" << failed << "}\n";
    } else {
        out << "check_id,lhs,rhs,abs_diff,rel_diff,tol,pass\n";
        for (const auto& c : checks)
            out << c.check_id << "," << num(c.lhs, d) << "," << num(c.rhs, d) << ","
                << num(c.abs_diff, d) << "," << num(c.rel_diff, d) << ","
                << num(c.tol, d) << "," << (c.pass ? "true" : "false") << "\n";
    }
    for (const auto& c : checks)
        if (!c.pass)
            err << "FAIL " << c.check_id << " rel_diff=" << num(c.rel_diff, d)
                << " tol=" << num(c.tol, d) << "\n";
    return failed == 0 ? exit_ok : exit_check_failed;
}

int run_alpha(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const int d = cfg.digits;
        struct AlphaRow {
            int n;
            double alpha, tail, fd, rel;
        };
        std::vector<AlphaRow> rows;
        for (int n = 0; n <= cfg.n; ++n) {
            const double al = alpha_coeff(n, cfg.j_max);
            double tail = 0.0;
            for (int j = cfg.j_max + 1; j <= cfg.j_max + 10; ++j)
                tail += std::fabs(alpha_term(n, static_cast<std::uint64_t>(j)));
            const double fd =
                n == 0 ? h_closed(0.5)
                       : richardson_derivative([](double s) { return h_closed(s); },
                                               0.5, n, Defaults::fd_base_step,
                                               Defaults::fd_levels)
                             .value;
            const double rel =
                fd != 0.0 ? std::fabs(al - fd) / std::fabs(fd) : std::fabs(al - fd);
            rows.push_back({n, al, tail, fd, rel});
        }
        if (cfg.format == OutputFormat::json) {
            out << "{\"command\":\"alpha\",\"j_max\":" << cfg.j_max << ",\"rows\":[";
            for (size_t i = 0; i < rows.size(); ++i) {
                const AlphaRow& r = rows[i];
                out << (i ? "," : "") << "{\"n\":" << r.n
                    << ",\"alpha\":" << num(r.alpha, d)
                    << ",\"tail_estimate\":" << num(r.tail, d)
                    << ",\"fd_closed\":" << num(r.fd, d)
                    << ",\"rel_diff\":" << num(r.rel, d) << "}";
            }
            out << "]}\n";
        } else {
            out << "n,alpha,tail_estimate,fd_closed,rel_diff\n";
            for (const AlphaRow& r : rows)
                out << r.n << "," << num(r.alpha, d) << "," << num(r.tail, d) << ","
                    << num(r.fd, d) << "," << num(r.rel, d) << "\n";
        }
        return exit_ok;
    } catch (const std::exception& e) {
        return fail_infrastructure(err, e);
    }
}

} // namespace korder
