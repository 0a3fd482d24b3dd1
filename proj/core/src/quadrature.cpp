#include "qdecay/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>

namespace qdecay::quadrature {

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK QK15 constants).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
    double a = 0.0, b = 0.0;
    Complex value{0.0, 0.0};
    double error = 0.0;
};

// One Gauss-Kronrod pass over [a, b]; the error is the (conservative)
// difference between the Kronrod and embedded Gauss estimates.
Panel gk15(const ComplexFn& f, double a, double b, long& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    Complex kron{0.0, 0.0};
    Complex gauss{0.0, 0.0};
    for (int j = 0; j < 8; ++j) {
        if (kXgk[j] == 0.0) {
            const Complex fc = f(c);
            ++evals;
            kron += kWgk[7] * fc;
            gauss += kWg[3] * fc;
            break;
        }
        const Complex f1 = f(c - h * kXgk[j]);
        const Complex f2 = f(c + h * kXgk[j]);
        evals += 2;
        kron += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = h * kron;
    p.error = std::abs(h * (kron - gauss));
    return p;
}

struct PanelCompare {
    bool operator()(const Panel& lhs, const Panel& rhs) const {
        return lhs.error < rhs.error;
    }
};

QuadResult adaptive_impl(const ComplexFn& f, double a, double b,
                         const std::vector<double>& breaks, double tol,
                         long max_evals) {
    if (!(a < b)) throw DomainError("integration bounds must satisfy a < b");
    if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");

    std::vector<double> edges{a};
    for (double x : breaks)
        if (x > a && x < b) edges.push_back(x);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    QuadResult res;
    std::priority_queue<Panel, std::vector<Panel>, PanelCompare> heap;
    Complex total{0.0, 0.0};
    double err_total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Panel p = gk15(f, edges[i], edges[i + 1], res.evaluations);
        total += p.value;
        err_total += p.error;
        heap.push(p);
    }

    while (err_total > tol && res.evaluations < max_evals && !heap.empty()) {
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval at machine resolution; accept its estimate
            continue;
        }
        total -= worst.value;
        err_total -= worst.error;
        Panel left = gk15(f, worst.a, mid, res.evaluations);
        Panel right = gk15(f, mid, worst.b, res.evaluations);
        total += left.value + right.value;
        err_total += left.error + right.error;
        heap.push(left);
        heap.push(right);
    }

    res.value = total;
    res.error_estimate = err_total;
    if (err_total > tol)
        throw NumericalError("adaptive quadrature budget exhausted", total, err_total);
    return res;
}

constexpr long kDefaultBudget = 4'000'000;

} // namespace

QuadResult adaptive_integrate(const ComplexFn& f, double a, double b, double tol) {
    return adaptive_impl(f, a, b, {}, tol, kDefaultBudget);
}

QuadResult adaptive_integrate(const RealFn& f, double a, double b, double tol) {
    return adaptive_impl([&f](double x) { return Complex(f(x), 0.0); }, a, b, {}, tol,
                         kDefaultBudget);
}

QuadResult adaptive_integrate_split(const ComplexFn& f, double a, double b,
                                    const std::vector<double>& breaks, double tol) {
    return adaptive_impl(f, a, b, breaks, tol, kDefaultBudget);
}

QuadResult improper_integrate(const RealFn& f, double a, double tol,
                              double tail_exponent_hint) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    if (!(tail_exponent_hint > 1.0))
        throw DomainError("tail exponent hint must exceed 1 for convergence");

    QuadResult res;
    // Grow the window in octaves until the latest contribution is small.
    double lo = a;
    double width = 1.0;
    Complex total{0.0, 0.0};
    double err = 0.0;
    std::vector<double> seg_hi;
    std::vector<double> seg_f; // |segment| values for the tail fit
    double last_contrib = 0.0;
    int segments = 0;
    const int max_segments = 64;
    while (segments < max_segments) {
        const double hi = lo + width;
        QuadResult part = adaptive_impl(
            [&f](double x) { return Complex(f(x), 0.0); }, lo, hi, {},
            std::max(tol * 0.05, 1e-15), kDefaultBudget);
        res.evaluations += part.evaluations;
        total += part.value;
        err += part.error_estimate;
        last_contrib = std::abs(part.value);
        seg_hi.push_back(hi);
        seg_f.push_back(std::max(std::abs(f(hi)), 1e-300));
        ++res.evaluations;
        lo = hi;
        width *= 2.0;
        ++segments;
        if (segments >= 6 && last_contrib < tol * 0.1) break;
    }
    if (segments >= max_segments && last_contrib >= tol * 0.1)
        throw NumericalError("improper integral window extension exhausted", total,
                             err + last_contrib);

    // Fit |f| ~ c * t^(-beta) over the last decade of samples and integrate
    // the model from the current edge to infinity.
    const double T = lo;
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < seg_hi.size(); ++i)
        if (seg_hi[i] >= T / 12.0 && seg_hi[i] > 0.0) {
            xs.push_back(seg_hi[i]);
            ys.push_back(seg_f[i]);
        }
    double tail_fit = 0.0;
    double tail_hint_value = 0.0;
    const double f_edge = std::max(std::abs(f(T)), 0.0);
    ++res.evaluations;
    tail_hint_value = f_edge * T / (tail_exponent_hint - 1.0);
    bool fitted = false;
    double beta_fit = 0.0;
    if (xs.size() >= 3 && f_edge > 0.0) {
        auto [slope, c0] = detail::loglog_fit(xs, ys);
        beta_fit = -slope;
        if (beta_fit > 1.05) {
            tail_fit = f_edge * T / (beta_fit - 1.0);
            fitted = true;
        }
    }
    if (!fitted) tail_fit = tail_hint_value;

    const double tail_uncertainty = std::abs(tail_fit - tail_hint_value);
    if (fitted && tail_fit > tol &&
        (tail_fit > 10.0 * tail_hint_value || tail_hint_value > 10.0 * tail_fit)) {
        throw NumericalError("tail model mismatch", total + tail_fit,
                             err + tail_uncertainty + tail_fit);
    }

    res.value = total + tail_fit;
    res.error_estimate = err + tail_uncertainty + 0.1 * tail_fit + last_contrib * 0.01;
    return res;
}

QuadResult fourier_integral(const ComplexFn& g, double a, double b, double t,
                            double tol, const std::vector<double>& extra_breaks) {
    if (!(a < b)) throw DomainError("integration bounds must satisfy a < b");
    const double abs_t = std::abs(t);
    auto integrand = [&g, t](double e) {
        return g(e) * std::exp(Complex(0.0, -e * t));
    };
    // Seed the subdivision with one panel per oscillation period; the
    // 15-node rule then resolves each period comfortably.
    std::vector<double> breaks(extra_breaks);
    if (abs_t > 0.0) {
        const double period = 2.0 * std::numbers::pi / abs_t;
        const double span = b - a;
        const double n_panels = std::ceil(span / period);
        if (n_panels > 1.0 && n_panels < 3.0e5) {
            const double step = span / n_panels;
            breaks.reserve(breaks.size() + static_cast<std::size_t>(n_panels));
            for (double x = a + step; x < b - 0.25 * step; x += step)
                breaks.push_back(x);
        } else if (n_panels >= 3.0e5) {
            throw NumericalError("oscillatory integral too long to resolve",
                                 Complex(0.0, 0.0), 1.0);
        }
    }
    return adaptive_impl(integrand, a, b, breaks, tol, 30'000'000);
}

QuadResult fourier_integral(const RealFn& g, double a, double b, double t,
                            double tol, const std::vector<double>& extra_breaks) {
    return fourier_integral([&g](double e) { return Complex(g(e), 0.0); }, a, b, t,
                            tol, extra_breaks);
}

QuadResult fourier_tail_series(const ComplexFn& g, double e0, double t,
                               double h, int direction) {
    if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
    if (t == 0.0)
        throw DomainError("tail series requires t != 0 (use plain quadrature)");
    const double s = (direction >= 0) ? 1.0 : -1.0;

    QuadResult res;
    // Five-point stencil about e0 (one-sided is not needed: g must be smooth
    // in a neighborhood for the series to be valid at all).
    Complex gm2 = g(e0 - 2.0 * h), gm1 = g(e0 - h), g0 = g(e0), gp1 = g(e0 + h),
            gp2 = g(e0 + 2.0 * h);
    res.evaluations = 5;
    const Complex d1 = (-gp2 + 8.0 * gp1 - 8.0 * gm1 + gm2) / (12.0 * h);
    const Complex d2 = (-gp2 + 16.0 * gp1 - 30.0 * g0 + 16.0 * gm1 - gm2) /
                       (12.0 * h * h);
    const Complex d3 = (gp2 - 2.0 * gp1 + 2.0 * gm1 - gm2) / (2.0 * h * h * h);

    // int_{e0}^{s*inf} g e^{-iet} de = e^{-i e0 t} [g/(it) + g'/(it)^2 + ...] * s
    const Complex it(0.0, t);
    const Complex phase = std::exp(Complex(0.0, -e0 * t));
    const Complex term1 = g0 / it;
    const Complex term2 = d1 / (it * it);
    const Complex term3 = d2 / (it * it * it);
    const Complex term4 = d3 / (it * it * it * it);
    res.value = s * phase * (term1 + term2 + term3 + term4);

    const double t1 = std::abs(term1), t2 = std::abs(term2), t3 = std::abs(term3),
                 t4 = std::abs(term4);
    double est = t4;
    if (t4 > t3 || t3 > t2) {
        // series not (yet) asymptotically decreasing; report a pessimistic
        // bound so callers can extend the resolved region instead
        est = std::max({t2, t3, t4});
    } else if (t3 > 0.0) {
        est = t4 * std::min(1.0, t4 / t3);
    }
    res.error_estimate = est;
    return res;
}

std::vector<Complex> fourier_at_times(const RealFn& f, const TransformGrid& grid,
                                      const FourierOptions& options) {
    if (!(grid.e_max > grid.e_min))
        throw DomainError("transform grid requires e_max > e_min");
    if (grid.n_points < 16) throw DomainError("transform grid needs n_points >= 16");

    const double span = grid.e_max - grid.e_min;
    const double bandwidth = std::numbers::pi * grid.n_points / span;
    for (double t : grid.t_values)
        if (std::abs(t) > bandwidth)
            throw DomainError("time exceeds grid bandwidth");

    const int n = grid.n_points;
    const double h = span / n;

    ThresholdSingularity sing{};
    bool subtract = false;
    if (options.singularity && options.singularity->amplitude != 0.0 &&
        options.singularity->exponent < 1.0) {
        sing = *options.singularity;
        if (sing.decay_rate <= 0.0) sing.decay_rate = 32.0 / span;
        subtract = true;
    }

    auto template_fn = [&sing, &grid](double e) {
        const double v = e - grid.e_min;
        if (v <= 0.0) return 0.0;
        return sing.amplitude * std::pow(v, sing.exponent) *
               std::exp(-sing.decay_rate * v);
    };

    std::vector<double> samples(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        const double e = grid.e_min + h * j;
        double v = f(e);
        if (subtract) v -= template_fn(e);
        samples[static_cast<std::size_t>(j)] = v;
    }

    // One-sided 4th-order estimates of f' at the ends for the h^2
    // Euler-Maclaurin correction term.
    auto end_derivative = [&](bool left) {
        const std::size_t m = samples.size() - 1;
        auto s = [&](std::size_t i) { return left ? samples[i] : samples[m - i]; };
        const double d =
            (-25.0 * s(0) + 48.0 * s(1) - 36.0 * s(2) + 16.0 * s(3) - 3.0 * s(4)) /
            (12.0 * h);
        return left ? d : -d;
    };
    const double df_a = end_derivative(true);
    const double df_b = end_derivative(false);

    std::vector<Complex> out;
    out.reserve(grid.t_values.size());
    for (double t : grid.t_values) {
        Complex acc{0.0, 0.0};
        // trapezoid: half weights at the ends
        const Complex rot = std::exp(Complex(0.0, -h * t));
        Complex phase = std::exp(Complex(0.0, -grid.e_min * t));
        for (int j = 0; j <= n; ++j) {
            const double w = (j == 0 || j == n) ? 0.5 : 1.0;
            acc += w * samples[static_cast<std::size_t>(j)] * phase;
            phase *= rot;
        }
        Complex value = acc * h;

        if (options.endpoint_correction) {
            // Euler-Maclaurin: -(h^2/12) [ (f e)'(b) - (f e)'(a) ] with
            // e(x) = exp(-i x t).
            const Complex ea = std::exp(Complex(0.0, -grid.e_min * t));
            const Complex eb = std::exp(Complex(0.0, -grid.e_max * t));
            const Complex mit(0.0, -t);
            const Complex ga = (df_a + mit * samples.front()) * ea;
            const Complex gb = (df_b + mit * samples.back()) * eb;
            value -= h * h / 12.0 * (gb - ga);
        }

        if (subtract) {
            // add back the closed-form transform of the subtracted template
            const Complex denom(sing.decay_rate, t);
            const Complex ft = sing.amplitude * std::tgamma(sing.exponent + 1.0) *
                               std::pow(denom, -(sing.exponent + 1.0));
            value += ft * std::exp(Complex(0.0, -grid.e_min * t));
        }
        out.push_back(value);
    }
    return out;
}

namespace detail {

Complex exp_e1_scaled(Complex z) {
    const double az = std::abs(z);
    if (az == 0.0) throw DomainError("E1 undefined at z = 0");
    if (az < 12.0) {
        // power series: E1(z) = -gamma - log z + sum (-1)^{n+1} z^n / (n n!)
        constexpr double euler_gamma = 0.5772156649015328606;
        Complex sum{0.0, 0.0};
        Complex term{1.0, 0.0};
        for (int n = 1; n < 120; ++n) {
            term *= -z / static_cast<double>(n);
            const Complex add = -term / static_cast<double>(n);
            sum += add;
            if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
        }
        const Complex e1 = -euler_gamma - std::log(z) + sum;
        return std::exp(z) * e1;
    }
    // modified Lentz continued fraction for exp(z) E1(z) =
    //   1/(z+1- 1/(z+3- 4/(z+5- 9/(z+7- ...))))
    const double tiny = 1e-290;
    Complex b = z + 1.0;
    Complex c = 1.0 / tiny;
    Complex d = 1.0 / b;
    Complex hres = d;
    for (int i = 1; i < 400; ++i) {
        const double a = -static_cast<double>(i) * static_cast<double>(i);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const Complex delta = c * d;
        hres *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return hres;
}

const GaussRule& gauss_legendre(int order) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(order));
    rule.weights.resize(static_cast<std::size_t>(order));
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Chebyshev-like initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const std::size_t lo = static_cast<std::size_t>(i);
        const std::size_t hi = static_cast<std::size_t>(order - 1 - i);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = rule.weights[hi] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    auto [pos, inserted] = cache.emplace(order, std::move(rule));
    return pos->second;
}

std::pair<double, double> loglog_fit(const std::vector<double>& x,
                                     const std::vector<double>& y) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    const double slope = (n * sxy - sx * sy) / denom;
    const double c0 = (sy - slope * sx) / n;
    return {slope, c0};
}

} // namespace detail

} // namespace qdecay::quadrature
