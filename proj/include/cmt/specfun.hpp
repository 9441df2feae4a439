/**
 * specfun.hpp — integer-order cylinder functions J_n, Y_n, H^(1)_n, H^(2)_n,
 * their derivatives, and zero finding.
 *
 * Evaluation strategy:
 *   - J_n: power series for small argument, otherwise Miller's downward
 *     recurrence normalized with J_0 + 2*sum J_{2k} = 1.
 *   - Y_n: log series for Y_0/Y_1 at small argument; Neumann series in J_{2k}
 *     for moderate/large argument; stable upward recurrence in the order.
 *   - H^(1) = J + iY, H^(2) = J - iY.
 *
 * Orders are capped at kMaxOrder. Accuracy target is ~1e-13 relative to the
 * magnitude of the dominant member of the (J, Y) pair, which is what the
 * root bracketing and coupling assembly downstream rely on.
 */
#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmt::specfun {

inline constexpr int kMaxOrder = 60;

enum class CylKind { J, Y, H1, H2 };

/// Target function for zero tables: J_n or its derivative J_n'.
enum class ZeroTarget { J, Jprime };

namespace detail {

inline constexpr double kEulerGamma = 0.57721566490153286060651209;

inline void check_order(int n) {
    if (n < 0 || n > kMaxOrder + 1)
        throw std::out_of_range("specfun: order " + std::to_string(n) +
                                " outside supported range [0, " +
                                std::to_string(kMaxOrder) + "]");
}

/// J_n(x) by power series; reliable for x <= ~4, any order.
inline double bessel_j_series(int n, double x) {
    const double half = 0.5 * x;
    // t0 = (x/2)^n / n!
    double t = 1.0;
    for (int i = 1; i <= n; ++i) t *= half / static_cast<double>(i);
    double sum = t;
    const double q = -half * half;
    for (int k = 1; k <= 64; ++k) {
        t *= q / (static_cast<double>(k) * static_cast<double>(n + k));
        sum += t;
        if (std::abs(t) < 1e-18 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
}

/// All of J_0(x)..J_nmax(x) in one pass.
inline void bessel_j_all(int nmax, double x, std::vector<double>& out) {
    out.assign(static_cast<std::size_t>(nmax) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return;
    }
    if (x < 4.0) {
        for (int n = 0; n <= nmax; ++n) out[static_cast<std::size_t>(n)] = bessel_j_series(n, x);
        return;
    }
    // Miller downward recurrence with rescaling and sum normalization
    const int m0 = std::max(nmax, static_cast<int>(std::ceil(x)));
    int start = m0 + 1 + static_cast<int>(std::ceil(std::sqrt(40.0 * (m0 + 1))));
    if (start % 2 == 1) ++start;
    double fp = 0.0;           // f_{start+1}
    double fc = 1e-300;        // f_{start}
    double sum = 0.0;          // J_0 + 2*sum_{k>=1} J_{2k}, built on the fly
    for (int k = start; k >= 1; --k) {
        const double fm = (2.0 * k / x) * fc - fp;
        fp = fc;
        fc = fm;
        if (k - 1 <= nmax) out[static_cast<std::size_t>(k - 1)] = fc;
        if ((k - 1) % 2 == 0) sum += (k == 1) ? fc : 2.0 * fc;
        if (std::abs(fc) > 1e250) {
            fc *= 1e-250;
            fp *= 1e-250;
            sum *= 1e-250;
            for (auto& v : out) v *= 1e-250;
        }
    }
    for (auto& v : out) v /= sum;
}

inline double bessel_j_one(int n, double x) {
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    if (x < 4.0) return bessel_j_series(n, x);
    std::vector<double> buf;
    bessel_j_all(n, x, buf);
    return buf[static_cast<std::size_t>(n)];
}

/// Y_0 and Y_1 via the log series (small x). Valid for x <= ~8.
inline void bessel_y01_series(double x, double& y0, double& y1) {
    const double j0 = bessel_j_series(0, x);
    const double j1 = bessel_j_series(1, x);
    const double lg = std::log(0.5 * x) + kEulerGamma;
    const double q = x * x * 0.25;

    // Y0 = (2/pi) [ lg*J0 + sum_{k>=1} (-1)^{k+1} H_k q^k / (k!)^2 ]
    double hk = 0.0, tk = 1.0, s0 = 0.0;
    for (int k = 1; k <= 40; ++k) {
        hk += 1.0 / k;
        tk *= q / (static_cast<double>(k) * static_cast<double>(k));
        const double term = ((k % 2 == 1) ? 1.0 : -1.0) * hk * tk;
        s0 += term;
        if (std::abs(term) < 1e-18 * (std::abs(s0) + 1.0)) break;
    }
    y0 = (2.0 / std::numbers::pi) * (lg * j0 + s0);

    // Y1 = -(2/(pi x)) + (2/pi) ln(x/2) J1 - (1/pi) sum_{k>=0}
    //      (psi(k+1)+psi(k+2)) (-1)^k (x/2)^{2k+1} / (k! (k+1)!)
    // The log factor here excludes Euler gamma; it enters through psi.
    double psi_a = -kEulerGamma;        // psi(1)
    double psi_b = -kEulerGamma + 1.0;  // psi(2)
    double t = 0.5 * x;                 // (x/2)^{2k+1}/(k!(k+1)!) at k=0
    double s1 = 0.0;
    double sign = 1.0;
    for (int k = 0; k <= 40; ++k) {
        const double term = sign * (psi_a + psi_b) * t;
        s1 += term;
        if (std::abs(term) < 1e-18 * (std::abs(s1) + 1.0) && k > 2) break;
        sign = -sign;
        psi_a = psi_b;
        psi_b += 1.0 / (k + 2);
        t *= q / (static_cast<double>(k + 1) * static_cast<double>(k + 2));
    }
    y1 = -2.0 / (std::numbers::pi * x) + (2.0 / std::numbers::pi) * std::log(0.5 * x) * j1 -
         s1 / std::numbers::pi;
}

/// Y_0 and Y_1 via the Neumann series in J_{2k} (moderate/large x).
inline void bessel_y01_neumann(double x, double& y0, double& y1) {
    const int top = static_cast<int>(std::ceil(x)) + 42;
    std::vector<double> j;
    bessel_j_all(top, x, j);
    const double lg = std::log(0.5 * x) + kEulerGamma;
    double s = 0.0, sp = 0.0;
    double sign = 1.0;  // (-1)^{k+1} at k=1
    for (int k = 1; 2 * k + 1 <= top; ++k) {
        const std::size_t e = static_cast<std::size_t>(2 * k);
        s += sign * j[e] / k;
        sp += sign * 0.5 * (j[e - 1] - j[e + 1]) / k;
        sign = -sign;
    }
    y0 = (2.0 / std::numbers::pi) * (lg * j[0] + 2.0 * s);
    const double j0p = -j[1];
    const double y0p = (2.0 / std::numbers::pi) * (j[0] / x + lg * j0p + 2.0 * sp);
    y1 = -y0p;
}

inline double bessel_y_one(int n, double x) {
    if (!(x > 0.0)) throw std::domain_error("specfun: Y_n requires x > 0");
    double y0, y1;
    if (x < 8.0)
        bessel_y01_series(x, y0, y1);
    else
        bessel_y01_neumann(x, y0, y1);
    if (n == 0) return y0;
    if (n == 1) return y1;
    double ym = y0, yc = y1;
    for (int k = 1; k < n; ++k) {
        const double yn = (2.0 * k / x) * yc - ym;
        ym = yc;
        yc = yn;
        if (std::isinf(yc))
            throw std::overflow_error("specfun: Y_n overflow at n=" + std::to_string(k + 1) +
                                      ", x=" + std::to_string(x));
    }
    return yc;
}

}  // namespace detail

/// J_n(x), integer n >= 0, x >= 0.
inline double bessel_j(int n, double x) {
    detail::check_order(n);
    if (x < 0.0) throw std::domain_error("specfun: J_n requires x >= 0");
    return detail::bessel_j_one(n, x);
}

/// Y_n(x), integer n >= 0, x > 0.
inline double bessel_y(int n, double x) {
    detail::check_order(n);
    return detail::bessel_y_one(n, x);
}

/// d/dx J_n(x)
inline double bessel_j_deriv(int n, double x) {
    detail::check_order(n);
    if (n == 0) return -bessel_j(1, x);
    return 0.5 * (bessel_j(n - 1, x) - bessel_j(n + 1, x));
}

/// d/dx Y_n(x)
inline double bessel_y_deriv(int n, double x) {
    detail::check_order(n);
    if (n == 0) return -bessel_y(1, x);
    return 0.5 * (bessel_y(n - 1, x) - bessel_y(n + 1, x));
}

inline std::complex<double> hankel1(int n, double x) {
    return {bessel_j(n, x), bessel_y(n, x)};
}

inline std::complex<double> hankel2(int n, double x) {
    return {bessel_j(n, x), -bessel_y(n, x)};
}

inline std::complex<double> hankel1_deriv(int n, double x) {
    return {bessel_j_deriv(n, x), bessel_y_deriv(n, x)};
}

inline std::complex<double> hankel2_deriv(int n, double x) {
    return {bessel_j_deriv(n, x), -bessel_y_deriv(n, x)};
}

/// Evaluate a cylinder function of nonnegative integer order at real x.
/// J admits x = 0; the singular kinds require x > 0.
inline std::complex<double> cyl_eval(CylKind kind, int n, double x) {
    switch (kind) {
        case CylKind::J: return {bessel_j(n, x), 0.0};
        case CylKind::Y: return {bessel_y(n, x), 0.0};
        case CylKind::H1: return hankel1(n, x);
        case CylKind::H2: return hankel2(n, x);
    }
    throw std::logic_error("specfun: bad CylKind");
}

inline std::complex<double> cyl_eval_deriv(CylKind kind, int n, double x) {
    switch (kind) {
        case CylKind::J: return {bessel_j_deriv(n, x), 0.0};
        case CylKind::Y: return {bessel_y_deriv(n, x), 0.0};
        case CylKind::H1: return hankel1_deriv(n, x);
        case CylKind::H2: return hankel2_deriv(n, x);
    }
    throw std::logic_error("specfun: bad CylKind");
}

/// Signed-order variants via C_{-n} = (-1)^n C_n (integer orders).
inline std::complex<double> cyl_eval_signed(CylKind kind, int n, double x) {
    if (n >= 0) return cyl_eval(kind, n, x);
    const double s = (n % 2 == 0) ? 1.0 : -1.0;
    return s * cyl_eval(kind, -n, x);
}

inline std::complex<double> cyl_eval_deriv_signed(CylKind kind, int n, double x) {
    if (n >= 0) return cyl_eval_deriv(kind, n, x);
    const double s = (n % 2 == 0) ? 1.0 : -1.0;
    return s * cyl_eval_deriv(kind, -n, x);
}

/// |z (H2'_l H1_l - H2_l H1'_l)(z) + 4i/pi|; zero up to round-off by the
/// Hankel Wronskian.
inline double hankel_wronskian_residual(int l, double z) {
    if (!(z > 0.0)) throw std::domain_error("specfun: Wronskian requires z > 0");
    const auto h1 = hankel1(l, z), h2 = hankel2(l, z);
    const auto d1 = hankel1_deriv(l, z), d2 = hankel2_deriv(l, z);
    const std::complex<double> w = z * (d2 * h1 - h2 * d1);
    return std::abs(w + std::complex<double>(0.0, 4.0 / std::numbers::pi));
}

/// Ascending positive zeros of J_n or J_n'.
struct ZeroTable {
    ZeroTarget target;
    int order;
    std::vector<double> zeros;
};

namespace detail {

/// Bracketed secant/bisection hybrid; the bracket [a, b] must straddle a
/// sign change. Converges to machine precision in the abscissa.
template <class F>
double refine_root(F&& f, double a, double b, double fa, double fb) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    for (int it = 0; it < 200; ++it) {
        const double width = b - a;
        if (width <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(b)))
            break;
        double m = a - fa * width / (fb - fa);  // secant
        const double margin = 0.01 * width;
        if (!(m > a + margin && m < b - margin)) m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fa < 0.0) == (fm < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    return std::abs(fa) < std::abs(fb) ? a : b;
}

}  // namespace detail

/// First `count` positive zeros of J_n (target J) or J_n' (target Jprime),
/// each refined to |f| <~ 1e-13 in scaled magnitude. The trivial zero of
/// J_n' at the origin is excluded.
inline ZeroTable cyl_zeros(ZeroTarget target, int n, int count) {
    detail::check_order(n);
    if (count < 1) throw std::invalid_argument("specfun: zero count must be >= 1");
    auto f = [&](double z) {
        return target == ZeroTarget::J ? bessel_j(n, z) : bessel_j_deriv(n, z);
    };
    ZeroTable table{target, n, {}};
    table.zeros.reserve(static_cast<std::size_t>(count));
    const double step = std::numbers::pi / 20.0;
    double a = 0.25 * step;
    double fa = f(a);
    const long max_steps = 400000;
    for (long i = 0; i < max_steps && static_cast<int>(table.zeros.size()) < count; ++i) {
        double b = a + step;
        double fb = f(b);
        if (fb == 0.0) {
            // Grid point landed exactly on a root; record it and step past.
            table.zeros.push_back(b);
            b += 1e-9 * std::max(1.0, b);
            fb = f(b);
        } else if (fa != 0.0 && (fa < 0.0) != (fb < 0.0)) {
            table.zeros.push_back(detail::refine_root(f, a, b, fa, fb));
        }
        a = b;
        fa = fb;
    }
    if (static_cast<int>(table.zeros.size()) < count)
        throw std::runtime_error("specfun: zero scan budget exhausted for order " +
                                 std::to_string(n));
    return table;
}

}  // namespace cmt::specfun
