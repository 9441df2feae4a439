/**
 * model.hpp — problem-description types shared by all solvers: radially
 * layered medium, fictitious disk, derived frequency quantities, and the
 * incident field with its cylindrical-wave coefficients.
 *
 * Unit convention: the library is unit-agnostic; the tests and bundled
 * configurations use the nondimensional system rho0 = kappa0 = R = 1
 * (background sound speed c = 1).
 */
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cmt/specfun.hpp"

namespace cmt {

using Complex = std::complex<double>;

/// One annular material layer; occupies (previous outer_radius, outer_radius].
struct Layer {
    double outer_radius = 0.0;
    double rho = 1.0;
    double kappa = 1.0;
};

/// Piecewise-constant radial material layout inside the fictitious disk.
/// Region between the last layer and the disk boundary is background
/// material. An optional sound-hard core places a Neumann wall at r = core.
struct MediumSpec {
    std::vector<Layer> layers;
    double rho0 = 1.0;
    double kappa0 = 1.0;
    double sound_hard_core_radius = 0.0;

    [[nodiscard]] bool homogeneous() const {
        return layers.empty() && sound_hard_core_radius == 0.0;
    }

    /// Outer radius of the inhomogeneity (0 for a homogeneous medium).
    [[nodiscard]] double inhomogeneity_radius() const {
        double r = sound_hard_core_radius;
        if (!layers.empty()) r = std::max(r, layers.back().outer_radius);
        return r;
    }

    void validate() const {
        if (!(rho0 > 0.0) || !(kappa0 > 0.0))
            throw std::invalid_argument("MediumSpec: background rho0, kappa0 must be positive");
        if (sound_hard_core_radius < 0.0)
            throw std::invalid_argument("MediumSpec: core radius must be >= 0");
        double prev = sound_hard_core_radius;
        for (const auto& l : layers) {
            if (!(l.rho > 0.0) || !(l.kappa > 0.0))
                throw std::invalid_argument("MediumSpec: layer rho, kappa must be positive");
            if (!(l.outer_radius > prev))
                throw std::invalid_argument("MediumSpec: layer radii must be strictly increasing"
                                            " and exceed the core radius");
            prev = l.outer_radius;
        }
    }
};

/// Fictitious disk B_R enclosing all inhomogeneity.
struct FictitiousDisk {
    double radius = 1.0;

    void validate(const MediumSpec& medium) const {
        if (!(radius > 0.0)) throw std::invalid_argument("FictitiousDisk: radius must be > 0");
        if (!(medium.inhomogeneity_radius() < radius))
            throw std::invalid_argument(
                "FictitiousDisk: disk must strictly contain the inhomogeneity");
    }
};

/// One homogeneous radial region [r_lo, r_hi] with its material constants.
struct Region {
    double r_lo = 0.0;
    double r_hi = 0.0;
    double rho = 1.0;
    double kappa = 1.0;

    [[nodiscard]] double wavenumber(double omega) const {
        return omega * std::sqrt(rho / kappa);
    }
    [[nodiscard]] double sound_speed() const { return std::sqrt(kappa / rho); }
};

/// Tile [core_or_0, R] with the medium's regions (layers + trailing background).
inline std::vector<Region> regions_of(const MediumSpec& medium, double R) {
    medium.validate();
    if (!(medium.inhomogeneity_radius() < R))
        throw std::invalid_argument("regions_of: disk radius must exceed the inhomogeneity");
    std::vector<Region> out;
    double lo = medium.sound_hard_core_radius;
    for (const auto& l : medium.layers) {
        out.push_back({lo, l.outer_radius, l.rho, l.kappa});
        lo = l.outer_radius;
    }
    out.push_back({lo, R, medium.rho0, medium.kappa0});
    return out;
}

/// Derived per-frequency quantities for the background medium.
struct Frequency {
    double omega = 0.0;
    double k = 0.0;  ///< background wavenumber omega*sqrt(rho0/kappa0)
    double c = 0.0;  ///< background sound speed

    static Frequency of(double omega, const MediumSpec& medium) {
        if (!(omega > 0.0)) throw std::domain_error("Frequency: omega must be > 0");
        Frequency f;
        f.omega = omega;
        f.c = std::sqrt(medium.kappa0 / medium.rho0);
        f.k = omega / f.c;
        return f;
    }
};

/// Impedance ratio sqrt(rho*kappa/(rho0*kappa0)) of a layer vs background.
inline double impedance_ratio(const Layer& layer, const MediumSpec& medium) {
    return std::sqrt(layer.rho * layer.kappa / (medium.rho0 * medium.kappa0));
}

/// Incoming-wave coefficients of the plane wave e^{i k p.x}:
/// c_l = (1/2)(p_2 + i p_1)^l for l in [-l_max, l_max]; |c_l| = 1/2.
inline Eigen::VectorXcd plane_wave_coefficients(const Eigen::Vector2d& p, int l_max) {
    if (std::abs(p.norm() - 1.0) > 1e-12)
        throw std::domain_error("plane_wave_coefficients: direction must be a unit vector");
    if (l_max < 0) throw std::invalid_argument("plane_wave_coefficients: l_max must be >= 0");
    // p2 + i p1 = e^{i phi} with phi = atan2(p1, p2); powers stay on the circle.
    const double phi = std::atan2(p.x(), p.y());
    Eigen::VectorXcd c(2 * l_max + 1);
    for (int l = -l_max; l <= l_max; ++l)
        c[l + l_max] = 0.5 * std::exp(Complex(0.0, l * phi));
    return c;
}

/// Incident field: a plane wave direction or explicit incoming coefficients.
class IncidentField {
  public:
    static IncidentField plane_wave(const Eigen::Vector2d& direction) {
        if (std::abs(direction.norm() - 1.0) > 1e-12)
            throw std::domain_error("IncidentField: direction must be a unit vector");
        IncidentField f;
        f.is_plane_wave_ = true;
        f.direction_ = direction;
        return f;
    }

    /// Explicit alpha^-_l for l = l_min .. l_min + values.size() - 1.
    /// The incident outgoing partner alpha^{+,in} is taken equal (as for a
    /// plane wave); coefficients outside the stored range are zero.
    static IncidentField coefficients(int l_min, std::vector<Complex> values) {
        IncidentField f;
        f.is_plane_wave_ = false;
        f.l_min_ = l_min;
        f.values_ = std::move(values);
        return f;
    }

    [[nodiscard]] bool is_plane_wave() const { return is_plane_wave_; }
    [[nodiscard]] const Eigen::Vector2d& direction() const {
        if (!is_plane_wave_) throw std::logic_error("IncidentField: not a plane wave");
        return direction_;
    }

    /// alpha^-_l for each l in the given list.
    [[nodiscard]] Eigen::VectorXcd alpha_minus(const std::vector<int>& l_values) const {
        Eigen::VectorXcd out(static_cast<Eigen::Index>(l_values.size()));
        if (is_plane_wave_) {
            const double phi = std::atan2(direction_.x(), direction_.y());
            for (std::size_t i = 0; i < l_values.size(); ++i)
                out[static_cast<Eigen::Index>(i)] =
                    0.5 * std::exp(Complex(0.0, l_values[i] * phi));
        } else {
            for (std::size_t i = 0; i < l_values.size(); ++i) {
                const int idx = l_values[i] - l_min_;
                out[static_cast<Eigen::Index>(i)] =
                    (idx >= 0 && idx < static_cast<int>(values_.size())) ? values_[idx]
                                                                         : Complex(0.0);
            }
        }
        return out;
    }

  private:
    bool is_plane_wave_ = true;
    Eigen::Vector2d direction_{0.0, 1.0};
    int l_min_ = 0;
    std::vector<Complex> values_;
};

/// Incoming/outgoing cylindrical waves I_l, O_l evaluated at a point.
inline Complex cylindrical_incoming(int l, double k, const Eigen::Vector2d& x) {
    const double r = x.norm();
    const double theta = std::atan2(x.y(), x.x());
    return specfun::cyl_eval_signed(specfun::CylKind::H2, l, k * r) *
           std::exp(Complex(0.0, l * theta));
}

inline Complex cylindrical_outgoing(int l, double k, const Eigen::Vector2d& x) {
    const double r = x.norm();
    const double theta = std::atan2(x.y(), x.x());
    return specfun::cyl_eval_signed(specfun::CylKind::H1, l, k * r) *
           std::exp(Complex(0.0, l * theta));
}

}  // namespace cmt
