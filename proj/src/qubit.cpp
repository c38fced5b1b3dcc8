#include "qsl/qubit.hpp"

#include <cmath>
#include <stdexcept>

namespace qsl {

namespace {

bool entry_finite(complex z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

BlochVector::BlochVector(double vx, double vy, double vz) : vx_(vx), vy_(vy), vz_(vz) {
    if (!std::isfinite(vx) || !std::isfinite(vy) || !std::isfinite(vz)) {
        throw std::invalid_argument("BlochVector: non-finite component");
    }
    if (norm_sq() > 1.0 + kValidationSlack) {
        throw std::invalid_argument("BlochVector: norm exceeds the Bloch ball");
    }
}

double coherence(const BlochVector& v) noexcept {
    return v.vx() * v.vx() + v.vy() * v.vy();
}

DensityMatrix2::DensityMatrix2(complex m00, complex m01, complex m10, complex m11)
    : m00_(m00), m01_(m01), m10_(m10), m11_(m11) {
    if (!entry_finite(m00) || !entry_finite(m01) || !entry_finite(m10) || !entry_finite(m11)) {
        throw std::invalid_argument("DensityMatrix2: non-finite entry");
    }
    if (std::abs(m00.imag()) > kValidationSlack || std::abs(m11.imag()) > kValidationSlack ||
        std::abs(m10 - std::conj(m01)) > kValidationSlack) {
        throw std::invalid_argument("DensityMatrix2: not Hermitian");
    }
    if (std::abs(m00.real() + m11.real() - 1.0) > kValidationSlack) {
        throw std::invalid_argument("DensityMatrix2: trace differs from 1");
    }
    if (eigenvalues_descending()[1] < -kValidationSlack) {
        throw std::invalid_argument("DensityMatrix2: not positive semidefinite");
    }
}

std::array<double, 2> DensityMatrix2::eigenvalues_descending() const noexcept {
    const double tr = m00_.real() + m11_.real();
    const double det = (m00_ * m11_ - m01_ * m10_).real();
    double radicand = tr * tr - 4.0 * det;
    if (radicand < 0.0) radicand = 0.0;  // round-off at degenerate spectra
    const double root = std::sqrt(radicand);
    return {0.5 * (tr + root), 0.5 * (tr - root)};
}

DensityMatrix2 from_bloch(const BlochVector& v) {
    const complex off(0.5 * v.vx(), -0.5 * v.vy());
    return {complex(0.5 * (1.0 + v.vz()), 0.0), off, std::conj(off),
            complex(0.5 * (1.0 - v.vz()), 0.0)};
}

BlochVector to_bloch(const DensityMatrix2& rho) {
    return {2.0 * rho.m10().real(), 2.0 * rho.m10().imag(),
            rho.m00().real() - rho.m11().real()};
}

double trace_product(const DensityMatrix2& a, const DensityMatrix2& b) noexcept {
    return (a.m00() * b.m00() + a.m01() * b.m10() + a.m10() * b.m01() + a.m11() * b.m11())
        .real();
}

double purity(const DensityMatrix2& rho) noexcept { return trace_product(rho, rho); }

double relative_purity(const DensityMatrix2& rho_ref, const DensityMatrix2& rho_now) noexcept {
    return trace_product(rho_now, rho_ref) / purity(rho_ref);
}

std::array<double, 2> singular_values(const Operator2& m) {
    if (!entry_finite(m.m00) || !entry_finite(m.m01) || !entry_finite(m.m10) ||
        !entry_finite(m.m11)) {
        throw std::invalid_argument("singular_values: non-finite entry");
    }
    const double t = std::norm(m.m00) + std::norm(m.m01) + std::norm(m.m10) + std::norm(m.m11);
    const double delta = std::norm(m.m00 * m.m11 - m.m01 * m.m10);
    double radicand = t * t - 4.0 * delta;
    if (radicand < 0.0) {
        if (radicand < -kValidationSlack * std::fmax(1.0, t * t)) {
            throw std::domain_error("singular_values: radicand beyond round-off tolerance");
        }
        radicand = 0.0;
    }
    const double s1_sq = 0.5 * (t + std::sqrt(radicand));
    const double s2_sq = s1_sq > 0.0 ? delta / s1_sq : 0.0;
    return {std::sqrt(s1_sq), std::sqrt(s2_sq)};
}

double trace_norm(const Operator2& m) {
    const auto sv = singular_values(m);
    return sv[0] + sv[1];
}

double hs_norm(const Operator2& m) {
    const auto sv = singular_values(m);
    return std::hypot(sv[0], sv[1]);
}

}  // namespace qsl
