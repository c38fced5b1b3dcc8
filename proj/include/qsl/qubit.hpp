// qubit.hpp — exact 2x2 complex linear algebra for qubit states: Bloch
// parameterization, purity measures, closed-form singular values and norms.

#pragma once

#include <array>
#include <complex>

namespace qsl {

using complex = std::complex<double>;

// Absolute tolerance separating round-off from genuine invariant violations.
inline constexpr double kValidationSlack = 1e-12;

// Real 3-vector (v_x, v_y, v_z); construction rejects points outside the
// Bloch ball, ||v||^2 > 1 + slack.
class BlochVector {
public:
    BlochVector(double vx, double vy, double vz);

    double vx() const noexcept { return vx_; }
    double vy() const noexcept { return vy_; }
    double vz() const noexcept { return vz_; }
    double norm_sq() const noexcept { return vx_ * vx_ + vy_ * vy_ + vz_ * vz_; }

private:
    double vx_;
    double vy_;
    double vz_;
};

// C(rho) = v_x^2 + v_y^2, the squared transverse Bloch component.
double coherence(const BlochVector& v) noexcept;

// Unconstrained 2x2 complex matrix; holds generator outputs, which are
// traceless and Hermitian but not states.
struct Operator2 {
    complex m00;
    complex m01;
    complex m10;
    complex m11;
};

// Hermitian, trace-one, positive-semidefinite 2x2 matrix. Construction
// validates all three properties to the slack above; violations throw
// std::invalid_argument rather than being repaired.
class DensityMatrix2 {
public:
    DensityMatrix2(complex m00, complex m01, complex m10, complex m11);

    complex m00() const noexcept { return m00_; }
    complex m01() const noexcept { return m01_; }
    complex m10() const noexcept { return m10_; }
    complex m11() const noexcept { return m11_; }

    Operator2 as_operator() const noexcept { return {m00_, m01_, m10_, m11_}; }

    // Algebraic eigenvalues, larger first. Within the construction slack these
    // coincide with the state's singular values.
    std::array<double, 2> eigenvalues_descending() const noexcept;

private:
    complex m00_;
    complex m01_;
    complex m10_;
    complex m11_;
};

// rho = (I + v_x sigma_x + v_y sigma_y + v_z sigma_z) / 2
DensityMatrix2 from_bloch(const BlochVector& v);
BlochVector to_bloch(const DensityMatrix2& rho);

// tr(a b); real for Hermitian pairs.
double trace_product(const DensityMatrix2& a, const DensityMatrix2& b) noexcept;

// tr(rho^2), in [1/2, 1] for a qubit state.
double purity(const DensityMatrix2& rho) noexcept;

// f = tr(rho_now rho_ref) / tr(rho_ref^2); equals 1 when the states coincide.
double relative_purity(const DensityMatrix2& rho_ref, const DensityMatrix2& rho_now) noexcept;

// Singular values in descending order from the closed form
//   sigma^2 = (T +- sqrt(T^2 - 4 Delta)) / 2,  T = tr(M^dag M),  Delta = |det M|^2.
// The smaller value is recovered as Delta / sigma1^2 to avoid cancellation;
// radicands within -slack of zero are clamped. Non-finite entries throw.
std::array<double, 2> singular_values(const Operator2& m);

double trace_norm(const Operator2& m);  // sigma1 + sigma2
double hs_norm(const Operator2& m);     // sqrt(sigma1^2 + sigma2^2)

}  // namespace qsl
