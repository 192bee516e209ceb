#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

// Split-complex (hyperbolic) numbers Z = x + j*y with j*j = +1.
//
// The quadratic form N(Z) = x^2 - y^2 is sign-indefinite and vanishes on the
// light cone y = +-x, where Z is a zero divisor. Null coordinates
//
//   u = x + y,   v = x - y,        N(Z) = u*v
//
// diagonalize the algebra: with the idempotents e+ = (1+j)/2, e- = (1-j)/2
// (e+^2 = e+, e-^2 = e-, e+*e- = 0) every Z splits as Z = u*e+ + v*e-, and
// multiplication acts componentwise on (u, v). BiComplex carries the same
// idempotent coordinates with complex entries; the regularized kernels are
// complex-valued in each component and land there.

namespace splitcx {

struct SplitComplex {
    double x = 0.0;  // coefficient of 1
    double y = 0.0;  // coefficient of j
};

inline constexpr SplitComplex unit_j{0.0, 1.0};

constexpr SplitComplex operator+(SplitComplex a, SplitComplex b) { return {a.x + b.x, a.y + b.y}; }
constexpr SplitComplex operator-(SplitComplex a, SplitComplex b) { return {a.x - b.x, a.y - b.y}; }
constexpr SplitComplex operator-(SplitComplex a) { return {-a.x, -a.y}; }

// (a + j*b)(c + j*d) = (ac + bd) + j(ad + bc)
constexpr SplitComplex operator*(SplitComplex a, SplitComplex b) {
    return {a.x * b.x + a.y * b.y, a.x * b.y + a.y * b.x};
}
constexpr SplitComplex operator*(double s, SplitComplex a) { return {s * a.x, s * a.y}; }
constexpr SplitComplex operator*(SplitComplex a, double s) { return {s * a.x, s * a.y}; }

constexpr SplitComplex conj(SplitComplex z) { return {z.x, -z.y}; }

// Indefinite norm N(Z) = x^2 - y^2 = u*v. Multiplicative: N(ZW) = N(Z)N(W).
constexpr double norm(SplitComplex z) { return z.x * z.x - z.y * z.y; }

// Euclidean modulus ||Z|| = sqrt(x^2 + y^2). Not multiplicative; used for
// scale decisions (step sizes, invertibility threshold), never as N.
inline double modulus(SplitComplex z) { return std::hypot(z.x, z.y); }

// Z is treated as non-invertible once |N(Z)| drops below this relative
// threshold; inverting closer to the light cone amplifies input rounding of
// the components past any useful precision.
inline constexpr double invertibility_floor = 1e-14;

inline bool is_invertible(SplitComplex z) {
    double scale = z.x * z.x + z.y * z.y;
    return std::fabs(norm(z)) >= invertibility_floor * (scale > 1.0 ? scale : 1.0);
}

// Z^{-1} = conj(Z) / N(Z); Z * inverse(Z) = 1 whenever is_invertible(Z).
inline SplitComplex inverse(SplitComplex z) {
    if (!is_invertible(z)) {
        throw std::domain_error("SplitComplex inverse: N(Z) too close to the light cone");
    }
    double n = norm(z);
    return {z.x / n, -z.y / n};
}

struct NullCoords {
    double u = 0.0;
    double v = 0.0;
};

constexpr NullCoords to_null(SplitComplex z) { return {z.x + z.y, z.x - z.y}; }
constexpr SplitComplex from_null(NullCoords n) { return {0.5 * (n.u + n.v), 0.5 * (n.u - n.v)}; }
constexpr SplitComplex from_null(double u, double v) { return {0.5 * (u + v), 0.5 * (u - v)}; }

// Complexified idempotent coordinates: W = plus*e+ + minus*e- with complex
// scalars. Multiplication is componentwise because e+*e- = 0.
struct BiComplex {
    std::complex<double> plus{0.0, 0.0};
    std::complex<double> minus{0.0, 0.0};
};

inline BiComplex operator+(const BiComplex& a, const BiComplex& b) {
    return {a.plus + b.plus, a.minus + b.minus};
}
inline BiComplex operator-(const BiComplex& a, const BiComplex& b) {
    return {a.plus - b.plus, a.minus - b.minus};
}
inline BiComplex operator-(const BiComplex& a) { return {-a.plus, -a.minus}; }
inline BiComplex operator*(const BiComplex& a, const BiComplex& b) {
    return {a.plus * b.plus, a.minus * b.minus};
}
inline BiComplex operator*(std::complex<double> s, const BiComplex& a) {
    return {s * a.plus, s * a.minus};
}
inline BiComplex operator*(const BiComplex& a, std::complex<double> s) {
    return {a.plus * s, a.minus * s};
}
inline BiComplex operator*(const BiComplex& a, double s) { return {a.plus * s, a.minus * s}; }

inline BiComplex bicomplex_embed(SplitComplex z) {
    NullCoords n = to_null(z);
    return {{n.u, 0.0}, {n.v, 0.0}};
}

inline BiComplex e_plus() { return {{1.0, 0.0}, {0.0, 0.0}}; }
inline BiComplex e_minus() { return {{0.0, 0.0}, {1.0, 0.0}}; }

// Split the complexified value back into two split-complex numbers:
// W = real_part(W) + i * imag_part(W) with i the scalar complex unit.
inline SplitComplex real_part(const BiComplex& w) { return from_null(w.plus.real(), w.minus.real()); }
inline SplitComplex imag_part(const BiComplex& w) { return from_null(w.plus.imag(), w.minus.imag()); }

inline double max_component_abs(const BiComplex& w) {
    double p = std::abs(w.plus);
    double m = std::abs(w.minus);
    return p > m ? p : m;
}

}  // namespace splitcx
