#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "splitcx/splitnum.hpp"

// Solutions of the 1+1 wave equation box F = (d_xx - d_yy) F = 0 built from
// characteristic data, plus finite-difference versions of the first-order
// factor operators
//
//   dbar = (d_x - j d_y)/2,   d = (d_x + j d_y)/2,   4 * d dbar = box.
//
// Every characteristic pair (f, g) generates the split-complex solution
//
//   F(x,y) = (f(u) + j f(u)) + (g(v) - j g(v)),  u = x+y, v = x-y,
//
// whose idempotent components are F_plus = 2 f(u) and F_minus = 2 g(v):
// the e+ part rides the u characteristics and the e- part the v ones, so
// dbar F = 0 identically.

namespace splitcx {

using Profile = std::function<double(double)>;
using FieldFn = std::function<SplitComplex(SplitComplex)>;
using BiFieldFn = std::function<BiComplex(SplitComplex)>;

// One-dimensional characteristic data. `bounded` is declared by the caller
// and gates the unwindowed reconstruction; `bound` is sup |f|, |g| when set.
struct CharacteristicData {
    Profile f;
    Profile g;
    bool bounded = true;
    double bound = 1.0;
};

// Smooth compactly supported window with phi(0) = 1 and phi = 0 outside
// |t| <= support_radius.
struct WindowProfile {
    Profile phi;
    double support_radius = 0.0;
};

// phi(t) = exp(1 - 1/(1 - (t/r)^2)) for |t| < r, 0 outside. C-infinity, all
// derivatives vanish at |t| = r, phi(0) = 1.
WindowProfile smooth_bump(double radius);

class WaveFunction {
  public:
    WaveFunction() = default;
    explicit WaveFunction(CharacteristicData data) : data_(std::move(data)) {}

    // idempotent components; windows multiply their own part only
    double plus_part(double u) const;
    double minus_part(double v) const;

    SplitComplex operator()(SplitComplex z) const;
    BiComplex bicomplex_at(SplitComplex z) const;
    FieldFn as_field() const;

    bool bounded() const { return data_.bounded; }
    double bound() const { return data_.bound; }

    struct PartWindow {
        WindowProfile profile;
        double center = 0.0;
    };
    const std::optional<PartWindow>& plus_window() const { return plus_window_; }
    const std::optional<PartWindow>& minus_window() const { return minus_window_; }

    friend std::pair<WaveFunction, WaveFunction> apply_window(const WaveFunction& F,
                                                              const WindowProfile& phi,
                                                              SplitComplex z0);

  private:
    CharacteristicData data_;
    std::optional<PartWindow> plus_window_;
    std::optional<PartWindow> minus_window_;
};

inline WaveFunction make_solution(CharacteristicData data) { return WaveFunction(std::move(data)); }

inline SplitComplex eval(const WaveFunction& F, SplitComplex z) { return F(z); }

// Multiplicative windowing about z0 = u0*e+ + v0*e-:
//   F1 = e+ . phi(u - u0) . F   (pure plus part, compact u-support)
//   F2 = e- . phi(v - v0) . F   (pure minus part, compact v-support)
// Both are again solutions, both are bounded whenever f, g are continuous,
// and F1(z0) + F2(z0) = F(z0) because phi(0) = 1.
std::pair<WaveFunction, WaveFunction> apply_window(const WaveFunction& F,
                                                   const WindowProfile& phi, SplitComplex z0);

// FD step scaled to the evaluation point: h = 1e-5 * max(1, ||Z||).
inline double default_fd_step(SplitComplex z) {
    double m = modulus(z);
    return 1e-5 * (m > 1.0 ? m : 1.0);
}

// Central-difference factor operators, O(h^2). dbar annihilates solutions.
SplitComplex dbar_fd(const FieldFn& F, SplitComplex z, double h);
SplitComplex d_fd(const FieldFn& F, SplitComplex z, double h);
SplitComplex box_fd(const FieldFn& F, SplitComplex z, double h);

// Complex-component variant for kernel fields.
BiComplex dbar_fd(const BiFieldFn& F, SplitComplex z, double h);

enum class CharacteristicSign { Plus, Minus };

// Restriction of the idempotent scalar to the complementary null axis:
// Plus:  t -> e+ scalar of F at (u,v) = (t, 0)
// Minus: t -> e- scalar of F at (u,v) = (0, t)
// For a solution this is the full characteristic profile (2f or 2g).
std::function<double(double)> project_characteristic(const FieldFn& F, CharacteristicSign sign);

// Pointwise product field. Products of solutions are again solutions: the
// idempotent components multiply within their own characteristic variable.
FieldFn product(const FieldFn& F, const FieldFn& G);

// Built-in profile families, selectable by name:
//   gaussian [scale k: exp(-(kt)^2)]    sech [1/cosh(kt)]
//   sinbump  [sin(kt) * bump_3(t)]      poly1 [kt]     poly2 [(kt)^2]
//   const    [value c]                  zero
// Unknown names throw std::invalid_argument.
Profile profile_by_name(const std::string& name, double param);
bool profile_is_bounded(const std::string& name);
double profile_bound(const std::string& name, double param);

}  // namespace splitcx
