#include "splitcx/wavefield.hpp"

#include <cmath>
#include <stdexcept>

namespace splitcx {

WindowProfile smooth_bump(double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("smooth_bump: radius must be positive");
    double r = radius;
    WindowProfile w;
    w.support_radius = r;
    w.phi = [r](double t) {
        double s = t / r;
        double q = 1.0 - s * s;
        if (q <= 0.0) return 0.0;
        return std::exp(1.0 - 1.0 / q);
    };
    return w;
}

double WaveFunction::plus_part(double u) const {
    double value = 2.0 * data_.f(u);
    if (plus_window_) value *= plus_window_->profile.phi(u - plus_window_->center);
    return value;
}

double WaveFunction::minus_part(double v) const {
    double value = 2.0 * data_.g(v);
    if (minus_window_) value *= minus_window_->profile.phi(v - minus_window_->center);
    return value;
}

SplitComplex WaveFunction::operator()(SplitComplex z) const {
    NullCoords n = to_null(z);
    return from_null(plus_part(n.u), minus_part(n.v));
}

BiComplex WaveFunction::bicomplex_at(SplitComplex z) const {
    NullCoords n = to_null(z);
    return BiComplex{{plus_part(n.u), 0.0}, {minus_part(n.v), 0.0}};
}

FieldFn WaveFunction::as_field() const {
    WaveFunction copy = *this;
    return [copy](SplitComplex z) { return copy(z); };
}

std::pair<WaveFunction, WaveFunction> apply_window(const WaveFunction& F,
                                                   const WindowProfile& phi, SplitComplex z0) {
    if (phi.phi(0.0) != 1.0)
        throw std::invalid_argument("apply_window: window must satisfy phi(0) = 1");
    NullCoords n0 = to_null(z0);

    WaveFunction plus = F;
    plus.minus_window_.reset();
    plus.data_.g = [](double) { return 0.0; };
    plus.plus_window_ = WaveFunction::PartWindow{phi, n0.u};
    plus.data_.bounded = true;

    WaveFunction minus = F;
    minus.plus_window_.reset();
    minus.data_.f = [](double) { return 0.0; };
    minus.minus_window_ = WaveFunction::PartWindow{phi, n0.v};
    minus.data_.bounded = true;

    return {plus, minus};
}

namespace {

// four-point stencil for the pair (d_x, d_y) of a split-complex field
struct Stencil {
    SplitComplex dx, dy;
};

Stencil central(const FieldFn& F, SplitComplex z, double h) {
    SplitComplex fxp = F({z.x + h, z.y});
    SplitComplex fxm = F({z.x - h, z.y});
    SplitComplex fyp = F({z.x, z.y + h});
    SplitComplex fym = F({z.x, z.y - h});
    double inv = 1.0 / (2.0 * h);
    return {(fxp - fxm) * inv, (fyp - fym) * inv};
}

}  // namespace

SplitComplex dbar_fd(const FieldFn& F, SplitComplex z, double h) {
    Stencil s = central(F, z, h);
    return (s.dx - unit_j * s.dy) * 0.5;
}

SplitComplex d_fd(const FieldFn& F, SplitComplex z, double h) {
    Stencil s = central(F, z, h);
    return (s.dx + unit_j * s.dy) * 0.5;
}

SplitComplex box_fd(const FieldFn& F, SplitComplex z, double h) {
    SplitComplex fxp = F({z.x + h, z.y});
    SplitComplex fxm = F({z.x - h, z.y});
    SplitComplex fyp = F({z.x, z.y + h});
    SplitComplex fym = F({z.x, z.y - h});
    SplitComplex f0 = F(z);
    double inv = 1.0 / (h * h);
    return (fxp + fxm - f0 * 2.0) * inv - (fyp + fym - f0 * 2.0) * inv;
}

BiComplex dbar_fd(const BiFieldFn& F, SplitComplex z, double h) {
    BiComplex fxp = F({z.x + h, z.y});
    BiComplex fxm = F({z.x - h, z.y});
    BiComplex fyp = F({z.x, z.y + h});
    BiComplex fym = F({z.x, z.y - h});
    double inv = 1.0 / (2.0 * h);
    BiComplex dx = (fxp - fxm) * inv;
    BiComplex dy = (fyp - fym) * inv;
    // j acts as +1 on the plus component and -1 on the minus component
    return {(dx.plus - dy.plus) * 0.5, (dx.minus + dy.minus) * 0.5};
}

std::function<double(double)> project_characteristic(const FieldFn& F, CharacteristicSign sign) {
    if (sign == CharacteristicSign::Plus) {
        return [F](double t) {
            SplitComplex z = from_null(t, 0.0);
            NullCoords n = to_null(F(z));
            return n.u;
        };
    }
    return [F](double t) {
        SplitComplex z = from_null(0.0, t);
        NullCoords n = to_null(F(z));
        return n.v;
    };
}

FieldFn product(const FieldFn& F, const FieldFn& G) {
    return [F, G](SplitComplex z) { return F(z) * G(z); };
}

Profile profile_by_name(const std::string& name, double param) {
    if (name == "gaussian") {
        double k = param;
        return [k](double t) { return std::exp(-(k * t) * (k * t)); };
    }
    if (name == "sech") {
        double k = param;
        return [k](double t) { return 1.0 / std::cosh(k * t); };
    }
    if (name == "sinbump") {
        double k = param;
        WindowProfile bump = smooth_bump(3.0);
        Profile phi = bump.phi;
        return [k, phi](double t) { return std::sin(k * t) * phi(t); };
    }
    if (name == "poly1") {
        double k = param;
        return [k](double t) { return k * t; };
    }
    if (name == "poly2") {
        double k = param;
        return [k](double t) { return (k * t) * (k * t); };
    }
    if (name == "const") {
        double c = param;
        return [c](double) { return c; };
    }
    if (name == "zero") {
        return [](double) { return 0.0; };
    }
    throw std::invalid_argument("unknown profile family: " + name);
}

bool profile_is_bounded(const std::string& name) {
    if (name == "gaussian" || name == "sech" || name == "sinbump" || name == "const" ||
        name == "zero")
        return true;
    if (name == "poly1" || name == "poly2") return false;
    throw std::invalid_argument("unknown profile family: " + name);
}

double profile_bound(const std::string& name, double param) {
    if (name == "gaussian" || name == "sech") return 1.0;
    if (name == "sinbump") return 1.0;
    if (name == "const") return std::abs(param);
    if (name == "zero") return 0.0;
    throw std::invalid_argument("profile family has no finite bound: " + name);
}

}  // namespace splitcx
