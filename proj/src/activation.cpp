#include "mlpinn/activation.hpp"

#include <cmath>
#include <stdexcept>

namespace mlpinn {

Activation activation_from_string(const std::string& s) {
    if (s == "sin2pi") return Activation::kSin2pi;
    if (s == "sin") return Activation::kSin;
    if (s == "tanh") return Activation::kTanh;
    if (s == "swish") return Activation::kSwish;
    if (s == "linear") return Activation::kLinear;
    throw std::invalid_argument("unknown activation: " + s);
}

std::string to_string(Activation a) {
    switch (a) {
        case Activation::kSin2pi: return "sin2pi";
        case Activation::kSin: return "sin";
        case Activation::kTanh: return "tanh";
        case Activation::kSwish: return "swish";
        case Activation::kLinear: return "linear";
    }
    return "?";
}

ActDerivs act_derivs(Activation a, double x) {
    switch (a) {
        case Activation::kSin2pi: {
            const double s = std::sin(kTwoPi * x), c = std::cos(kTwoPi * x);
            const double k = kTwoPi, k2 = k * k;
            return {s, k * c, -k2 * s, -k2 * k * c, k2 * k2 * s};
        }
        case Activation::kSin: {
            const double s = std::sin(x), c = std::cos(x);
            return {s, c, -s, -c, s};
        }
        case Activation::kTanh: {
            const double t = std::tanh(x);
            const double d = 1.0 - t * t;  // t' = d
            const double f2 = -2.0 * t * d;
            const double f3 = (6.0 * t * t - 2.0) * d;
            const double f4 = (16.0 * t - 24.0 * t * t * t) * d;
            return {t, d, f2, f3, f4};
        }
        case Activation::kSwish: {
            const double s = 1.0 / (1.0 + std::exp(-x));
            const double s1 = s * (1.0 - s);
            const double s2 = s1 * (1.0 - 2.0 * s);
            const double s3 = s2 * (1.0 - 2.0 * s) - 2.0 * s1 * s1;
            const double s4 = s3 * (1.0 - 2.0 * s) - 6.0 * s1 * s2;
            // d^n/dx^n [x*s(x)] = n*s^(n-1) + x*s^(n)
            return {x * s, s + x * s1, 2.0 * s1 + x * s2, 3.0 * s2 + x * s3,
                    4.0 * s3 + x * s4};
        }
        case Activation::kLinear:
            return {x, 1.0, 0.0, 0.0, 0.0};
    }
    throw std::logic_error("unreachable");
}

namespace {

// tanh^(k) expressed in t = tanh(g) with tape arithmetic.
Tape::Id tanh_deriv_node(Tape& t, Tape::Id g, int k) {
    const Tape::Id th = t.tanh(g);
    if (k == 0) return th;
    const Tape::Id one = t.constant(1.0);
    const Tape::Id d = t.sub(one, t.mul(th, th));
    if (k == 1) return d;
    if (k == 2) return t.mul(t.constant(-2.0), t.mul(th, d));
    // k == 3: (6 t^2 - 2) (1 - t^2)
    const Tape::Id poly = t.sub(t.mul(t.constant(6.0), t.mul(th, th)), t.constant(2.0));
    return t.mul(poly, d);
}

Tape::Id swish_deriv_node(Tape& t, Tape::Id g, int k) {
    const Tape::Id s = t.sigmoid(g);
    if (k == 0) return t.mul(g, s);
    const Tape::Id one = t.constant(1.0);
    const Tape::Id s1 = t.mul(s, t.sub(one, s));
    if (k == 1) return t.add(s, t.mul(g, s1));
    const Tape::Id om2s = t.sub(one, t.mul(t.constant(2.0), s));
    const Tape::Id s2 = t.mul(s1, om2s);
    if (k == 2) return t.add(t.mul(t.constant(2.0), s1), t.mul(g, s2));
    const Tape::Id s3 =
        t.sub(t.mul(s2, om2s), t.mul(t.constant(2.0), t.mul(s1, s1)));
    return t.add(t.mul(t.constant(3.0), s2), t.mul(g, s3));
}

}  // namespace

Tape::Id act_node(Tape& t, Activation a, Tape::Id g, int k) {
    if (k < 0 || k > 3) throw std::invalid_argument("act_node: derivative order 0..3");
    switch (a) {
        case Activation::kSin2pi: {
            const double k2pi = kTwoPi;
            const double scale = std::pow(k2pi, k);
            Tape::Id base;
            switch (k % 4) {
                case 0: base = t.sin(g, k2pi); break;
                case 1: base = t.cos(g, k2pi); break;
                case 2: base = t.neg(t.sin(g, k2pi)); break;
                default: base = t.neg(t.cos(g, k2pi)); break;
            }
            return k == 0 ? base : t.mul(t.constant(scale), base);
        }
        case Activation::kSin:
            switch (k % 4) {
                case 0: return t.sin(g);
                case 1: return t.cos(g);
                case 2: return t.neg(t.sin(g));
                default: return t.neg(t.cos(g));
            }
        case Activation::kTanh:
            return tanh_deriv_node(t, g, k);
        case Activation::kSwish:
            return swish_deriv_node(t, g, k);
        case Activation::kLinear:
            return k == 0 ? g : t.constant(k == 1 ? 1.0 : 0.0);
    }
    throw std::logic_error("unreachable");
}

}  // namespace mlpinn
