#pragma once

#include <string>

#include "mlpinn/tape.hpp"

namespace mlpinn {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

enum class Activation {
    kSin2pi,  // x -> sin(2*pi*x)
    kSin,     // x -> sin(x)
    kTanh,
    kSwish,   // x -> x * sigmoid(x)
    kLinear,
};

Activation activation_from_string(const std::string& s);
std::string to_string(Activation a);

/// Value and derivatives through fourth order at one point. The batched
/// kernel needs f''''; everything else stops at f'''.
struct ActDerivs {
    double f0, f1, f2, f3, f4;
};
ActDerivs act_derivs(Activation a, double x);

/// Graph node computing f^(k)(g), k in 0..3, assembled from tape
/// primitives so a later backward() differentiates it exactly.
Tape::Id act_node(Tape& t, Activation a, Tape::Id g, int k);

}  // namespace mlpinn
