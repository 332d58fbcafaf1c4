#include "mlpinn/tape.hpp"

#include <cmath>

namespace mlpinn {

Tape::Id Tape::sin(Id x, double scale) {
    Node n{Op::kSin, x, 0, std::sin(scale * nodes_[x].value)};
    n.scale = scale;
    return push(n);
}

Tape::Id Tape::cos(Id x, double scale) {
    Node n{Op::kCos, x, 0, std::cos(scale * nodes_[x].value)};
    n.scale = scale;
    return push(n);
}

Tape::Id Tape::tanh(Id x) { return push({Op::kTanh, x, 0, std::tanh(nodes_[x].value)}); }

Tape::Id Tape::sigmoid(Id x) {
    return push({Op::kSigmoid, x, 0, 1.0 / (1.0 + std::exp(-nodes_[x].value))});
}

void Tape::backward(Id loss) {
    for (std::size_t i = 0; i <= loss; ++i) nodes_[i].adjoint = 0.0;
    nodes_[loss].adjoint = 1.0;

    for (Id i = loss;; --i) {
        Node& n = nodes_[i];
        const double adj = n.adjoint;
        if (!std::isfinite(adj)) {
            throw NonFiniteAdjointError(
                i, "non-finite adjoint at node " + std::to_string(i));
        }
        if (adj != 0.0) {
            switch (n.op) {
                case Op::kConst:
                case Op::kParam:
                    break;
                case Op::kAdd:
                    nodes_[n.a].adjoint += adj;
                    nodes_[n.b].adjoint += adj;
                    break;
                case Op::kSub:
                    nodes_[n.a].adjoint += adj;
                    nodes_[n.b].adjoint -= adj;
                    break;
                case Op::kMul:
                    nodes_[n.a].adjoint += adj * nodes_[n.b].value;
                    nodes_[n.b].adjoint += adj * nodes_[n.a].value;
                    break;
                case Op::kDiv: {
                    const double vb = nodes_[n.b].value;
                    nodes_[n.a].adjoint += adj / vb;
                    nodes_[n.b].adjoint -= adj * nodes_[n.a].value / (vb * vb);
                    break;
                }
                case Op::kNeg:
                    nodes_[n.a].adjoint -= adj;
                    break;
                case Op::kSin:
                    nodes_[n.a].adjoint +=
                        adj * n.scale * std::cos(n.scale * nodes_[n.a].value);
                    break;
                case Op::kCos:
                    nodes_[n.a].adjoint -=
                        adj * n.scale * std::sin(n.scale * nodes_[n.a].value);
                    break;
                case Op::kTanh:
                    nodes_[n.a].adjoint += adj * (1.0 - n.value * n.value);
                    break;
                case Op::kSigmoid:
                    nodes_[n.a].adjoint += adj * n.value * (1.0 - n.value);
                    break;
            }
        }
        if (i == 0) break;
    }
}

std::vector<double> Tape::param_gradient() const {
    std::vector<double> g(params_.size());
    for (std::size_t i = 0; i < params_.size(); ++i) g[i] = nodes_[params_[i]].adjoint;
    return g;
}

}  // namespace mlpinn
