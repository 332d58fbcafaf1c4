#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlpinn {

/// Scalar computation-graph engine. Nodes are appended with their forward
/// values already evaluated, so node ids are a topological order by
/// construction. backward() runs one reverse-mode sweep and leaves the
/// adjoint of every node on the tape.
///
/// This is the serial reference path of the project; the batched kernel in
/// kernel.hpp is validated against it by the test suite.
class Tape {
public:
    using Id = std::uint32_t;

    enum class Op : std::uint8_t {
        kConst,
        kParam,
        kAdd,
        kSub,
        kMul,
        kDiv,
        kNeg,
        kSin,      // value = sin(scale * x)
        kCos,      // value = cos(scale * x)
        kTanh,
        kSigmoid,
    };

    struct Node {
        Op op;
        Id a = 0;
        Id b = 0;
        double value = 0.0;
        double adjoint = 0.0;
        double scale = 1.0;
    };

    Id constant(double v) { return push({Op::kConst, 0, 0, v}); }

    Id param(double v) {
        Id id = push({Op::kParam, 0, 0, v});
        params_.push_back(id);
        return id;
    }

    Id add(Id x, Id y) { return push({Op::kAdd, x, y, nodes_[x].value + nodes_[y].value}); }
    Id sub(Id x, Id y) { return push({Op::kSub, x, y, nodes_[x].value - nodes_[y].value}); }
    Id mul(Id x, Id y) { return push({Op::kMul, x, y, nodes_[x].value * nodes_[y].value}); }
    Id div(Id x, Id y) { return push({Op::kDiv, x, y, nodes_[x].value / nodes_[y].value}); }
    Id neg(Id x) { return push({Op::kNeg, x, 0, -nodes_[x].value}); }

    Id sin(Id x, double scale = 1.0);
    Id cos(Id x, double scale = 1.0);
    Id tanh(Id x);
    Id sigmoid(Id x);

    double value(Id id) const { return nodes_[id].value; }
    double adjoint(Id id) const { return nodes_[id].adjoint; }
    const Node& node(Id id) const { return nodes_[id]; }
    std::size_t size() const { return nodes_.size(); }
    const std::vector<Id>& params() const { return params_; }

    /// Reverse sweep seeded with d(loss)/d(loss) = 1. Throws
    /// NonFiniteAdjointError carrying the offending node id if any adjoint
    /// turns non-finite.
    void backward(Id loss);

    /// Adjoints of all parameter nodes in registration order; valid after
    /// backward().
    std::vector<double> param_gradient() const;

    void clear() {
        nodes_.clear();
        params_.clear();
    }

private:
    Id push(Node n) {
        nodes_.push_back(n);
        return static_cast<Id>(nodes_.size() - 1);
    }

    std::vector<Node> nodes_;
    std::vector<Id> params_;
};

class NonFiniteAdjointError : public std::runtime_error {
public:
    NonFiniteAdjointError(Tape::Id id, const std::string& msg)
        : std::runtime_error(msg), node_id(id) {}
    Tape::Id node_id;
};

}  // namespace mlpinn
