#pragma once

#include <Eigen/Core>
#include <functional>
#include <utility>
#include <vector>

#include "duet/errors.hpp"

namespace duet {

template <class Scalar>
using MatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Reverse-mode tape. Nodes are appended in forward order, so walking the
// tape backwards is a valid topological order and visits each op once.
// Gradients are materialized lazily and only for nodes that require them.
template <class Scalar>
class GraphT {
public:
    using Mat = MatrixT<Scalar>;
    using BackwardFn = std::function<void(GraphT&)>;

    struct Node {
        Mat value;
        Mat grad; // empty until first accumulation
        bool requires_grad = false;
        BackwardFn backward; // empty for leaves and grad-free ops
    };

    int add_leaf(Mat value, bool requires_grad) {
        Node n;
        n.value = std::move(value);
        n.requires_grad = requires_grad;
        nodes_.push_back(std::move(n));
        return static_cast<int>(nodes_.size()) - 1;
    }

    int add_op(Mat value, bool requires_grad, BackwardFn backward) {
        Node n;
        n.value = std::move(value);
        n.requires_grad = requires_grad;
        if (requires_grad) n.backward = std::move(backward);
        nodes_.push_back(std::move(n));
        return static_cast<int>(nodes_.size()) - 1;
    }

    const Mat& value(int id) const { return nodes_[static_cast<size_t>(id)].value; }
    bool requires_grad(int id) const { return nodes_[static_cast<size_t>(id)].requires_grad; }

    bool has_grad(int id) const { return nodes_[static_cast<size_t>(id)].grad.size() > 0; }

    const Mat& grad(int id) const {
        const Node& n = nodes_[static_cast<size_t>(id)];
        if (n.grad.size() == 0) throw ContractError("gradient not materialized for node");
        return n.grad;
    }

    // Accumulates into the node's gradient, allocating on first touch.
    void accumulate_grad(int id, const Mat& g) {
        Node& n = nodes_[static_cast<size_t>(id)];
        if (!n.requires_grad) return;
        if (n.grad.size() == 0)
            n.grad = g;
        else
            n.grad += g;
    }

    // Reverse sweep from a scalar loss node.
    void backward(int loss_id) {
        Node& loss = nodes_[static_cast<size_t>(loss_id)];
        if (loss.value.rows() != 1 || loss.value.cols() != 1)
            throw ContractError("backward requires a scalar (1x1) loss");
        if (!loss.requires_grad)
            throw ContractError("loss does not depend on any trainable tensor");
        loss.grad = Mat::Ones(1, 1);
        for (int i = loss_id; i >= 0; --i) {
            Node& n = nodes_[static_cast<size_t>(i)];
            if (n.requires_grad && n.backward && n.grad.size() > 0) n.backward(*this);
        }
    }

    size_t size() const { return nodes_.size(); }

private:
    std::vector<Node> nodes_;
};

// Lightweight handle into a graph; free functions in ops.hpp build the tape.
template <class Scalar>
struct ValueT {
    GraphT<Scalar>* graph = nullptr;
    int id = -1;

    ValueT() = default;
    ValueT(GraphT<Scalar>& g, int node_id) : graph(&g), id(node_id) {}

    const MatrixT<Scalar>& value() const { return graph->value(id); }
    const MatrixT<Scalar>& grad() const { return graph->grad(id); }
    bool has_grad() const { return graph->has_grad(id); }
    bool requires_grad() const { return graph->requires_grad(id); }
    Eigen::Index rows() const { return value().rows(); }
    Eigen::Index cols() const { return value().cols(); }
    bool valid() const { return graph != nullptr && id >= 0; }
};

template <class Scalar>
ValueT<Scalar> constant(GraphT<Scalar>& g, MatrixT<Scalar> m) {
    return ValueT<Scalar>(g, g.add_leaf(std::move(m), false));
}

template <class Scalar>
ValueT<Scalar> parameter(GraphT<Scalar>& g, MatrixT<Scalar> m) {
    return ValueT<Scalar>(g, g.add_leaf(std::move(m), true));
}

using Graph = GraphT<double>;
using Value = ValueT<double>;
using Matrix = MatrixT<double>;
using Vector = Eigen::Matrix<double, Eigen::Dynamic, 1>;

} // namespace duet
