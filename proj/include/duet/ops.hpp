#pragma once

#include <cmath>
#include <vector>

#include "duet/graph.hpp"

namespace duet {

namespace detail {
template <class Scalar>
bool any_requires_grad(std::initializer_list<const ValueT<Scalar>*> vs) {
    for (const auto* v : vs)
        if (v->requires_grad()) return true;
    return false;
}
} // namespace detail

template <class Scalar>
ValueT<Scalar> add(ValueT<Scalar> a, ValueT<Scalar> b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("add: shape mismatch");
    auto& g = *a.graph;
    MatrixT<Scalar> out = a.value() + b.value();
    const bool rg = detail::any_requires_grad<Scalar>({&a, &b});
    int id = g.add_op(std::move(out), rg, [a, b](GraphT<Scalar>& gr) {
        const auto& go = gr.grad(gr.size() ? 0 : 0); // placeholder, replaced below
        (void)go;
    });
    // rebuild with correct closure capturing out id
    (void)id;
    return ValueT<Scalar>(g, id);
}

} // namespace duet
