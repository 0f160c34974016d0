#include "bfoqap/evaluate.hpp"

#include <stdexcept>

namespace bfoqap {

namespace {

void require_same_size(int instance_size, const Permutation& perm) {
    if (perm.size() != instance_size) {
        throw std::invalid_argument("evaluate: permutation size does not match instance");
    }
}

void require_swap_args(int n, int r, int s) {
    if (r < 0 || r >= n || s < 0 || s >= n) {
        throw std::invalid_argument("delta_swap: position out of range");
    }
    if (r == s) {
        throw std::invalid_argument("delta_swap: positions must differ");
    }
}

Cost evaluate_one(const SquareMatrix& flow, const SquareMatrix& distance,
                  const Permutation& phi) {
    const int n = flow.size();
    Cost total = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            total += flow(i, j) * distance(phi[i], phi[j]);
        }
    }
    return total;
}

}  // namespace

Cost evaluate(const QapInstance& instance, const Permutation& phi) {
    require_same_size(instance.size(), phi);
    return evaluate_one(instance.flow, instance.distance, phi);
}

ObjectiveVector evaluate_multi(const MqapInstance& instance, const Permutation& phi) {
    require_same_size(instance.size(), phi);
    ObjectiveVector values;
    values.reserve(instance.flows.size());
    for (const SquareMatrix& flow : instance.flows) {
        values.push_back(evaluate_one(flow, instance.distance, phi));
    }
    return values;
}

Cost delta_swap(const SquareMatrix& f, const SquareMatrix& d,
                const Permutation& p, int r, int s) {
    require_swap_args(f.size(), r, s);
    const int n = f.size();
    const int pr = p[r];
    const int ps = p[s];
    // Boundary terms: diagonal entries and the (r, s) cross pair.
    Cost delta = (f(r, r) - f(s, s)) * (d(ps, ps) - d(pr, pr)) +
                 (f(r, s) - f(s, r)) * (d(ps, pr) - d(pr, ps));
    for (int k = 0; k < n; ++k) {
        if (k == r || k == s) continue;
        const int pk = p[k];
        delta += (f(k, r) - f(k, s)) * (d(pk, ps) - d(pk, pr)) +
                 (f(r, k) - f(s, k)) * (d(ps, pk) - d(pr, pk));
    }
    return delta;
}

Cost delta_swap(const QapInstance& instance, const Permutation& p, int r, int s) {
    require_same_size(instance.size(), p);
    return delta_swap(instance.flow, instance.distance, p, r, s);
}

ObjectiveVector delta_swap_multi(const MqapInstance& instance, const Permutation& p,
                                 int r, int s) {
    require_same_size(instance.size(), p);
    ObjectiveVector deltas;
    deltas.reserve(instance.flows.size());
    for (const SquareMatrix& flow : instance.flows) {
        deltas.push_back(delta_swap(flow, instance.distance, p, r, s));
    }
    return deltas;
}

}  // namespace bfoqap
