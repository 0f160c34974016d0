#include "bfoqap/instance.hpp"

#include <stdexcept>
#include <utility>

namespace bfoqap {

namespace {

void require_entries_non_negative(const SquareMatrix& m, const char* label) {
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            if (m(i, j) < 0) {
                throw std::invalid_argument(std::string(label) + ": negative entry");
            }
        }
    }
}

}  // namespace

QapInstance::QapInstance(SquareMatrix flow_in, SquareMatrix distance_in)
    : flow(std::move(flow_in)), distance(std::move(distance_in)) {
    if (flow.size() < 2) {
        throw std::invalid_argument("QapInstance: size must be at least 2");
    }
    if (flow.size() != distance.size()) {
        throw std::invalid_argument("QapInstance: flow and distance sizes differ");
    }
    require_entries_non_negative(flow, "QapInstance flow");
    require_entries_non_negative(distance, "QapInstance distance");
}

MqapInstance::MqapInstance(std::vector<SquareMatrix> flows_in, SquareMatrix distance_in)
    : flows(std::move(flows_in)), distance(std::move(distance_in)) {
    if (distance.size() < 2) {
        throw std::invalid_argument("MqapInstance: size must be at least 2");
    }
    if (flows.size() < 2) {
        throw std::invalid_argument("MqapInstance: needs at least 2 flow matrices");
    }
    for (const SquareMatrix& f : flows) {
        if (f.size() != distance.size()) {
            throw std::invalid_argument("MqapInstance: flow and distance sizes differ");
        }
        require_entries_non_negative(f, "MqapInstance flow");
    }
    require_entries_non_negative(distance, "MqapInstance distance");
}

}  // namespace bfoqap
