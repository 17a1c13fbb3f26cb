#pragma once

#include "carrylab/error.hpp"
#include "carrylab/ring.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace testutil {

inline std::vector<carrylab::Int> ints(std::initializer_list<long long> xs) {
    return {xs.begin(), xs.end()};
}

inline carrylab::DigitalSet mod_set(long long q, long long m, std::initializer_list<long long> xs) {
    return carrylab::DigitalSet::validate(ints(xs), carrylab::Domain::modular(q), m);
}

inline carrylab::DigitalSet z_set(long long m, std::initializer_list<long long> xs) {
    return carrylab::DigitalSet::validate(ints(xs), carrylab::Domain::integers(), m);
}

template <typename F>
std::optional<carrylab::Errc> thrown_errc(F&& f) {
    try {
        f();
    } catch (const carrylab::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace testutil
