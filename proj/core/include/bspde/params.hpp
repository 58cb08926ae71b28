#ifndef BSPDE_PARAMS_HPP
#define BSPDE_PARAMS_HPP

#include "bspde/rational.hpp"

namespace bspde {

/// Model constants k1, k2 of the transformed Black-Scholes equation, exact.
struct ParamSet {
    Rational k1;
    Rational k2;

    bool operator==(const ParamSet& other) const = default;
};

} // namespace bspde

#endif // BSPDE_PARAMS_HPP
