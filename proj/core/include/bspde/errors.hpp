#ifndef BSPDE_ERRORS_HPP
#define BSPDE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bspde {

/// No polynomial particular solution exists: the triangular solve for order
/// `n` hit the zero diagonal at degree n+1 with a nonzero required coefficient.
class ResonanceError : public std::runtime_error {
public:
    ResonanceError(int order, int degree)
        : std::runtime_error("resonance at order " + std::to_string(order) +
                             ": obstruction at degree " + std::to_string(degree)),
          order_(order), degree_(degree) {}

    int order() const { return order_; }
    int degree() const { return degree_; }

private:
    int order_;
    int degree_;
};

/// Initial profile f0 does not satisfy the order-0 constraint L_0[f0] = 0.
class InadmissibleInitialError : public std::runtime_error {
public:
    explicit InadmissibleInitialError(std::string residual)
        : std::runtime_error("inadmissible initial profile, L_0 residual: " + residual),
          residual_(std::move(residual)) {}

    const std::string& residual() const { return residual_; }

private:
    std::string residual_;
};

/// A bivariate polynomial with a z-degree-0 monomial was divided by z.
class DivisionByZError : public std::runtime_error {
public:
    DivisionByZError() : std::runtime_error("division by z of a term with z-degree 0") {}
};

/// The evolution form of the PDE was evaluated at z <= 0, where it is singular.
class SingularTimeError : public std::runtime_error {
public:
    explicit SingularTimeError(double z)
        : std::runtime_error("evolution form evaluated at singular z = " + std::to_string(z)) {}
};

/// The finite-difference march produced a non-finite value.
class InstabilityError : public std::runtime_error {
public:
    InstabilityError(int step, double z)
        : std::runtime_error("non-finite value at step " + std::to_string(step) +
                             " (z = " + std::to_string(z) + ")"),
          step_(step), z_(z) {}

    int step() const { return step_; }
    double z() const { return z_; }

private:
    int step_;
    double z_;
};

/// Malformed run configuration or input artifact.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bspde

#endif // BSPDE_ERRORS_HPP
