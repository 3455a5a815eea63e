#ifndef GASPROVE_RECURRENCE_HPP
#define GASPROVE_RECURRENCE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gasprove/ratfun.hpp"

namespace gasprove {

/// Whether 0 belongs to the state interval: [0, inf) or (0, inf).
enum class Domain { closed, open };

std::string to_string(Domain d);

/// Input outside what the prover supports (negative coefficients, ...).
class UnsupportedInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EquilibriumError : public std::runtime_error {
public:
    enum class Kind { no_root, not_unique, irrational };
    EquilibriumError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// x_{n+1} = R(x_n, x_{n-1}, ..., x_{n-k}); variable x<i> stands for x_{n-i}.
struct RecurrenceSpec {
    std::size_t order;
    RatFun rhs;
    Domain domain;
    std::string source;
};

struct Equilibrium {
    Rational value;
    std::vector<Rational> vector;
    /// Interval on which the equilibrium is unique. Narrowed to open when
    /// 0 is a second fixed point of a closed-domain recurrence.
    Domain domain;
};

/// Q(x0, ..., xk) = (R(x0..xk), x0, ..., x_{k-1}).
struct VectorMap {
    std::vector<RatFun> components;
};

/// Parses R. Coefficients of numerator and denominator must be >= 0.
/// Throws ParseError or UnsupportedInput.
RecurrenceSpec parse_rde(const std::string& text, const std::map<std::string, Rational>& params = {});

Equilibrium find_equilibrium(const RecurrenceSpec& spec);

VectorMap vector_map(const RecurrenceSpec& spec);

/// Components of Q^K, each with an all-positive-coefficient denominator.
std::vector<RatFun> q_power(const RecurrenceSpec& spec, unsigned k);

/// numerator(|X - Xbar|^2 - |Q^K(X) - Xbar|^2), cleared by a common
/// denominator that is positive on the domain and scaled by a positive
/// constant to a primitive integer polynomial.
MultiPoly build_contraction_poly(const RecurrenceSpec& spec, const Equilibrium& eq, unsigned k);

/// Iterates R on an exact rational state (newest first) K times.
std::vector<Rational> iterate_map(const RecurrenceSpec& spec, std::vector<Rational> state, unsigned k);

} // namespace gasprove

#endif // GASPROVE_RECURRENCE_HPP
