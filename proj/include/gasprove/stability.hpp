#ifndef GASPROVE_STABILITY_HPP
#define GASPROVE_STABILITY_HPP

#include <string>
#include <vector>

#include "gasprove/recurrence.hpp"
#include "gasprove/univariate.hpp"

namespace gasprove {

enum class LasOutcome { las, unstable, inconclusive };
std::string to_string(LasOutcome o);

struct LasVerdict {
    LasOutcome outcome;
    /// lambda^(k+1) - sum c_i lambda^(k-i), c_i = dR/dx_i at the equilibrium.
    UniPoly characteristic;
    std::vector<Rational> partials;
    /// One line per Schur-Cohn reduction step.
    std::vector<std::string> table;
};

/// True iff every complex root of p lies strictly inside the unit disk.
/// Rows of the reduction are appended to `table` when given.
bool schur_stable(const UniPoly& p, std::vector<std::string>* table = nullptr);

/// Monic polynomial whose roots are all products z_i z_j of roots of p.
UniPoly root_products(const UniPoly& p);

/// True iff p has a root of modulus > 1.
bool has_root_outside_unit_disk(const UniPoly& p);

LasVerdict las_check(const RecurrenceSpec& spec, const Equilibrium& eq);

} // namespace gasprove

#endif // GASPROVE_STABILITY_HPP
