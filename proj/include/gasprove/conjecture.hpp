#ifndef GASPROVE_CONJECTURE_HPP
#define GASPROVE_CONJECTURE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gasprove/recurrence.hpp"

namespace gasprove {

/// Mesh {eps, 2 eps, ..., N eps}^n searched by multi-start descent.
struct MeshParams {
    Rational eps{1, 10};
    unsigned n = 100;
    unsigned restarts = 200;
    unsigned max_k = 8;
    std::uint64_t seed = 0x5eed;
};

struct MeshPoint {
    /// Mesh indices in 1..N; the point is eps * index.
    std::vector<unsigned> index;
    std::vector<Rational> point;
    Rational value;
};

/// Distinct local minima reached by steepest descent on the mesh graph
/// (neighbours differ by one step in one coordinate), sorted by value.
std::vector<MeshPoint> mesh_minimize(const MultiPoly& p, const MeshParams& params);

struct KTrial {
    unsigned k;
    /// Smallest minimum found; empty when P is identically zero.
    std::optional<MeshPoint> best;
};

struct Conjecture {
    std::optional<unsigned> k;
    std::vector<KTrial> trials;
};

/// First K in [first_k, params.max_k] whose found minima are all >= 0.
/// An identically zero P never qualifies.
Conjecture conjecture_k(const RecurrenceSpec& spec, const Equilibrium& eq, const MeshParams& params,
                        unsigned first_k = 1);

} // namespace gasprove

#endif // GASPROVE_CONJECTURE_HPP
