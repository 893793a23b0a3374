#pragma once

#include <cstdint>
#include <vector>

#include "gifzs/grey_map.hpp"
#include "gifzs/systems.hpp"

namespace gifzs {

/// A generalized iterated fuzzy function system: a contractive crisp system
/// paired with one admissible grey level map per map, on a shared
/// quantization lattice.
struct Gifzs {
    CrispGifs gifs;
    GreySystem greys;
    int levels;

    /// Validates the pairing and grey admissibility. `allow_zero_grey`
    /// tolerates individually degenerate (identically zero) grey maps, which
    /// the admissibility clauses do not exclude but the grey-map definition
    /// does; see the quarter-sum degenerate example.
    Gifzs(CrispGifs g, GreySystem r, int levels_, bool allow_zero_grey = false);

    int degree() const { return gifs.degree; }
    int map_count() const { return static_cast<int>(gifs.maps.size()); }
    const DomainBox& box() const { return gifs.box; }
    double lip_bound() const { return gifs.lip_bound(); }
};

struct FuzzyApply {
    FuzzyGrid grid;
    std::uint64_t clamped = 0;
};

/// Sup-push Zadeh extension of one map: every support tuple is sent to its
/// image cell, which accumulates the max of the tuple's min membership.
/// Exact on the grid (a cell's preimage is exactly the tuple set rounding
/// into it). Operands must be normal.
FuzzyApply zadeh_extend(const AffineContraction& f,
                        const std::vector<const FuzzyGrid*>& inputs);

/// GFHB operator, sup-push route: join over maps of rho_j applied to the
/// Zadeh image. Output is normal (admissibility clause d).
FuzzyApply gfhb_suppush(const Gifzs& z, const std::vector<const FuzzyGrid*>& inputs);

/// GFHB operator, level-set route: per level l the cut is the union over
/// maps (with l <= rho_j(1)) of the crisp images of the beta_j(l)-cuts; the
/// grid is rebuilt from the cut stack. Agrees with the sup-push route
/// exactly on the lattice -- the principal internal oracle.
FuzzyApply gfhb_levelset(const Gifzs& z, const std::vector<const FuzzyGrid*>& inputs);

/// Degree m+1 system whose maps ignore the extra coordinate; the GFHB value
/// on diagonal tuples -- and hence the attractor -- is unchanged.
Gifzs lift_degree(const Gifzs& z);

} // namespace gifzs
