#pragma once

#include <cstddef>
#include <vector>

#include "arcinv/arcs.hpp"
#include "arcinv/polynomial.hpp"
#include "arcinv/rational.hpp"

namespace arcinv {

/// Generator g*W^w of a Rees algebra.
struct WeightedGenerator {
    Polynomial g;
    long weight = 1;
};

/// Rees algebra R[g_1 W^{w_1}, ..., g_r W^{w_r}] given by finitely many
/// weighted generators on a common variable list.
class ReesAlgebra {
public:
    explicit ReesAlgebra(std::vector<WeightedGenerator> generators);

    const std::vector<WeightedGenerator>& generators() const { return gens_; }
    const std::vector<std::string>& variables() const { return gens_.front().g.variables(); }
    std::size_t size() const { return gens_.size(); }

private:
    std::vector<WeightedGenerator> gens_;
};

/// Differential saturation of (f, b) for a hypersurface: the generators
/// D^alpha f at weight b - |alpha| for |alpha| < b.
struct DiffPresentation {
    Hypersurface base;
    ReesAlgebra algebra;
};

/// Requires multiplicity b >= 2. Generators are ordered by |alpha| and
/// deduplicated up to scalar multiples at equal weight.
DiffPresentation diff_saturate(const Hypersurface& X);

/// Hironaka order at the origin: min over generators of ord(g)/w.
/// Throws NotInSingularLocus if some generator has ord(g) < w.
Rational ord_at_center(const ReesAlgebra& G);

/// Order of the image algebra along an arc: min over generators of
/// ord_t(g(arc))/w; infinite iff every generator pulls back to zero.
ExtRational ord_along_arc(const ReesAlgebra& G, const Arc& arc);

}  // namespace arcinv
