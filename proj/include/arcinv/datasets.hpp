#pragma once

#include <string>
#include <vector>

#include "arcinv/arcs.hpp"
#include "arcinv/contact_resolution.hpp"
#include "arcinv/rees.hpp"

// Built-in surfaces, arcs and resolution data used by the verification
// suite and the tests.
namespace arcinv::datasets {

/// Toric surface x^2 y^3 - z^6 in A^3.
Hypersurface toric_surface();
/// Monomial parametrization (u, v) -> (u^3, v^2, u v) of the toric surface.
BinomialParametrization toric_parametrization();
/// Divisorial data of the blow-up of the origin of the toric surface, which
/// resolves the maximal ideal: generators x, y (weight 1) and z^6 (weight
/// 5); c = (2, 3); coordinate valuations 3a+3b, 2a+4b, 2a+3b.
ResolutionData toric_resolution();
/// The weighted presentation {x W, y W, z^6 W^5} of the maximal
/// multiplicity algebra of the toric surface, equal to the differential
/// one up to integral closure.
ReesAlgebra toric_user_presentation();
/// Parameter orders (p, q) realizing the multi-index (2p - q, q - p).
MultiIndex toric_multiindex(long p, long q);

/// Cusp x^2 - y^3 and its parametrization u -> (u^3, u^2).
Hypersurface cusp();
BinomialParametrization cusp_parametrization();

/// Node x y.
Hypersurface node();

/// A1 cone z^2 - x y and its parametrization (u, v) -> (u^2, v^2, u v).
Hypersurface cone();
BinomialParametrization cone_parametrization();

struct CorpusCase {
    std::string name;
    Hypersurface surface;
    Arc arc;
};

/// Fixed hypersurface/arc pairs with hand-checkable invariants.
std::vector<CorpusCase> persistance_corpus();

}  // namespace arcinv::datasets
