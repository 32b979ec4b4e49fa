#pragma once

// Idempotents of F_q D for D dihedral of order 2p^m under the standing
// hypothesis that q generates the units modulo p^m.

#include <array>
#include <vector>

#include "dcodes/algebra.hpp"

namespace dcodes {

/// The primitive central idempotents of F_q D.
struct CentralCatalog {
    Group group;
    PrimeField field;
    AlgebraElem e0;                    // hat(<a>)
    std::vector<AlgebraElem> ej;       // ej[j - 1] = hat(H_j) - hat(H_{j-1}), 1 <= j <= m
    AlgebraElem e11_0;                 // (1 + b)/2 * e0
    AlgebraElem e22_0;                 // (1 - b)/2 * e0

    const AlgebraElem& e(unsigned j) const;
    /// e11_0, e22_0, e_1, ..., e_m.
    std::vector<AlgebraElem> members() const;
};

/// Matrix units of the simple component (F_q D) e_j.
struct MatrixUnits {
    unsigned j;
    AlgebraElem component;             // e_j
    AlgebraElem e11, e12, e21, e22;

    /// e_{rc} for r, c in {1, 2}.
    const AlgebraElem& unit(int r, int c) const;
};

struct NonCentralGenerators {
    AlgebraElem f;          // e11 - e12
    AlgebraElem alpha;      // e11 + e12 + e22
    AlgebraElem alpha_inv;  // e11 - e12 + e22
};

/// (1 + b)/2 and (1 - b)/2.
AlgebraElem plus_projector(const Group& g, PrimeField field);
AlgebraElem minus_projector(const Group& g, PrimeField field);

/// Throws InadmissibleParameters unless check_admissible(q, p, m), and
/// InternalCheckFailed if the built set is not a complete orthogonal system
/// of central idempotents.
CentralCatalog central_idempotents(PrimeField field, const Group& dihedral);

/// Builds e11, e12, e21, e22 for component j and checks all sixteen products
/// e_{ik} e_{hl} = delta_{kh} e_{il} and e11 + e22 = e_j; throws InternalCheckFailed otherwise.
MatrixUnits matrix_units(const CentralCatalog& catalog, unsigned j);

/// f, alpha and alpha^{-1}; verifies f^2 = f, f non-central, alpha alpha^{-1} = e_j,
/// alpha e11 alpha^{-1} = f and that f matches closed_form_f.
NonCentralGenerators noncentral_generator(const MatrixUnits& units);

/// (1/4) [(2 - a + a^{-1}) + (2 + a - a^{-1}) b] e, built without matrix units.
AlgebraElem closed_form_f(const AlgebraElem& e);

}  // namespace dcodes
