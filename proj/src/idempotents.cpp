#include "dcodes/idempotents.hpp"

#include <stdexcept>
#include <string>

namespace dcodes {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InternalCheckFailed(what);
}

}  // namespace

const AlgebraElem& CentralCatalog::e(unsigned j) const {
    if (j < 1 || j > ej.size()) throw std::out_of_range("component index j out of range");
    return ej[j - 1];
}

std::vector<AlgebraElem> CentralCatalog::members() const {
    std::vector<AlgebraElem> out{e11_0, e22_0};
    out.insert(out.end(), ej.begin(), ej.end());
    return out;
}

const AlgebraElem& MatrixUnits::unit(int r, int c) const {
    if (r == 1 && c == 1) return e11;
    if (r == 1 && c == 2) return e12;
    if (r == 2 && c == 1) return e21;
    if (r == 2 && c == 2) return e22;
    throw std::out_of_range("matrix unit indices must be 1 or 2");
}

AlgebraElem plus_projector(const Group& g, PrimeField field) {
    const Residue half = field.inv(2);
    return (AlgebraElem::one(g, field) + AlgebraElem::basis(g.reflection(), field)).scaled(half);
}

AlgebraElem minus_projector(const Group& g, PrimeField field) {
    const Residue half = field.inv(2);
    return (AlgebraElem::one(g, field) - AlgebraElem::basis(g.reflection(), field)).scaled(half);
}

CentralCatalog central_idempotents(PrimeField field, const Group& dihedral) {
    if (dihedral.kind() != GroupKind::dihedral) throw MismatchError("central_idempotents needs a dihedral group");
    if (!check_admissible(field.modulus(), dihedral.p(), dihedral.m())) {
        throw InadmissibleParameters("(q, p, m) = (" + std::to_string(field.modulus()) + ", " +
                                     std::to_string(dihedral.p()) + ", " + std::to_string(dihedral.m()) +
                                     ") is not admissible");
    }
    const AlgebraElem e0 = hat(dihedral.subgroup_H(0), dihedral, field);
    std::vector<AlgebraElem> ej;
    for (unsigned j = 1; j <= dihedral.m(); ++j) {
        ej.push_back(hat(dihedral.subgroup_H(j), dihedral, field) -
                     hat(dihedral.subgroup_H(j - 1), dihedral, field));
    }
    CentralCatalog cat{dihedral,
                       field,
                       e0,
                       std::move(ej),
                       plus_projector(dihedral, field) * e0,
                       minus_projector(dihedral, field) * e0};

    const auto ms = cat.members();
    AlgebraElem sum(dihedral, field);
    for (std::size_t x = 0; x < ms.size(); ++x) {
        require(is_idempotent(ms[x]), "catalog member " + std::to_string(x) + " is not idempotent");
        require(is_central(ms[x]), "catalog member " + std::to_string(x) + " is not central");
        require(!ms[x].is_zero(), "catalog member " + std::to_string(x) + " is zero");
        for (std::size_t y = 0; y < ms.size(); ++y) {
            if (x != y) require((ms[x] * ms[y]).is_zero(), "catalog members are not orthogonal");
        }
        sum = sum + ms[x];
    }
    require(sum == AlgebraElem::one(dihedral, field), "catalog does not sum to 1");
    return cat;
}

MatrixUnits matrix_units(const CentralCatalog& catalog, unsigned j) {
    const Group& g = catalog.group;
    const PrimeField& field = catalog.field;
    const AlgebraElem& e = catalog.e(j);
    const AlgebraElem plus = plus_projector(g, field);
    const AlgebraElem minus = minus_projector(g, field);
    const AlgebraElem a = AlgebraElem::basis(g.rotation(), field);
    const AlgebraElem a_inv = AlgebraElem::basis(g.rotation().inverse(), field);

    // (a - a^{-1}) e is a unit of the component; e21 uses the inverse of its square.
    const AlgebraElem u = (a - a_inv) * e;
    const AlgebraElem u_inv = invert_in_component(u, e);
    const AlgebraElem u_inv_sq = u_inv * u_inv;

    MatrixUnits mu{j,
                   e,
                   plus * e,
                   plus * a * minus * e,
                   (u_inv_sq * minus * a * plus * e).scaled(field.reduce(4)),
                   minus * e};

    require(mu.e11 + mu.e22 == e, "e11 + e22 != e_j");
    for (int i = 1; i <= 2; ++i) {
        for (int k = 1; k <= 2; ++k) {
            for (int h = 1; h <= 2; ++h) {
                for (int l = 1; l <= 2; ++l) {
                    const AlgebraElem prod = mu.unit(i, k) * mu.unit(h, l);
                    const AlgebraElem expected = k == h ? mu.unit(i, l) : AlgebraElem(g, field);
                    require(prod == expected, "matrix unit identity fails for e" + std::to_string(i) +
                                                  std::to_string(k) + " e" + std::to_string(h) +
                                                  std::to_string(l));
                }
            }
        }
    }
    return mu;
}

AlgebraElem closed_form_f(const AlgebraElem& e) {
    const Group& g = e.group();
    const PrimeField& field = e.field();
    const AlgebraElem one = AlgebraElem::one(g, field);
    const AlgebraElem a = AlgebraElem::basis(g.rotation(), field);
    const AlgebraElem a_inv = AlgebraElem::basis(g.rotation().inverse(), field);
    const AlgebraElem b = AlgebraElem::basis(g.reflection(), field);
    const AlgebraElem two = one.scaled(2);
    const AlgebraElem bracket = (two - a + a_inv) + (two + a - a_inv) * b;
    return (bracket * e).scaled(field.inv(4));
}

NonCentralGenerators noncentral_generator(const MatrixUnits& units) {
    NonCentralGenerators gen{units.e11 - units.e12, units.e11 + units.e12 + units.e22,
                             units.e11 - units.e12 + units.e22};
    require(is_idempotent(gen.f), "f is not idempotent");
    require(!is_central(gen.f), "f is central");
    require(gen.alpha * gen.alpha_inv == units.component, "alpha alpha^{-1} != e_j");
    require(gen.alpha_inv * gen.alpha == units.component, "alpha^{-1} alpha != e_j");
    require(gen.alpha * units.e11 * gen.alpha_inv == gen.f, "alpha e11 alpha^{-1} != e11 - e12");
    require(gen.f == closed_form_f(units.component), "f differs from its closed form");
    return gen;
}

}  // namespace dcodes
