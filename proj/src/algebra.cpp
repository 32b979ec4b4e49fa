#include "dcodes/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcodes {

namespace {

// Canonical index of (a^i b^j)(a^k b^l) without materializing GroupElem values.
inline std::size_t product_index(const Group& g, std::size_t x, std::size_t y) {
    const std::size_t n = g.rotation_order();
    const std::size_t i = x % n, j = x / n;
    const std::size_t k = y % n, l = y / n;
    const std::size_t rot =
        (g.kind() == GroupKind::dihedral && j == 1) ? (i + n - k) % n : (i + k) % n;
    return rot + ((j + l) % 2) * n;
}

}  // namespace

AlgebraElem::AlgebraElem(Group group, PrimeField field)
    : group_(group), field_(field), coeffs_(group.order(), 0) {}

AlgebraElem::AlgebraElem(Group group, PrimeField field, std::vector<Residue> coeffs)
    : group_(group), field_(field), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != group_.order()) {
        throw std::invalid_argument("coefficient vector length " + std::to_string(coeffs_.size()) +
                                    " != |G| = " + std::to_string(group_.order()));
    }
    for (Residue& c : coeffs_) c %= field_.modulus();
}

AlgebraElem AlgebraElem::basis(const GroupElem& g, PrimeField field, std::int64_t c) {
    AlgebraElem x(g.group(), field);
    x.coeffs_[g.index()] = field.reduce(c);
    return x;
}

AlgebraElem AlgebraElem::one(const Group& group, PrimeField field) {
    return basis(group.identity(), field);
}

AlgebraElem AlgebraElem::scalar(const Group& group, PrimeField field, std::int64_t c) {
    return basis(group.identity(), field, c);
}

bool AlgebraElem::is_zero() const {
    return std::ranges::all_of(coeffs_, [](Residue c) { return c == 0; });
}

void AlgebraElem::require_compatible(const AlgebraElem& o) const {
    if (!(group_ == o.group_)) throw MismatchError("algebra elements over different groups");
    if (!(field_ == o.field_)) throw MismatchError("algebra elements over different fields");
}

AlgebraElem AlgebraElem::operator+(const AlgebraElem& o) const {
    require_compatible(o);
    AlgebraElem r = *this;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = field_.add(r.coeffs_[k], o.coeffs_[k]);
    return r;
}

AlgebraElem AlgebraElem::operator-(const AlgebraElem& o) const {
    require_compatible(o);
    AlgebraElem r = *this;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = field_.sub(r.coeffs_[k], o.coeffs_[k]);
    return r;
}

AlgebraElem AlgebraElem::operator-() const {
    AlgebraElem r = *this;
    for (Residue& c : r.coeffs_) c = field_.neg(c);
    return r;
}

AlgebraElem AlgebraElem::operator*(const AlgebraElem& o) const {
    require_compatible(o);
    AlgebraElem r(group_, field_);
    const std::size_t n = coeffs_.size();
    for (std::size_t x = 0; x < n; ++x) {
        if (coeffs_[x] == 0) continue;
        for (std::size_t y = 0; y < n; ++y) {
            if (o.coeffs_[y] == 0) continue;
            Residue& dst = r.coeffs_[product_index(group_, x, y)];
            dst = field_.add(dst, field_.mul(coeffs_[x], o.coeffs_[y]));
        }
    }
    return r;
}

AlgebraElem AlgebraElem::scaled(Residue c) const {
    AlgebraElem r = *this;
    for (Residue& v : r.coeffs_) v = field_.mul(v, c);
    return r;
}

AlgebraElem hat(const std::vector<GroupElem>& subgroup, const Group& group, PrimeField field) {
    if (subgroup.empty()) throw std::invalid_argument("hat of an empty set");
    const Residue size_mod = field.reduce(static_cast<std::int64_t>(subgroup.size()));
    if (size_mod == 0) {
        throw NotInvertible("|H| = " + std::to_string(subgroup.size()) + " is zero in F_" +
                            std::to_string(field.modulus()));
    }
    const Residue w = field.inv(size_mod);
    AlgebraElem x(group, field);
    AlgebraElem acc = x;
    for (const auto& h : subgroup) acc = acc + AlgebraElem::basis(h, field, w);
    return acc;
}

bool is_idempotent(const AlgebraElem& x) { return x * x == x; }

bool is_central(const AlgebraElem& x) {
    const Group& g = x.group();
    for (const GroupElem& gen : {g.rotation(), g.reflection()}) {
        const AlgebraElem s = AlgebraElem::basis(gen, x.field());
        if (!(s * x == x * s)) return false;
    }
    return true;
}

std::size_t support_weight(std::span<const Residue> word) {
    return static_cast<std::size_t>(std::ranges::count_if(word, [](Residue c) { return c != 0; }));
}

std::size_t support_weight(const AlgebraElem& x) { return support_weight(x.coeffs()); }

Matrix left_multiplication_matrix(const AlgebraElem& x) {
    const std::size_t n = x.size();
    Matrix m(x.field(), n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const AlgebraElem image = x * AlgebraElem::basis(x.group().at(k), x.field());
        for (std::size_t r = 0; r < n; ++r) m.at(r, k) = image[r];
    }
    return m;
}

Matrix right_multiplication_matrix(const AlgebraElem& x) {
    const std::size_t n = x.size();
    Matrix m(x.field(), n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const AlgebraElem image = AlgebraElem::basis(x.group().at(k), x.field()) * x;
        for (std::size_t r = 0; r < n; ++r) m.at(r, k) = image[r];
    }
    return m;
}

AlgebraElem invert_in_component(const AlgebraElem& u, const AlgebraElem& e) {
    if (!is_idempotent(e)) throw std::invalid_argument("invert_in_component: e is not idempotent");
    if (!(u * e == u) || !(e * u == u)) {
        throw std::invalid_argument("invert_in_component: u does not lie in the component of e");
    }
    const auto sol = solve(left_multiplication_matrix(u), e.coeffs());
    if (!sol) throw NotInvertible("not invertible in component");
    // Any solution of u v = e projects to the unique one inside e(FG)e.
    const AlgebraElem v = e * AlgebraElem(u.group(), u.field(), *sol) * e;
    if (!(u * v == e) || !(v * u == e)) throw NotInvertible("not invertible in component");
    return v;
}

}  // namespace dcodes
