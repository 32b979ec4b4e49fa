#pragma once

// The group algebra F_q G as dense coefficient vectors in canonical group
// order, with the convolution product.

#include <cstddef>
#include <span>
#include <vector>

#include "dcodes/ff.hpp"
#include "dcodes/group.hpp"
#include "dcodes/linalg.hpp"

namespace dcodes {

class AlgebraElem {
public:
    /// The zero element.
    AlgebraElem(Group group, PrimeField field);
    /// Coefficients in canonical order; throws std::invalid_argument on wrong length.
    AlgebraElem(Group group, PrimeField field, std::vector<Residue> coeffs);

    /// The basis element g (coefficient c).
    static AlgebraElem basis(const GroupElem& g, PrimeField field, std::int64_t c = 1);
    static AlgebraElem one(const Group& group, PrimeField field);
    /// c * 1.
    static AlgebraElem scalar(const Group& group, PrimeField field, std::int64_t c);

    const Group& group() const { return group_; }
    const PrimeField& field() const { return field_; }
    std::size_t size() const { return coeffs_.size(); }
    std::span<const Residue> coeffs() const { return coeffs_; }
    FieldElem coeff(const GroupElem& g) const { return {field_, coeffs_[g.index()]}; }
    Residue operator[](std::size_t index) const { return coeffs_[index]; }

    bool is_zero() const;

    AlgebraElem operator+(const AlgebraElem& o) const;
    AlgebraElem operator-(const AlgebraElem& o) const;
    AlgebraElem operator-() const;
    /// Convolution: (xy)_g = sum_h x_h y_{h^{-1} g}.
    AlgebraElem operator*(const AlgebraElem& o) const;
    AlgebraElem scaled(Residue c) const;

    bool operator==(const AlgebraElem& o) const = default;

private:
    void require_compatible(const AlgebraElem& o) const;

    Group group_;
    PrimeField field_;
    std::vector<Residue> coeffs_;
};

inline AlgebraElem operator*(std::int64_t c, const AlgebraElem& x) {
    return x.scaled(x.field().reduce(c));
}

inline AlgebraElem convolve(const AlgebraElem& x, const AlgebraElem& y) { return x * y; }

/// (1/|H|) * sum of the elements of H. Throws NotInvertible if q divides |H|.
AlgebraElem hat(const std::vector<GroupElem>& subgroup, const Group& group, PrimeField field);

bool is_idempotent(const AlgebraElem& x);
/// Commutes with both generators, which suffices by linearity.
bool is_central(const AlgebraElem& x);

std::size_t support_weight(const AlgebraElem& x);
std::size_t support_weight(std::span<const Residue> word);

/// The v with u v = v u = e and v = v e, for u in the corner e(FG)e.
/// Throws NotInvertible if no such v exists and std::invalid_argument if u is
/// not in the component or e is not idempotent.
AlgebraElem invert_in_component(const AlgebraElem& u, const AlgebraElem& e);

/// The matrix of y -> x y (left) or y -> y x (right) on coefficient vectors;
/// column k is the image of the k-th group element.
Matrix left_multiplication_matrix(const AlgebraElem& x);
Matrix right_multiplication_matrix(const AlgebraElem& x);

}  // namespace dcodes
