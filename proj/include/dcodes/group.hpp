#pragma once

// The dihedral group D = <a, b | a^{p^m} = b^2 = 1, bab = a^{-1}> of order
// 2p^m and its abelian counterpart C_{p^m} x C_2 = <a~> x <t>.
//
// Both groups use one coordinate convention: a^i b^j (or a~^i t^j) has
// canonical index i + j * p^m. Every algebra element, generator matrix and
// exported file is laid out in that order.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "dcodes/errors.hpp"

namespace dcodes {

enum class GroupKind { dihedral, abelian };

class GroupElem;

class Group {
public:
    /// Throws InadmissibleParameters unless p is an odd prime and m >= 1.
    Group(GroupKind kind, std::uint64_t p, unsigned m);

    static Group dihedral(std::uint64_t p, unsigned m) { return {GroupKind::dihedral, p, m}; }
    static Group abelian(std::uint64_t p, unsigned m) { return {GroupKind::abelian, p, m}; }

    GroupKind kind() const { return kind_; }
    std::uint64_t p() const { return p_; }
    unsigned m() const { return m_; }
    /// p^m, the order of the rotation subgroup <a>.
    std::size_t rotation_order() const { return n_; }
    std::size_t order() const { return 2 * n_; }

    GroupElem identity() const;
    /// a (or a~).
    GroupElem rotation() const;
    /// b (or t).
    GroupElem reflection() const;
    /// a^i b^j with i reduced mod p^m and j mod 2.
    GroupElem element(std::int64_t i, std::int64_t j) const;
    GroupElem at(std::size_t index) const;
    std::vector<GroupElem> elements() const;

    /// Throws MismatchError when either operand belongs to another group.
    GroupElem mul(const GroupElem& g, const GroupElem& h) const;
    GroupElem inverse(const GroupElem& g) const;

    /// H_j = <a^{p^j}>, 0 <= j <= m, in canonical order.
    std::vector<GroupElem> subgroup_H(unsigned j) const;
    /// H*_j = <b> H_j, in canonical order.
    std::vector<GroupElem> subgroup_Hstar(unsigned j) const;

    bool operator==(const Group&) const = default;

private:
    GroupKind kind_;
    std::uint64_t p_;
    unsigned m_;
    std::size_t n_;
};

class GroupElem {
public:
    std::size_t rot() const { return i_; }
    unsigned flip() const { return j_; }
    std::size_t index() const { return i_ + j_ * group_.rotation_order(); }
    const Group& group() const { return group_; }

    GroupElem operator*(const GroupElem& o) const { return group_.mul(*this, o); }
    GroupElem inverse() const { return group_.inverse(*this); }

    bool operator==(const GroupElem&) const = default;

private:
    friend class Group;
    GroupElem(Group g, std::size_t i, unsigned j) : group_(g), i_(i), j_(j) {}

    Group group_;
    std::size_t i_;
    unsigned j_;
};

std::ostream& operator<<(std::ostream& os, const GroupElem& g);

/// A subgroup with a printable generator description.
struct Subgroup {
    std::string name;
    std::vector<GroupElem> elements;  // canonical order

    std::size_t order() const { return elements.size(); }
    bool contains(const GroupElem& g) const;
    bool is_subset_of(const Subgroup& other) const;
};

/// Every subgroup, in a fixed order.
/// Dihedral: first <a^d> for each divisor d of p^m ascending, then <a^d, a^r b>
/// for d ascending and 0 <= r < d. Abelian: <a~^d> then <a~^d, t>, d ascending.
std::vector<Subgroup> all_subgroups(const Group& g);

/// Whether a set of elements is closed under multiplication and inverses.
bool is_subgroup(const Group& g, const std::vector<GroupElem>& elems);

/// Representatives r of the left cosets rK of K in G (first element of each coset
/// in canonical order, so the identity represents K itself).
std::vector<GroupElem> left_transversal(const Group& g, const std::vector<GroupElem>& subgroup);

/// The bijection a^i b^j -> a~^i t^j onto the abelian group with the same (p, m).
/// Throws MismatchError if target parameters differ or g is not dihedral.
GroupElem gamma(const GroupElem& g, const Group& target);

}  // namespace dcodes
