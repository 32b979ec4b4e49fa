#include "dcodes/group.hpp"

#include <algorithm>
#include <sstream>

#include "dcodes/ff.hpp"

namespace dcodes {

namespace {

std::vector<std::size_t> divisors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

void sort_canonical(std::vector<GroupElem>& elems) {
    std::ranges::sort(elems, {}, &GroupElem::index);
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
}

}  // namespace

Group::Group(GroupKind kind, std::uint64_t p, unsigned m) : kind_(kind), p_(p), m_(m) {
    if (p < 3 || !is_prime(p)) {
        throw InadmissibleParameters("p = " + std::to_string(p) + " is not an odd prime");
    }
    if (m < 1) throw InadmissibleParameters("m must be at least 1");
    const std::uint64_t n = ipow(p, m);
    if (n > (1U << 20)) throw InadmissibleParameters("p^m too large");
    n_ = static_cast<std::size_t>(n);
}

GroupElem Group::identity() const { return {*this, 0, 0}; }
GroupElem Group::rotation() const { return {*this, 1 % n_, 0}; }
GroupElem Group::reflection() const { return {*this, 0, 1}; }

GroupElem Group::element(std::int64_t i, std::int64_t j) const {
    const auto n = static_cast<std::int64_t>(n_);
    std::int64_t ri = i % n;
    if (ri < 0) ri += n;
    std::int64_t rj = j % 2;
    if (rj < 0) rj += 2;
    return {*this, static_cast<std::size_t>(ri), static_cast<unsigned>(rj)};
}

GroupElem Group::at(std::size_t index) const {
    if (index >= order()) throw std::out_of_range("group index out of range");
    return {*this, index % n_, static_cast<unsigned>(index / n_)};
}

std::vector<GroupElem> Group::elements() const {
    std::vector<GroupElem> out;
    out.reserve(order());
    for (std::size_t k = 0; k < order(); ++k) out.push_back(at(k));
    return out;
}

GroupElem Group::mul(const GroupElem& g, const GroupElem& h) const {
    if (!(g.group_ == *this) || !(h.group_ == *this)) throw MismatchError("group mismatch in mul");
    // Dihedral: (a^i b^j)(a^k b^l) = a^{i + (-1)^j k} b^{j+l}, since b a^k = a^{-k} b.
    std::size_t i = g.i_;
    if (kind_ == GroupKind::dihedral && g.j_ == 1) {
        i = (i + n_ - h.i_) % n_;
    } else {
        i = (i + h.i_) % n_;
    }
    return {*this, i, (g.j_ + h.j_) % 2};
}

GroupElem Group::inverse(const GroupElem& g) const {
    if (!(g.group_ == *this)) throw MismatchError("group mismatch in inverse");
    if (kind_ == GroupKind::dihedral && g.j_ == 1) return g;  // reflections are involutions
    return {*this, (n_ - g.i_) % n_, g.j_};
}

std::vector<GroupElem> Group::subgroup_H(unsigned j) const {
    if (j > m_) throw std::out_of_range("subgroup index j out of range");
    const std::size_t step = static_cast<std::size_t>(ipow(p_, j));
    std::vector<GroupElem> out;
    for (std::size_t i = 0; i < n_; i += step) out.push_back({*this, i, 0});
    return out;
}

std::vector<GroupElem> Group::subgroup_Hstar(unsigned j) const {
    std::vector<GroupElem> out = subgroup_H(j);
    const std::size_t half = out.size();
    for (std::size_t k = 0; k < half; ++k) out.push_back(mul(reflection(), out[k]));
    sort_canonical(out);
    return out;
}

std::ostream& operator<<(std::ostream& os, const GroupElem& g) {
    const bool dihedral = g.group().kind() == GroupKind::dihedral;
    if (g.rot() == 0 && g.flip() == 0) return os << "1";
    if (g.rot() != 0) os << (dihedral ? "a" : "a~") << "^" << g.rot();
    if (g.flip() != 0) os << (dihedral ? "b" : "t");
    return os;
}

bool Subgroup::contains(const GroupElem& g) const {
    return std::ranges::find(elements, g) != elements.end();
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
    return std::ranges::all_of(elements, [&](const GroupElem& g) { return other.contains(g); });
}

std::vector<Subgroup> all_subgroups(const Group& g) {
    const std::size_t n = g.rotation_order();
    const auto ds = divisors(n);
    std::vector<Subgroup> out;

    auto rotations = [&](std::size_t d) {
        std::vector<GroupElem> elems;
        for (std::size_t i = 0; i < n; i += d) elems.push_back(g.element(static_cast<std::int64_t>(i), 0));
        return elems;
    };
    auto name_rot = [&](std::size_t d) {
        std::ostringstream s;
        s << "<" << (g.kind() == GroupKind::dihedral ? "a" : "a~");
        if (d != 1) s << "^" << d;
        s << ">";
        return s.str();
    };

    for (std::size_t d : ds) out.push_back({name_rot(d), rotations(d)});

    for (std::size_t d : ds) {
        const std::size_t shifts = g.kind() == GroupKind::dihedral ? d : 1;
        for (std::size_t r = 0; r < shifts; ++r) {
            auto elems = rotations(d);
            const GroupElem refl = g.element(static_cast<std::int64_t>(r), 1);
            const std::size_t half = elems.size();
            for (std::size_t k = 0; k < half; ++k) elems.push_back(g.mul(elems[k], refl));
            sort_canonical(elems);
            std::ostringstream name;
            std::string base = name_rot(d);
            name << base.substr(0, base.size() - 1) << ", " << refl << ">";
            out.push_back({name.str(), std::move(elems)});
        }
    }
    return out;
}

bool is_subgroup(const Group& g, const std::vector<GroupElem>& elems) {
    if (elems.empty()) return false;
    Subgroup s{"", elems};
    for (const auto& x : elems) {
        if (!s.contains(g.inverse(x))) return false;
        for (const auto& y : elems) {
            if (!s.contains(g.mul(x, y))) return false;
        }
    }
    return true;
}

std::vector<GroupElem> left_transversal(const Group& g, const std::vector<GroupElem>& subgroup) {
    std::vector<bool> covered(g.order(), false);
    std::vector<GroupElem> reps;
    for (std::size_t k = 0; k < g.order(); ++k) {
        if (covered[k]) continue;
        const GroupElem r = g.at(k);
        reps.push_back(r);
        for (const auto& h : subgroup) covered[g.mul(r, h).index()] = true;
    }
    return reps;
}

GroupElem gamma(const GroupElem& g, const Group& target) {
    const Group& src = g.group();
    if (src.kind() != GroupKind::dihedral) throw MismatchError("gamma expects a dihedral element");
    if (target.kind() != GroupKind::abelian || target.p() != src.p() || target.m() != src.m()) {
        throw MismatchError("gamma target must be C_{p^m} x C_2 with matching (p, m)");
    }
    return target.element(static_cast<std::int64_t>(g.rot()), g.flip());
}

}  // namespace dcodes
