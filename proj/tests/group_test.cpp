#include <gtest/gtest.h>

#include <set>

#include "dcodes/group.hpp"
#include "oracle.hpp"

using namespace dcodes;

namespace {

const Group D9 = Group::dihedral(3, 2);
const Group A9 = Group::abelian(3, 2);

std::vector<std::size_t> indices(const std::vector<GroupElem>& xs) {
    std::vector<std::size_t> out;
    for (const auto& x : xs) out.push_back(x.index());
    return out;
}

}  // namespace

TEST(Group, ConstructionValidatesParameters) {
    EXPECT_THROW(Group::dihedral(2, 1), InadmissibleParameters);
    EXPECT_THROW(Group::dihedral(9, 1), InadmissibleParameters);
    EXPECT_THROW(Group::dihedral(3, 0), InadmissibleParameters);
    EXPECT_EQ(D9.order(), 18u);
    EXPECT_EQ(D9.rotation_order(), 9u);
}

TEST(Group, CanonicalIndexing) {
    EXPECT_EQ(D9.element(2, 1).index(), 11u);
    EXPECT_EQ(D9.element(-1, 0).index(), 8u);
    for (std::size_t k = 0; k < D9.order(); ++k) EXPECT_EQ(D9.at(k).index(), k);
}

TEST(Group, MulExamples) {
    const GroupElem a = D9.rotation(), b = D9.reflection();
    EXPECT_EQ(b * a, D9.element(8, 1));
    EXPECT_EQ(D9.element(4, 1) * D9.identity(), D9.element(4, 1));
    EXPECT_EQ(D9.element(2, 1) * D9.element(3, 1), D9.element(8, 0));
}

TEST(Group, MulMatchesPermutationRealization) {
    for (std::size_t n : {3u, 9u, 5u, 25u}) {
        const Group g = Group::dihedral(n % 3 == 0 ? 3 : 5, n == 3 || n == 5 ? 1 : 2);
        const oracle::PermDihedral perm{n};
        for (std::size_t x = 0; x < g.order(); ++x)
            for (std::size_t y = 0; y < g.order(); ++y)
                ASSERT_EQ((g.at(x) * g.at(y)).index(), perm.product(x, y)) << n << ": " << x << " * " << y;
    }
}

TEST(Group, AssociativityExhaustive) {
    for (const Group& g : {D9, A9, Group::dihedral(5, 1), Group::dihedral(5, 2)}) {
        const auto el = g.elements();
        for (const auto& x : el)
            for (const auto& y : el)
                for (const auto& z : el) ASSERT_EQ((x * y) * z, x * (y * z));
    }
}

TEST(Group, Relations) {
    const GroupElem a = D9.rotation(), b = D9.reflection();
    GroupElem acc = D9.identity();
    for (int i = 0; i < 9; ++i) acc = acc * a;
    EXPECT_EQ(acc, D9.identity());
    EXPECT_EQ(b * b, D9.identity());
    EXPECT_EQ(b * a * b, a.inverse());
    for (int i = 0; i < 9; ++i) {
        EXPECT_EQ(b * D9.element(i, 0) * b, D9.element(-i, 0));
    }
}

TEST(Group, AbelianIsCommutative) {
    for (const auto& x : A9.elements())
        for (const auto& y : A9.elements()) ASSERT_EQ(x * y, y * x);
    EXPECT_EQ(A9.reflection() * A9.reflection(), A9.identity());
}

TEST(Group, InverseExamples) {
    EXPECT_EQ(D9.element(3, 0).inverse(), D9.element(6, 0));
    for (int i = 0; i < 9; ++i) EXPECT_EQ(D9.element(i, 1).inverse(), D9.element(i, 1));
    EXPECT_EQ(D9.identity().inverse(), D9.identity());
    for (const auto& g : D9.elements()) EXPECT_EQ(g * g.inverse(), D9.identity());
}

TEST(Group, MismatchThrows) {
    const Group d5 = Group::dihedral(5, 1);
    EXPECT_THROW(D9.rotation() * d5.rotation(), MismatchError);
    EXPECT_THROW(D9.rotation() * A9.rotation(), MismatchError);
}

TEST(Group, SubgroupH) {
    EXPECT_EQ(indices(D9.subgroup_H(2)), (std::vector<std::size_t>{0}));
    EXPECT_EQ(indices(D9.subgroup_H(1)), (std::vector<std::size_t>{0, 3, 6}));
    EXPECT_EQ(D9.subgroup_H(0).size(), 9u);
    EXPECT_THROW(D9.subgroup_H(3), std::out_of_range);
    for (unsigned j = 0; j <= 2; ++j) EXPECT_TRUE(is_subgroup(D9, D9.subgroup_H(j)));
}

TEST(Group, SubgroupHstar) {
    EXPECT_EQ(indices(D9.subgroup_Hstar(2)), (std::vector<std::size_t>{0, 9}));
    EXPECT_EQ(indices(D9.subgroup_Hstar(1)), (std::vector<std::size_t>{0, 3, 6, 9, 12, 15}));
    EXPECT_EQ(D9.subgroup_Hstar(0).size(), 18u);
    for (unsigned j = 0; j <= 2; ++j) EXPECT_TRUE(is_subgroup(D9, D9.subgroup_Hstar(j)));
}

TEST(Group, AllSubgroupsAreDistinctSubgroups) {
    // D_{2n}: tau(n) cyclic + sigma(n) dihedral subgroups; C_n x C_2: 2 tau(n).
    const std::vector<std::pair<Group, std::size_t>> cases = {
        {D9, 3 + 13}, {Group::dihedral(5, 2), 3 + 31}, {A9, 6}, {Group::dihedral(3, 1), 2 + 4}};
    for (const auto& [g, expected] : cases) {
        const auto subs = all_subgroups(g);
        EXPECT_EQ(subs.size(), expected);
        std::set<std::vector<std::size_t>> seen;
        for (const auto& s : subs) {
            EXPECT_TRUE(is_subgroup(g, s.elements)) << s.name;
            EXPECT_EQ(g.order() % s.order(), 0u);
            EXPECT_TRUE(seen.insert(indices(s.elements)).second) << "duplicate " << s.name;
        }
    }
}

TEST(Group, LeftTransversalCoversCosets) {
    const auto h = D9.subgroup_Hstar(1);
    const auto reps = left_transversal(D9, h);
    ASSERT_EQ(reps.size(), 3u);
    EXPECT_EQ(reps.front(), D9.identity());
    std::set<std::size_t> covered;
    for (const auto& r : reps)
        for (const auto& x : h) covered.insert((r * x).index());
    EXPECT_EQ(covered.size(), 18u);
}

TEST(Gamma, Examples) {
    EXPECT_EQ(gamma(D9.element(2, 1), A9), A9.element(2, 1));
    EXPECT_EQ(gamma(D9.identity(), A9), A9.identity());
    std::set<std::size_t> image;
    for (const auto& g : D9.elements()) {
        const auto img = gamma(g, A9);
        EXPECT_EQ(img.index(), g.index());
        image.insert(img.index());
    }
    EXPECT_EQ(image.size(), 18u);
}

TEST(Gamma, ParameterMismatch) {
    EXPECT_THROW(gamma(D9.rotation(), Group::abelian(5, 1)), MismatchError);
    EXPECT_THROW(gamma(A9.rotation(), A9), MismatchError);
    EXPECT_THROW(gamma(D9.rotation(), D9), MismatchError);
}
