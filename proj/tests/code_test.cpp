#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "dcodes/code.hpp"
#include "dcodes/idempotents.hpp"
#include "dcodes/survey.hpp"
#include "oracle.hpp"

using namespace dcodes;

namespace {

const PrimeField F11(11);
const Group D9 = Group::dihedral(3, 2);

const CentralCatalog& catalog() {
    static const CentralCatalog cat = central_idempotents(F11, D9);
    return cat;
}

AlgebraElem f1() { return noncentral_generator(matrix_units(catalog(), 1)).f; }

std::vector<std::uint32_t> as_vec(const AlgebraElem& x) { return {x.coeffs().begin(), x.coeffs().end()}; }

std::vector<std::uint64_t> hist(std::size_t n, std::initializer_list<std::pair<std::size_t, std::uint64_t>> entries) {
    std::vector<std::uint64_t> h(n + 1, 0);
    for (const auto& [w, c] : entries) h[w] = c;
    return h;
}

}  // namespace

TEST(LeftIdealCode, Examples) {
    EXPECT_EQ(left_ideal_code(AlgebraElem::one(D9, F11)).dimension(), 18u);
    EXPECT_EQ(left_ideal_code(f1()).dimension(), 2u);
    EXPECT_EQ(left_ideal_code(matrix_units(catalog(), 1).e11).dimension(), 2u);
    EXPECT_EQ(left_ideal_code(matrix_units(catalog(), 2).e11).dimension(), 6u);
    EXPECT_THROW(left_ideal_code(AlgebraElem(D9, F11)), std::invalid_argument);
}

TEST(LeftIdealCode, GeneratorIsReducedEchelon) {
    const LinearCode c = left_ideal_code(f1());
    const Matrix& g = c.generator();
    std::size_t last_pivot = 0;
    for (std::size_t r = 0; r < g.rows(); ++r) {
        std::size_t p = 0;
        while (g.at(r, p) == 0) ++p;
        EXPECT_EQ(g.at(r, p), 1u);
        if (r) EXPECT_GT(p, last_pivot);
        for (std::size_t o = 0; o < g.rows(); ++o) {
            if (o != r) EXPECT_EQ(g.at(o, p), 0u);
        }
        last_pivot = p;
    }
}

TEST(LeftIdealCode, ClosedUnderGroupAction) {
    const auto& cat = catalog();
    std::vector<AlgebraElem> gens{f1(), matrix_units(cat, 1).e11, matrix_units(cat, 2).e21,
                                  noncentral_generator(matrix_units(cat, 2)).f, cat.e11_0};
    for (const auto& x : gens) {
        const LinearCode c = left_ideal_code(x);
        for (const GroupElem& s : {D9.rotation(), D9.reflection()}) {
            for (std::size_t r = 0; r < c.dimension(); ++r) {
                const AlgebraElem row(D9, F11, {c.generator().row(r).begin(), c.generator().row(r).end()});
                ASSERT_TRUE(c.contains(AlgebraElem::basis(s, F11) * row));
            }
        }
    }
}

TEST(SubgroupPair, Examples) {
    const SubgroupPairCode a = subgroup_pair_code(D9, F11, D9.subgroup_Hstar(1), D9.subgroup_Hstar(0));
    EXPECT_EQ(a.code.dimension(), 2u);
    EXPECT_EQ(a.predicted_dimension, 2u);
    EXPECT_EQ(min_weight(a.code), 12u);
    EXPECT_TRUE(a.basis_independent);
    EXPECT_TRUE(a.basis_spans);

    const SubgroupPairCode same = subgroup_pair_code(D9, F11, D9.subgroup_H(1), D9.subgroup_H(1));
    EXPECT_EQ(same.code.dimension(), 0u);
    EXPECT_TRUE(same.predicted_basis.empty());

    const SubgroupPairCode refl = subgroup_pair_code(D9, F11, {D9.identity()}, D9.subgroup_Hstar(2));
    EXPECT_EQ(refl.code.dimension(), 9u);
    EXPECT_EQ(min_weight(refl.code), 2u);
    EXPECT_TRUE(refl.code.contains(AlgebraElem::one(D9, F11) - AlgebraElem::basis(D9.reflection(), F11)));

    EXPECT_THROW(subgroup_pair_code(D9, F11, D9.subgroup_H(0), D9.subgroup_H(1)), std::invalid_argument);
}

TEST(SubgroupPair, EveryNestedPairOfD9AndItsAbelianCounterpart) {
    for (const Group& g : {D9, Group::abelian(3, 2)}) {
        const auto subs = all_subgroups(g);
        for (const auto& h : subs) {
            for (const auto& k : subs) {
                if (!h.is_subset_of(k)) continue;
                const SubgroupPairCode lc = subgroup_pair_code(g, F11, h.elements, k.elements);
                ASSERT_EQ(lc.code.dimension(), g.order() / h.order() - g.order() / k.order()) << h.name << " " << k.name;
                ASSERT_TRUE(lc.basis_independent);
                ASSERT_TRUE(lc.basis_spans);
                if (lc.code.dimension() > 0) ASSERT_EQ(min_weight(lc.code), 2 * h.order()) << h.name << " " << k.name;
            }
        }
    }
}

TEST(MinWeight, Examples) {
    EXPECT_EQ(min_weight(left_ideal_code(f1())), 15u);
    EXPECT_EQ(min_weight(left_ideal_code(matrix_units(catalog(), 1).e11)), 12u);
    EXPECT_THROW(min_weight(LinearCode::zero(D9, F11)), Error);
    EXPECT_THROW(min_weight_by_enumeration(LinearCode::zero(D9, F11)), Error);
}

TEST(MinWeight, BudgetIsExplicit) {
    const LinearCode whole = left_ideal_code(AlgebraElem::one(D9, F11));
    EXPECT_THROW(min_weight_by_enumeration(whole), BudgetExceeded);
    EXPECT_THROW(weight_distribution(whole), BudgetExceeded);
    EXPECT_EQ(min_weight(whole), 1u);
    const LinearCode c = left_ideal_code(f1());
    EXPECT_THROW(min_weight_by_enumeration(c, 100), BudgetExceeded);
    EXPECT_EQ(min_weight_by_enumeration(c, 121), 15u);
}

TEST(MinWeight, ThreeRoutesAgree) {
    // Full enumeration, subset-rank search and message-weight search on every
    // abelian and dihedral code small enough to enumerate.
    std::vector<LinearCode> codes;
    const AbelianCatalog ab = abelian_catalog(PrimeField(5), 3, 2);
    for (std::uint32_t mask = 1; mask < 64; ++mask) codes.push_back(left_ideal_code(ab.generator(mask)));
    const CentralCatalog cat5 = central_idempotents(PrimeField(5), D9);
    for (unsigned j = 1; j <= 2; ++j) {
        const MatrixUnits mu = matrix_units(cat5, j);
        for (const auto& x : {mu.e11, mu.e12, mu.e21, mu.e22, noncentral_generator(mu).f, cat5.e(j)})
            codes.push_back(left_ideal_code(x));
    }
    for (const auto& c : codes) {
        if (c.size().value_or(UINT64_MAX) > (1u << 20)) continue;
        const std::size_t w = min_weight_by_enumeration(c);
        ASSERT_EQ(min_weight_by_support_search(c), w);
        ASSERT_EQ(min_weight_by_message_weight(c), w);
    }
}

TEST(MinWeight, GeneratorEnumerationMatchesDirectSpan) {
    // Oracle: enumerate combinations of {f, af} directly, bypassing the RREF path.
    const AlgebraElem f = f1();
    const AlgebraElem af = AlgebraElem::basis(D9.rotation(), F11) * f;
    const auto direct = oracle::span_histogram({as_vec(f), as_vec(af)}, 11);
    const LinearCode c = left_ideal_code(f);
    EXPECT_EQ(weight_distribution(c), direct);
    std::size_t direct_min = 0;
    for (std::size_t w = 1; w < direct.size(); ++w) {
        if (direct[w]) {
            direct_min = w;
            break;
        }
    }
    EXPECT_EQ(min_weight(c), direct_min);
}

TEST(WeightDistribution, Examples) {
    EXPECT_EQ(weight_distribution(LinearCode::zero(D9, F11)), hist(18, {{0, 1}}));
    // Frozen from the direct-span oracle above and an independent script.
    EXPECT_EQ(weight_distribution(left_ideal_code(f1())), hist(18, {{0, 1}, {15, 60}, {18, 60}}));
    EXPECT_EQ(weight_distribution(left_ideal_code(matrix_units(catalog(), 1).e11)),
              hist(18, {{0, 1}, {12, 30}, {18, 90}}));
    EXPECT_EQ(weight_distribution(left_ideal_code(hat(D9.elements(), D9, F11))), hist(18, {{0, 1}, {18, 10}}));
}

TEST(WeightDistribution, SumsToCodeSize) {
    const LinearCode c = left_ideal_code(matrix_units(catalog(), 2).e11);
    const auto h = weight_distribution(c);
    std::uint64_t total = 0;
    for (auto v : h) total += v;
    EXPECT_EQ(total, 1771561u);
    EXPECT_EQ(h[0], 1u);
    for (std::size_t w = 1; w < 4; ++w) EXPECT_EQ(h[w], 0u);
    EXPECT_GT(h[4], 0u);
}

TEST(Codewords, Enumeration) {
    EXPECT_EQ(codewords(LinearCode::zero(D9, F11), 0, 1).size(), 1u);
    EXPECT_TRUE(codewords(LinearCode::zero(D9, F11), 0, 1).front().is_zero());

    const LinearCode c = left_ideal_code(f1());
    const auto all = codewords(c, 0, 121);
    std::set<std::vector<std::uint32_t>> distinct;
    for (const auto& w : all) {
        distinct.insert(as_vec(w));
        EXPECT_TRUE(c.contains(w));
    }
    EXPECT_EQ(distinct.size(), 121u);

    std::vector<AlgebraElem> parts;
    for (std::uint64_t lo : {0u, 30u, 61u, 90u}) {
        const std::uint64_t hi = lo == 90 ? 121 : (lo == 0 ? 30 : lo == 30 ? 61 : 90);
        for (auto& w : codewords(c, lo, hi)) parts.push_back(std::move(w));
    }
    EXPECT_EQ(parts, all);
}

TEST(Codewords, IncrementalMatchesDirectEncoding) {
    const LinearCode c = left_ideal_code(matrix_units(catalog(), 2).e12);
    std::mt19937_64 rng(9);
    const std::uint64_t total = *c.size();
    for (int s = 0; s < 20; ++s) {
        const std::uint64_t lo = rng() % total;
        const std::uint64_t hi = std::min(total, lo + 50);
        for_each_codeword(c, lo, hi, [&](std::uint64_t idx, std::span<const Residue> w) {
            ASSERT_EQ(std::vector<Residue>(w.begin(), w.end()), encode_index(c, idx));
        });
    }
}

TEST(GeneratorMatrixFormat, ExactBytes) {
    std::ostringstream os;
    write_generator_matrix(os, left_ideal_code(f1()));
    EXPECT_EQ(os.str(),
              "18 2 11\n"
              "1 0 10 1 0 10 1 0 10 9 9 4 9 9 4 9 9 4\n"
              "0 1 10 0 1 10 0 1 10 2 7 2 2 7 2 2 7 2\n");
    std::ostringstream empty;
    write_generator_matrix(empty, LinearCode::zero(D9, F11));
    EXPECT_EQ(empty.str(), "18 0 11\n");
}

TEST(GeneratorMatrixFormat, RoundTripPreservesCode) {
    const auto& cat = catalog();
    for (const auto& x : {f1(), cat.e(2), matrix_units(cat, 2).e21}) {
        const LinearCode c = left_ideal_code(x);
        std::stringstream ss;
        write_generator_matrix(ss, c);
        EXPECT_EQ(LinearCode(D9, read_generator_matrix(ss)), c);
    }
}

TEST(GeneratorMatrixFormat, RejectsMalformed) {
    for (const char* text : {"", "18 2\n", "3 1 11\n1 2\n", "3 1 11\n1 2 11\n", "3 1 11\n1 2 3 4\n", "3 1 4\n"}) {
        std::istringstream is(text);
        EXPECT_ANY_THROW(read_generator_matrix(is)) << text;
    }
}
