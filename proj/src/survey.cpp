#include "dcodes/survey.hpp"

#include <ostream>
#include <string>

#include "dcodes/idempotents.hpp"

namespace dcodes {

AlgebraElem AbelianCatalog::generator(std::uint32_t mask) const {
    AlgebraElem sum(group, field);
    for (std::size_t i = 0; i < idempotents.size(); ++i) {
        if (mask & (1U << i)) sum = sum + idempotents[i];
    }
    return sum;
}

AbelianCatalog abelian_catalog(PrimeField field, std::uint64_t p, unsigned m) {
    if (!check_admissible(field.modulus(), p, m)) {
        throw InadmissibleParameters("(q, p, m) = (" + std::to_string(field.modulus()) + ", " +
                                     std::to_string(p) + ", " + std::to_string(m) + ") is not admissible");
    }
    const Group g = Group::abelian(p, m);
    const AlgebraElem plus = plus_projector(g, field);
    const AlgebraElem minus = minus_projector(g, field);

    AbelianCatalog cat{g, field, {}, {}, {}};
    for (unsigned j = 0; j <= m; ++j) {
        AlgebraElem ej = hat(g.subgroup_H(j), g, field);
        if (j > 0) ej = ej - hat(g.subgroup_H(j - 1), g, field);
        cat.idempotents.push_back(plus * ej);
        cat.labels.push_back("(1+t)/2 e~" + std::to_string(j));
        cat.idempotents.push_back(minus * ej);
        cat.labels.push_back("(1-t)/2 e~" + std::to_string(j));
    }

    AlgebraElem sum(g, field);
    for (std::size_t x = 0; x < cat.idempotents.size(); ++x) {
        const AlgebraElem& e = cat.idempotents[x];
        if (!is_idempotent(e) || e.is_zero()) throw InternalCheckFailed("abelian catalog member is not a nonzero idempotent");
        for (std::size_t y = 0; y < cat.idempotents.size(); ++y) {
            if (x != y && !(e * cat.idempotents[y]).is_zero()) {
                throw InternalCheckFailed("abelian catalog members are not orthogonal");
            }
        }
        sum = sum + e;
        cat.dimensions.push_back(left_ideal_code(e).dimension());
    }
    if (!(sum == AlgebraElem::one(g, field))) throw InternalCheckFailed("abelian catalog does not sum to 1");
    return cat;
}

std::vector<SurveyRow> enumerate_abelian_codes(const AbelianCatalog& catalog, std::optional<std::size_t> dim_filter,
                                               std::uint64_t budget) {
    const auto count = static_cast<std::uint32_t>(catalog.idempotents.size());
    std::vector<SurveyRow> rows;
    for (std::uint32_t mask = 1; mask < (1U << count); ++mask) {
        std::size_t predicted = 0;
        for (std::uint32_t i = 0; i < count; ++i) {
            if (mask & (1U << i)) predicted += catalog.dimensions[i];
        }
        if (dim_filter && predicted != *dim_filter) continue;

        const LinearCode code = left_ideal_code(catalog.generator(mask));
        if (code.dimension() != predicted) {
            throw InternalCheckFailed("survey row " + std::to_string(mask) + ": ideal dimension " +
                                      std::to_string(code.dimension()) + " != sum of components " +
                                      std::to_string(predicted));
        }
        SurveyRow row{mask, predicted, std::nullopt};
        try {
            row.min_weight = min_weight(code, budget);
        } catch (const BudgetExceeded&) {
        }
        rows.push_back(row);
    }
    return rows;
}

void write_survey_table(std::ostream& os, const AbelianCatalog& catalog, const std::vector<SurveyRow>& rows) {
    os << catalog.field.modulus() << ' ' << catalog.group.p() << ' ' << catalog.group.m() << '\n';
    for (const SurveyRow& r : rows) {
        os << r.mask << ' ' << r.dimension << ' ';
        if (r.min_weight) {
            os << *r.min_weight;
        } else {
            os << '?';
        }
        os << '\n';
    }
}

LinearCode gamma_image_code(const LinearCode& code) {
    const Group& src = code.group();
    if (src.kind() != GroupKind::dihedral) throw MismatchError("gamma_image_code expects a code over a dihedral group");
    const Group target = Group::abelian(src.p(), src.m());
    const Matrix& gen = code.generator();
    Matrix image(code.field(), gen.rows(), gen.cols());
    for (std::size_t c = 0; c < gen.cols(); ++c) {
        const std::size_t dst = gamma(src.at(c), target).index();
        for (std::size_t r = 0; r < gen.rows(); ++r) image.at(r, dst) = gen.at(r, c);
    }
    return LinearCode(target, image);
}

const char* to_string(Verdict v) { return v == Verdict::possible ? "possible" : "impossible"; }

Verdict equivalence_necessary_check(const LinearCode& x, const LinearCode& y, std::uint64_t budget) {
    if (x.length() != y.length() || x.dimension() != y.dimension() || !(x.field() == y.field())) {
        return Verdict::impossible;
    }
    return weight_distribution(x, budget) == weight_distribution(y, budget) ? Verdict::possible
                                                                            : Verdict::impossible;
}

}  // namespace dcodes
