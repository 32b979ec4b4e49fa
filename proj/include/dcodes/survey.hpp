#pragma once

// Abelian codes of F_q[C_{p^m} x C_2], the coordinate bijection gamma from
// the dihedral group, and parameter-level equivalence tests.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dcodes/code.hpp"

namespace dcodes {

/// Primitive idempotents of F_q[C_{p^m} x C_2]. Entry 2j is (1 + t)/2 e~_j and
/// entry 2j + 1 is (1 - t)/2 e~_j, where e~_0 = hat(K_0) and
/// e~_j = hat(K_j) - hat(K_{j-1}); bit i of a survey mask selects entry i.
struct AbelianCatalog {
    Group group;
    PrimeField field;
    std::vector<AlgebraElem> idempotents;
    std::vector<std::string> labels;
    std::vector<std::size_t> dimensions;

    /// Sum of the selected idempotents.
    AlgebraElem generator(std::uint32_t mask) const;
};

/// Throws InadmissibleParameters unless check_admissible(q, p, m), and
/// InternalCheckFailed if the pieces are not a complete orthogonal system.
AbelianCatalog abelian_catalog(PrimeField field, std::uint64_t p, unsigned m);

struct SurveyRow {
    std::uint32_t mask;
    std::size_t dimension;
    std::optional<std::size_t> min_weight;  // nullopt: beyond budget

    bool operator==(const SurveyRow&) const = default;
};

/// One row per nonempty subset of the catalog (ascending mask), restricted to
/// dimension dim_filter when given. Rows whose weight cannot be computed within
/// budget keep min_weight empty.
std::vector<SurveyRow> enumerate_abelian_codes(const AbelianCatalog& catalog,
                                               std::optional<std::size_t> dim_filter = std::nullopt,
                                               std::uint64_t budget = kDefaultBudget);

/// "q p m", then "mask dim weight" per row with '?' for unknown weights.
void write_survey_table(std::ostream& os, const AbelianCatalog& catalog, const std::vector<SurveyRow>& rows);

/// Image of a code over the dihedral group under the coordinate bijection gamma.
LinearCode gamma_image_code(const LinearCode& code);

enum class Verdict { possible, impossible };

const char* to_string(Verdict v);

/// "impossible" when lengths, dimensions or weight distributions differ. Never
/// claims an equivalence exists. Throws BudgetExceeded from weight_distribution.
Verdict equivalence_necessary_check(const LinearCode& x, const LinearCode& y,
                                    std::uint64_t budget = kDefaultBudget);

}  // namespace dcodes
