#pragma once

// Linear codes cut out of a group algebra by left ideals.
//
// A code of length n = |G| is stored as its generator matrix in reduced row
// echelon form (leftmost pivots, pivot entries 1), so two codes are equal
// exactly when their stored matrices are equal.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "dcodes/algebra.hpp"
#include "dcodes/linalg.hpp"

namespace dcodes {

/// Default cap on the number of codewords (or coordinate subsets) one exact
/// weight computation may visit.
inline constexpr std::uint64_t kDefaultBudget = 1ULL << 24;

class LinearCode {
public:
    /// Row-reduces an arbitrary spanning set (any number of rows, n columns).
    LinearCode(Group group, const Matrix& spanning);
    static LinearCode zero(const Group& group, PrimeField field);

    const Group& group() const { return group_; }
    const PrimeField& field() const { return generator_.field(); }
    std::size_t length() const { return generator_.cols(); }
    std::size_t dimension() const { return generator_.rows(); }
    const Matrix& generator() const { return generator_; }

    bool contains(std::span<const Residue> word) const;
    bool contains(const AlgebraElem& x) const { return contains(x.coeffs()); }
    /// Row-space containment.
    bool contains(const LinearCode& other) const;

    /// q^k, or nullopt when it does not fit in 64 bits.
    std::optional<std::uint64_t> size() const;

    /// Same group and same row space.
    bool operator==(const LinearCode& o) const = default;

private:
    Group group_;
    Matrix generator_;
};

/// Same field, same length and same row space, ignoring which group indexes the coordinates.
bool same_row_space(const LinearCode& x, const LinearCode& y);

/// The left ideal (F_q G) x, spanned by {g x : g in G}. Throws std::invalid_argument for x = 0.
LinearCode left_ideal_code(const AlgebraElem& x);

/// The code (F_q G)(hat(H) - hat(K)) together with the predicted basis
/// {r (1 - t) hat(H) : r in a transversal of K in G, t in a transversal of H in K, t != 1}.
struct SubgroupPairCode {
    LinearCode code;
    std::vector<AlgebraElem> predicted_basis;
    /// dim = (G:H) - (G:K).
    std::size_t predicted_dimension;
    /// 2|H|, meaningful when H != K.
    std::size_t predicted_weight;
    bool basis_independent;
    bool basis_spans;
};

/// Throws std::invalid_argument unless H is a subset of K; H = K gives the zero code.
SubgroupPairCode subgroup_pair_code(const Group& group, PrimeField field, const std::vector<GroupElem>& h,
                         const std::vector<GroupElem>& k);

/// Codeword for the message with lexicographic index `index` (first message
/// coordinate most significant).
std::vector<Residue> encode_index(const LinearCode& code, std::uint64_t index);

/// Calls visit(index, word) for every message index in [first, last), in order.
/// Consecutive words are produced incrementally, so each call is O(n) amortized.
void for_each_codeword(const LinearCode& code, std::uint64_t first, std::uint64_t last,
                       const std::function<void(std::uint64_t, std::span<const Residue>)>& visit);

/// Codewords with message index in [first, last), as algebra elements.
std::vector<AlgebraElem> codewords(const LinearCode& code, std::uint64_t first, std::uint64_t last);

/// Exact minimum nonzero weight by visiting every codeword. Throws
/// BudgetExceeded if q^k > budget and Error for the zero code.
std::size_t min_weight_by_enumeration(const LinearCode& code, std::uint64_t budget = kDefaultBudget);

/// Exact minimum nonzero weight as the smallest w such that some w-subset S of
/// coordinates leaves the generator restricted to the complement of S rank
/// deficient. Visits at most `budget` subsets; throws BudgetExceeded otherwise.
std::size_t min_weight_by_support_search(const LinearCode& code, std::uint64_t budget = kDefaultBudget);

/// Exact minimum nonzero weight from the systematic bound: with the generator
/// in RREF every codeword has weight at least the Hamming weight of its
/// message, so messages are visited by increasing weight t until the best
/// weight seen is at most t + 1. Scalar multiples are skipped. Visits at most
/// `budget` messages; throws BudgetExceeded otherwise.
std::size_t min_weight_by_message_weight(const LinearCode& code, std::uint64_t budget = kDefaultBudget);

/// Full enumeration when q^k fits the budget, the message-weight search otherwise.
std::size_t min_weight(const LinearCode& code, std::uint64_t budget = kDefaultBudget);

/// A_0..A_n by visiting every codeword. Throws BudgetExceeded if q^k > budget.
std::vector<std::uint64_t> weight_distribution(const LinearCode& code,
                                               std::uint64_t budget = kDefaultBudget);

/// "n k q" then k rows of residues, single spaces, every line newline-terminated.
void write_generator_matrix(std::ostream& os, const LinearCode& code);

/// Parses the format written by write_generator_matrix into (q, rows); throws
/// std::runtime_error on malformed input.
Matrix read_generator_matrix(std::istream& is);

}  // namespace dcodes
