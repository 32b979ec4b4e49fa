#include "dcodes/code.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

namespace dcodes {

namespace {

constexpr std::uint64_t kParallelThreshold = 1ULL << 15;

std::optional<std::uint64_t> checked_power(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
        r *= base;
    }
    return r;
}

std::uint64_t require_enumerable(const LinearCode& code, std::uint64_t budget) {
    const auto total = code.size();
    if (!total || *total > budget) {
        throw BudgetExceeded("enumeration too large: q^k = " + std::to_string(code.field().modulus()) + "^" +
                             std::to_string(code.dimension()) + " exceeds budget " + std::to_string(budget));
    }
    return *total;
}

// Splits [first, last) into contiguous ranges and runs scan(lo, hi, slot) on
// each, one thread per range. Slots are combined by the caller in range order.
template <typename Slot, typename Scan>
std::vector<Slot> scan_ranges(std::uint64_t first, std::uint64_t last, Scan scan) {
    const std::uint64_t count = last - first;
    unsigned workers = 1;
    if (count >= kParallelThreshold) {
        workers = std::max(1U, std::min(std::thread::hardware_concurrency(), 16U));
    }
    std::vector<Slot> slots(workers);
    if (workers == 1) {
        scan(first, last, slots[0]);
        return slots;
    }
    std::vector<std::thread> pool;
    const std::uint64_t chunk = count / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = first + w * chunk;
        const std::uint64_t hi = w + 1 == workers ? last : lo + chunk;
        pool.emplace_back([&, lo, hi, w] { scan(lo, hi, slots[w]); });
    }
    for (auto& t : pool) t.join();
    return slots;
}

}  // namespace

LinearCode::LinearCode(Group group, const Matrix& spanning)
    : group_(group), generator_(row_reduced_basis(spanning)) {
    if (spanning.cols() != group_.order()) {
        throw std::invalid_argument("code length " + std::to_string(spanning.cols()) + " != |G| = " +
                                    std::to_string(group_.order()));
    }
}

LinearCode LinearCode::zero(const Group& group, PrimeField field) {
    return LinearCode(group, Matrix(field, 0, group.order()));
}

bool LinearCode::contains(std::span<const Residue> word) const {
    if (word.size() != length()) return false;
    return in_row_space(generator_, word);
}

bool LinearCode::contains(const LinearCode& other) const {
    for (std::size_t r = 0; r < other.dimension(); ++r) {
        if (!contains(other.generator().row(r))) return false;
    }
    return true;
}

std::optional<std::uint64_t> LinearCode::size() const {
    return checked_power(field().modulus(), dimension());
}

bool same_row_space(const LinearCode& x, const LinearCode& y) { return x.generator() == y.generator(); }

LinearCode left_ideal_code(const AlgebraElem& x) {
    if (x.is_zero()) throw std::invalid_argument("zero generator");
    const Group& g = x.group();
    Matrix span(x.field(), g.order(), g.order());
    for (std::size_t k = 0; k < g.order(); ++k) {
        const AlgebraElem row = AlgebraElem::basis(g.at(k), x.field()) * x;
        std::ranges::copy(row.coeffs(), span.row(k).begin());
    }
    return LinearCode(g, span);
}

SubgroupPairCode subgroup_pair_code(const Group& group, PrimeField field, const std::vector<GroupElem>& h,
                         const std::vector<GroupElem>& k) {
    const Subgroup hs{"H", h};
    const Subgroup ks{"K", k};
    if (!hs.is_subset_of(ks)) throw std::invalid_argument("subgroup_pair_code: H is not contained in K");

    const AlgebraElem h_hat = hat(h, group, field);
    const AlgebraElem e = h_hat - hat(k, group, field);
    const std::size_t index_h = group.order() / h.size();
    const std::size_t index_k = group.order() / k.size();

    std::vector<AlgebraElem> basis;
    for (const GroupElem& r : left_transversal(group, k)) {
        // Transversal of H in K: cosets tH inside K, identity first.
        std::vector<bool> covered(group.order(), false);
        for (const GroupElem& t : k) {
            if (covered[t.index()]) continue;
            for (const GroupElem& x : h) covered[(t * x).index()] = true;
            if (t == group.identity()) continue;
            const AlgebraElem one = AlgebraElem::one(group, field);
            basis.push_back(AlgebraElem::basis(r, field) * (one - AlgebraElem::basis(t, field)) * h_hat);
        }
    }

    LinearCode code = e.is_zero() ? LinearCode::zero(group, field) : left_ideal_code(e);

    Matrix rows(field, basis.size(), group.order());
    for (std::size_t i = 0; i < basis.size(); ++i) std::ranges::copy(basis[i].coeffs(), rows.row(i).begin());
    const LinearCode predicted(group, rows);

    return SubgroupPairCode{code,
                       std::move(basis),
                       index_h - index_k,
                       2 * h.size(),
                       predicted.dimension() == rows.rows(),
                       predicted == code};
}

std::vector<Residue> encode_index(const LinearCode& code, std::uint64_t index) {
    const PrimeField& f = code.field();
    const std::size_t k = code.dimension();
    std::vector<Residue> word(code.length(), 0);
    for (std::size_t i = k; i-- > 0;) {
        const Residue digit = static_cast<Residue>(index % f.modulus());
        index /= f.modulus();
        if (digit == 0) continue;
        auto row = code.generator().row(i);
        for (std::size_t c = 0; c < word.size(); ++c) word[c] = f.add(word[c], f.mul(digit, row[c]));
    }
    return word;
}

void for_each_codeword(const LinearCode& code, std::uint64_t first, std::uint64_t last,
                       const std::function<void(std::uint64_t, std::span<const Residue>)>& visit) {
    if (first >= last) return;
    const PrimeField& f = code.field();
    const Residue q = f.modulus();
    const std::size_t k = code.dimension();
    const std::size_t n = code.length();

    std::vector<Residue> digits(k, 0);
    std::uint64_t rest = first;
    for (std::size_t i = k; i-- > 0;) {
        digits[i] = static_cast<Residue>(rest % q);
        rest /= q;
    }
    std::vector<Residue> word = encode_index(code, first);

    for (std::uint64_t idx = first;;) {
        visit(idx, word);
        if (++idx == last) break;
        // Odometer step. Every digit change, including the wrap q-1 -> 0, adds
        // one copy of that digit's row, since q * row = 0.
        for (std::size_t pos = k; pos-- > 0;) {
            auto row = code.generator().row(pos);
            for (std::size_t c = 0; c < n; ++c) word[c] = f.add(word[c], row[c]);
            if (++digits[pos] < q) break;
            digits[pos] = 0;
        }
    }
}

std::vector<AlgebraElem> codewords(const LinearCode& code, std::uint64_t first, std::uint64_t last) {
    std::vector<AlgebraElem> out;
    for_each_codeword(code, first, last, [&](std::uint64_t, std::span<const Residue> w) {
        out.emplace_back(code.group(), code.field(), std::vector<Residue>(w.begin(), w.end()));
    });
    return out;
}

std::size_t min_weight_by_enumeration(const LinearCode& code, std::uint64_t budget) {
    if (code.dimension() == 0) throw Error("empty code has no minimum weight");
    const std::uint64_t total = require_enumerable(code, budget);
    const auto slots = scan_ranges<std::size_t>(1, total, [&](std::uint64_t lo, std::uint64_t hi, std::size_t& best) {
        best = code.length();
        for_each_codeword(code, lo, hi, [&](std::uint64_t, std::span<const Residue> w) {
            best = std::min(best, support_weight(w));
        });
    });
    return *std::ranges::min_element(slots);
}

std::size_t min_weight_by_support_search(const LinearCode& code, std::uint64_t budget) {
    const std::size_t k = code.dimension();
    const std::size_t n = code.length();
    if (k == 0) throw Error("empty code has no minimum weight");
    const Matrix& gen = code.generator();

    std::uint64_t visited = 0;
    std::vector<bool> in_support(n, false);
    for (std::size_t w = 1; w <= n; ++w) {
        // Walk w-subsets in lexicographic order.
        std::vector<std::size_t> pick(w);
        for (std::size_t i = 0; i < w; ++i) pick[i] = i;
        while (true) {
            if (++visited > budget) {
                throw BudgetExceeded("support search exceeded budget " + std::to_string(budget) +
                                     " subsets at weight " + std::to_string(w));
            }
            std::fill(in_support.begin(), in_support.end(), false);
            for (std::size_t c : pick) in_support[c] = true;
            Matrix rest(code.field(), k, n - w);
            for (std::size_t r = 0; r < k; ++r) {
                std::size_t out = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (!in_support[c]) rest.at(r, out++) = gen.at(r, c);
                }
            }
            // A rank drop means a nonzero codeword vanishes off the subset.
            if (rank(std::move(rest)) < k) return w;

            std::size_t i = w;
            while (i > 0 && pick[i - 1] == n - w + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t t = i; t < w; ++t) pick[t] = pick[t - 1] + 1;
        }
    }
    throw InternalCheckFailed("support search found no codeword in a nonzero code");
}

std::size_t min_weight_by_message_weight(const LinearCode& code, std::uint64_t budget) {
    const std::size_t k = code.dimension();
    const std::size_t n = code.length();
    if (k == 0) throw Error("empty code has no minimum weight");
    const PrimeField& f = code.field();
    const Residue q = f.modulus();
    const Matrix& gen = code.generator();

    std::uint64_t visited = 0;
    std::size_t best = n;
    std::vector<Residue> word(n);
    for (std::size_t t = 1; t <= k; ++t) {
        std::vector<std::size_t> pick(t);
        for (std::size_t i = 0; i < t; ++i) pick[i] = i;
        while (true) {
            // Leading coefficient fixed to 1; the others range over F_q^*.
            std::vector<Residue> coef(t, 1);
            while (true) {
                if (++visited > budget) {
                    throw BudgetExceeded("message-weight search exceeded budget " + std::to_string(budget) +
                                         " at message weight " + std::to_string(t));
                }
                std::ranges::fill(word, 0);
                for (std::size_t i = 0; i < t; ++i) {
                    auto row = gen.row(pick[i]);
                    for (std::size_t c = 0; c < n; ++c) word[c] = f.add(word[c], f.mul(coef[i], row[c]));
                }
                best = std::min(best, support_weight(word));

                std::size_t pos = t;
                while (pos > 1 && coef[pos - 1] == q - 1) coef[--pos] = 1;
                if (pos <= 1) break;
                ++coef[pos - 1];
            }

            std::size_t i = t;
            while (i > 0 && pick[i - 1] == k - t + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t s = i; s < t; ++s) pick[s] = pick[s - 1] + 1;
        }
        // Every unvisited message has weight >= t + 1.
        if (best <= t + 1) return best;
    }
    return best;
}

std::size_t min_weight(const LinearCode& code, std::uint64_t budget) {
    const auto total = code.size();
    if (total && *total <= budget) return min_weight_by_enumeration(code, budget);
    return min_weight_by_message_weight(code, budget);
}

std::vector<std::uint64_t> weight_distribution(const LinearCode& code, std::uint64_t budget) {
    const std::uint64_t total = require_enumerable(code, budget);
    const std::size_t n = code.length();
    using Hist = std::vector<std::uint64_t>;
    const auto slots = scan_ranges<Hist>(0, total, [&](std::uint64_t lo, std::uint64_t hi, Hist& hist) {
        hist.assign(n + 1, 0);
        for_each_codeword(code, lo, hi, [&](std::uint64_t, std::span<const Residue> w) {
            ++hist[support_weight(w)];
        });
    });
    Hist out(n + 1, 0);
    for (const Hist& h : slots) {
        for (std::size_t i = 0; i < h.size(); ++i) out[i] += h[i];
    }
    return out;
}

void write_generator_matrix(std::ostream& os, const LinearCode& code) {
    os << code.length() << ' ' << code.dimension() << ' ' << code.field().modulus() << '\n';
    for (std::size_t r = 0; r < code.dimension(); ++r) {
        auto row = code.generator().row(r);
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ' ';
            os << row[c];
        }
        os << '\n';
    }
}

Matrix read_generator_matrix(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("generator matrix: missing header");
    std::istringstream header(line);
    std::size_t n = 0, k = 0;
    std::uint64_t q = 0;
    std::string extra;
    if (!(header >> n >> k >> q) || (header >> extra)) {
        throw std::runtime_error("generator matrix: malformed header '" + line + "'");
    }
    const PrimeField field(q);
    Matrix m(field, k, n);
    for (std::size_t r = 0; r < k; ++r) {
        if (!std::getline(is, line)) throw std::runtime_error("generator matrix: missing row " + std::to_string(r));
        std::istringstream row(line);
        for (std::size_t c = 0; c < n; ++c) {
            std::uint64_t v = 0;
            if (!(row >> v) || v >= q) throw std::runtime_error("generator matrix: bad entry in row " + std::to_string(r));
            m.at(r, c) = static_cast<Residue>(v);
        }
        if (row >> extra) throw std::runtime_error("generator matrix: row " + std::to_string(r) + " too long");
    }
    return m;
}

}  // namespace dcodes
