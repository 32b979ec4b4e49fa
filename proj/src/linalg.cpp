#include "dcodes/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcodes {

Matrix Matrix::from_rows(PrimeField field, std::size_t cols,
                         const std::vector<std::vector<Residue>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged row list");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = field.reduce(rows[r][c]);
    }
    return m;
}

std::vector<std::vector<Residue>> Matrix::to_rows() const {
    std::vector<std::vector<Residue>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
    return out;
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
    const PrimeField& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t sel = lead;
        while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != lead) std::swap_ranges(m.row(sel).begin(), m.row(sel).end(), m.row(lead).begin());

        const Residue scale = f.inv(m.at(lead, c));
        for (Residue& v : m.row(lead)) v = f.mul(v, scale);

        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead) continue;
            const Residue factor = m.at(r, c);
            if (factor == 0) continue;
            auto dst = m.row(r);
            auto src = m.row(lead);
            for (std::size_t k = c; k < m.cols(); ++k) {
                dst[k] = f.sub(dst[k], f.mul(factor, src[k]));
            }
        }
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

Matrix row_reduced_basis(Matrix m) {
    const std::size_t r = rref_in_place(m).size();
    Matrix out(m.field(), r, m.cols());
    for (std::size_t i = 0; i < r; ++i) std::ranges::copy(m.row(i), out.row(i).begin());
    return out;
}

std::size_t rank(Matrix m) { return rref_in_place(m).size(); }

std::optional<std::vector<Residue>> solve(const Matrix& a, std::span<const Residue> b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
    const PrimeField& f = a.field();
    Matrix aug(f, a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::ranges::copy(a.row(r), aug.row(r).begin());
        aug.at(r, a.cols()) = b[r];
    }
    const auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;

    std::vector<Residue> x(a.cols(), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
    return x;
}

bool in_row_space(const Matrix& rref_basis, std::span<const Residue> v) {
    const PrimeField& f = rref_basis.field();
    std::vector<Residue> rest(v.begin(), v.end());
    // Each basis row has a leading 1 at its pivot; clear pivots left to right.
    for (std::size_t r = 0; r < rref_basis.rows(); ++r) {
        auto row = rref_basis.row(r);
        const auto pivot = std::ranges::find_if(row, [](Residue x) { return x != 0; });
        if (pivot == row.end()) continue;
        const std::size_t c = static_cast<std::size_t>(pivot - row.begin());
        const Residue factor = rest[c];
        if (factor == 0) continue;
        for (std::size_t k = c; k < rest.size(); ++k) rest[k] = f.sub(rest[k], f.mul(factor, row[k]));
    }
    return std::ranges::all_of(rest, [](Residue x) { return x == 0; });
}

}  // namespace dcodes
