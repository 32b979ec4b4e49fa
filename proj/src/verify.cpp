#include "dcodes/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dcodes/idempotents.hpp"
#include "dcodes/survey.hpp"

namespace dcodes {

namespace {

struct Context {
    VerifyParams params;
    PrimeField field;
    Group dihedral;
    std::mt19937_64 rng;

    std::size_t phi(unsigned j) const { return static_cast<std::size_t>(euler_phi(ipow(params.p, j))); }

    AlgebraElem random_elem(const Group& g) {
        std::uniform_int_distribution<Residue> dist(0, field.modulus() - 1);
        std::vector<Residue> c(g.order());
        for (Residue& v : c) v = dist(rng);
        return {g, field, std::move(c)};
    }
};

CheckResult pass(std::string detail = {}) { return {"", CheckStatus::pass, std::move(detail)}; }
CheckResult fail(std::string detail) { return {"", CheckStatus::fail, std::move(detail)}; }
CheckResult skip(std::string detail) { return {"", CheckStatus::skip, std::move(detail)}; }

CheckResult check_field_axioms(Context& ctx) {
    const PrimeField& f = ctx.field;
    const Residue q = f.modulus();
    auto triple_ok = [&](Residue x, Residue y, Residue z) {
        return f.add(f.add(x, y), z) == f.add(x, f.add(y, z)) && f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)) &&
               f.add(x, y) == f.add(y, x) && f.mul(x, y) == f.mul(y, x) &&
               f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z));
    };
    for (Residue x = 1; x < q; ++x) {
        if (f.mul(x, f.inv(x)) != 1) return fail("x * inv(x) != 1 for x = " + std::to_string(x));
    }
    std::size_t tested = 0;
    if (q <= 31) {
        for (Residue x = 0; x < q; ++x)
            for (Residue y = 0; y < q; ++y)
                for (Residue z = 0; z < q; ++z, ++tested)
                    if (!triple_ok(x, y, z)) return fail("axiom fails at a triple");
    } else {
        std::uniform_int_distribution<Residue> dist(0, q - 1);
        for (; tested < 10000; ++tested)
            if (!triple_ok(dist(ctx.rng), dist(ctx.rng), dist(ctx.rng))) return fail("axiom fails at a sampled triple");
    }
    return pass(std::to_string(tested) + " triples");
}

CheckResult check_group(Context& ctx) {
    for (const Group& g : {ctx.dihedral, Group::abelian(ctx.params.p, ctx.params.m)}) {
        const auto elems = g.elements();
        const GroupElem a = g.rotation(), b = g.reflection(), one = g.identity();
        GroupElem pw = one;
        for (std::size_t i = 0; i < g.rotation_order(); ++i) pw = pw * a;
        if (!(pw == one) || !(b * b == one)) return fail("generator orders wrong");
        if (g.kind() == GroupKind::dihedral && !(b * a * b == a.inverse())) return fail("bab != a^-1");
        if (g.kind() == GroupKind::abelian && !(b * a == a * b)) return fail("abelian group is not commutative");
        if (g.order() <= 50) {
            for (const auto& x : elems)
                for (const auto& y : elems)
                    for (const auto& z : elems)
                        if (!((x * y) * z == x * (y * z))) return fail("mul is not associative");
        }
        for (unsigned j = 0; j <= g.m(); ++j) {
            if (!is_subgroup(g, g.subgroup_H(j))) return fail("H_j not closed");
            if (!is_subgroup(g, g.subgroup_Hstar(j))) return fail("H*_j not closed");
        }
    }
    const Group ab = Group::abelian(ctx.params.p, ctx.params.m);
    std::vector<bool> hit(ab.order(), false);
    for (const auto& g : ctx.dihedral.elements()) {
        const GroupElem img = gamma(g, ab);
        if (img.index() != g.index() || hit[img.index()]) return fail("gamma is not the index-preserving bijection");
        hit[img.index()] = true;
    }
    return pass();
}

CheckResult check_algebra(Context& ctx) {
    const Group& g = ctx.dihedral;
    for (int s = 0; s < 1000; ++s) {
        const AlgebraElem x = ctx.random_elem(g), y = ctx.random_elem(g), z = ctx.random_elem(g);
        if (!((x * y) * z == x * (y * z))) return fail("convolution is not associative");
        if (!(x * (y + z) == x * y + x * z) || !((x + y) * z == x * z + y * z)) return fail("convolution does not distribute");
    }
    const auto subs = all_subgroups(g);
    for (const auto& h : subs) {
        const AlgebraElem hh = hat(h.elements, g, ctx.field);
        if (!is_idempotent(hh)) return fail("hat(" + h.name + ") is not idempotent");
        for (const auto& k : subs) {
            if (h.is_subset_of(k) && !(hh * hat(k.elements, g, ctx.field) == hat(k.elements, g, ctx.field))) {
                return fail("hat(" + h.name + ") hat(" + k.name + ") != hat(" + k.name + ")");
            }
        }
    }
    const CentralCatalog cat = central_idempotents(ctx.field, g);
    for (const auto& e : cat.members()) {
        for (int s = 0; s < 20; ++s) {
            const AlgebraElem y = ctx.random_elem(g);
            if (!(e * y == y * e)) return fail("central element does not commute");
        }
    }
    return pass(std::to_string(subs.size()) + " subgroups");
}

CheckResult check_catalog(Context& ctx) {
    const CentralCatalog cat = central_idempotents(ctx.field, ctx.dihedral);
    std::ostringstream detail;
    if (left_ideal_code(cat.e11_0).dimension() != 1 || left_ideal_code(cat.e22_0).dimension() != 1) {
        return fail("components of e11_0 / e22_0 are not one-dimensional");
    }
    for (unsigned j = 1; j <= ctx.params.m; ++j) {
        const std::size_t dim = left_ideal_code(cat.e(j)).dimension();
        if (dim != 2 * ctx.phi(j)) return fail("dim (FD)e_" + std::to_string(j) + " = " + std::to_string(dim));

        // F_q<a> e_j is a field: every nonzero element inverts. Elements are
        // x e_j for x supported on the first phi(p^j) powers of a.
        const std::size_t phi = ctx.phi(j);
        const auto total = [&]() -> std::uint64_t {
            std::uint64_t t = 1;
            for (std::size_t i = 0; i < phi && t <= 4096; ++i) t *= ctx.field.modulus();
            return t;
        }();
        const bool exhaustive = total <= 4096;
        const std::uint64_t trials = exhaustive ? total : 200;
        std::uniform_int_distribution<Residue> dist(0, ctx.field.modulus() - 1);
        std::size_t inverted = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            std::vector<Residue> c(ctx.dihedral.order(), 0);
            std::uint64_t rest = t;
            for (std::size_t i = 0; i < phi; ++i) {
                if (exhaustive) {
                    c[i] = static_cast<Residue>(rest % ctx.field.modulus());
                    rest /= ctx.field.modulus();
                } else {
                    c[i] = dist(ctx.rng);
                }
            }
            const AlgebraElem u = AlgebraElem(ctx.dihedral, ctx.field, c) * cat.e(j);
            if (u.is_zero()) continue;
            try {
                (void)invert_in_component(u, cat.e(j));
                ++inverted;
            } catch (const NotInvertible&) {
                return fail("nonzero element of F_q<a>e_" + std::to_string(j) + " is not invertible");
            }
        }
        detail << "e_" << j << ": dim " << dim << ", " << inverted << (exhaustive ? " (all)" : " sampled")
               << " inverted; ";
    }
    return pass(detail.str());
}

CheckResult check_matrix_units(Context& ctx) {
    const CentralCatalog cat = central_idempotents(ctx.field, ctx.dihedral);
    for (unsigned j = 1; j <= ctx.params.m; ++j) {
        const MatrixUnits mu = matrix_units(cat, j);
        const AlgebraElem zero(ctx.dihedral, ctx.field);
        for (int i = 1; i <= 2; ++i)
            for (int k = 1; k <= 2; ++k)
                for (int h = 1; h <= 2; ++h)
                    for (int l = 1; l <= 2; ++l)
                        if (!(mu.unit(i, k) * mu.unit(h, l) == (k == h ? mu.unit(i, l) : zero)))
                            return fail("identity fails in component " + std::to_string(j));
        if (!(mu.e11 + mu.e22 == cat.e(j))) return fail("e11 + e22 != e_j");
        const NonCentralGenerators gen = noncentral_generator(mu);
        if (!(gen.alpha * mu.e11 * gen.alpha_inv == mu.e11 - mu.e12)) return fail("conjugation");
        if (!(gen.f == closed_form_f(cat.e(j)))) return fail("closed form of f");
        if (is_central(mu.e11) || is_central(gen.f)) return fail("e11 or f is central");
    }
    return pass(std::to_string(ctx.params.m) + " components");
}

CheckResult check_central_codes(Context& ctx) {
    const CentralCatalog cat = central_idempotents(ctx.field, ctx.dihedral);
    std::ostringstream detail;
    std::size_t unknown = 0;
    for (unsigned j = 1; j <= ctx.params.m; ++j) {
        const MatrixUnits mu = matrix_units(cat, j);
        const std::size_t want_w = 4 * static_cast<std::size_t>(ipow(ctx.params.p, ctx.params.m - j));
        for (const AlgebraElem* x : {&mu.e11, &mu.e22}) {
            const LinearCode code = left_ideal_code(*x);
            if (code.dimension() != ctx.phi(j)) return fail("dim code(e11/e22) != phi(p^j) at j = " + std::to_string(j));
            try {
                const std::size_t w = min_weight(code, ctx.params.budget);
                if (w != want_w) {
                    return fail("j = " + std::to_string(j) + ": weight " + std::to_string(w) + " != " + std::to_string(want_w));
                }
            } catch (const BudgetExceeded&) {
                ++unknown;
            }
        }
        const LinearCode fcode = left_ideal_code(noncentral_generator(mu).f);
        if (fcode.dimension() != ctx.phi(j)) return fail("dim code(f) != phi(p^j)");
        detail << "j=" << j << ": [" << ctx.dihedral.order() << ", " << ctx.phi(j) << ", " << want_w << "]; ";
    }
    if (unknown) detail << unknown << " weights beyond budget";
    return pass(detail.str());
}

CheckResult check_f_basis(Context& ctx) {
    const CentralCatalog cat = central_idempotents(ctx.field, ctx.dihedral);
    for (unsigned j = 1; j <= ctx.params.m; ++j) {
        const AlgebraElem f = noncentral_generator(matrix_units(cat, j)).f;
        const std::size_t phi = ctx.phi(j);
        Matrix rows(ctx.field, phi, ctx.dihedral.order());
        for (std::size_t k = 0; k < phi; ++k) {
            const AlgebraElem ak = AlgebraElem::basis(ctx.dihedral.element(static_cast<std::int64_t>(k), 0), ctx.field);
            std::ranges::copy((ak * f).coeffs(), rows.row(k).begin());
        }
        const LinearCode spanned(ctx.dihedral, rows);
        if (spanned.dimension() != phi) return fail("{a^k f} has rank " + std::to_string(spanned.dimension()));
        if (!(spanned == left_ideal_code(f))) return fail("{a^k f} does not span (FD)f");
    }
    return pass();
}

CheckResult check_subgroup_pairs(Context& ctx) {
    std::size_t pairs = 0, weighed = 0, unknown = 0;
    for (const Group& g : {ctx.dihedral, Group::abelian(ctx.params.p, ctx.params.m)}) {
        const auto subs = all_subgroups(g);
        for (const auto& h : subs) {
            for (const auto& k : subs) {
                if (!h.is_subset_of(k)) continue;
                ++pairs;
                const SubgroupPairCode lc = subgroup_pair_code(g, ctx.field, h.elements, k.elements);
                const std::string tag = h.name + " in " + k.name;
                if (lc.code.dimension() != lc.predicted_dimension) return fail(tag + ": dimension");
                if (!lc.basis_independent || !lc.basis_spans) return fail(tag + ": predicted basis");
                if (lc.code.dimension() == 0) continue;
                try {
                    if (min_weight(lc.code, ctx.params.budget) != lc.predicted_weight) return fail(tag + ": weight");
                    ++weighed;
                } catch (const BudgetExceeded&) {
                    ++unknown;
                }
            }
        }
    }
    return pass(std::to_string(pairs) + " pairs, " + std::to_string(weighed) + " weights, " + std::to_string(unknown) +
                " beyond budget");
}

CheckResult check_gamma(Context& ctx) {
    const CentralCatalog cat = central_idempotents(ctx.field, ctx.dihedral);
    const AbelianCatalog ab = abelian_catalog(ctx.field, ctx.params.p, ctx.params.m);
    for (unsigned j = 1; j <= ctx.params.m; ++j) {
        const MatrixUnits mu = matrix_units(cat, j);
        const AlgebraElem* dihedral_side[2] = {&mu.e11, &mu.e22};
        for (int s = 0; s < 2; ++s) {
            const AlgebraElem& target = ab.idempotents[2 * j + s];
            // gamma(g e) = gamma(g) target for every g in D.
            for (const auto& g : ctx.dihedral.elements()) {
                const AlgebraElem lhs = AlgebraElem::basis(g, ctx.field) * *dihedral_side[s];
                const AlgebraElem mapped(ab.group, ctx.field, std::vector<Residue>(lhs.coeffs().begin(), lhs.coeffs().end()));
                if (!(mapped == AlgebraElem::basis(gamma(g, ab.group), ctx.field) * target)) {
                    return fail("gamma(g e) != gamma(g) e~ at j = " + std::to_string(j));
                }
            }
            const LinearCode image = gamma_image_code(left_ideal_code(*dihedral_side[s]));
            if (!(image == left_ideal_code(target))) return fail("gamma(code) is not the abelian ideal at j = " + std::to_string(j));
            for (const GroupElem& gen : {ab.group.rotation(), ab.group.reflection()}) {
                for (std::size_t r = 0; r < image.dimension(); ++r) {
                    const AlgebraElem row(ab.group, ctx.field,
                                          std::vector<Residue>(image.generator().row(r).begin(), image.generator().row(r).end()));
                    if (!image.contains(AlgebraElem::basis(gen, ctx.field) * row)) return fail("gamma image not an ideal");
                }
            }
            try {
                if (weight_distribution(image, ctx.params.budget) !=
                    weight_distribution(left_ideal_code(*dihedral_side[s]), ctx.params.budget)) {
                    return fail("gamma changed a weight distribution");
                }
            } catch (const BudgetExceeded&) {
            }
        }
    }
    return pass();
}

CheckResult check_survey(Context& ctx) {
    const AbelianCatalog ab = abelian_catalog(ctx.field, ctx.params.p, ctx.params.m);
    for (unsigned j = 0; j <= ctx.params.m; ++j) {
        const std::size_t want = j == 0 ? 1 : ctx.phi(j);
        if (ab.dimensions[2 * j] != want || ab.dimensions[2 * j + 1] != want) return fail("component dimensions");
    }
    const auto rows = enumerate_abelian_codes(ab, std::nullopt, ctx.params.budget);
    const std::size_t expected = (1U << ab.idempotents.size()) - 1;
    if (rows.size() != expected) return fail(std::to_string(rows.size()) + " rows, expected " + std::to_string(expected));
    std::map<std::size_t, std::size_t> best;
    std::size_t unknown = 0;
    for (const auto& r : rows) {
        if (!r.min_weight) {
            ++unknown;
            continue;
        }
        best[r.dimension] = std::max(best[r.dimension], *r.min_weight);
    }
    std::ostringstream detail;
    detail << rows.size() << " codes";
    if (unknown) detail << ", " << unknown << " weights beyond budget";
    detail << "; best d per k:";
    for (const auto& [k, d] : best) detail << " " << k << ":" << d;
    return pass(detail.str());
}

CheckResult check_flagship(Context& ctx) {
    const auto q = ctx.params.q;
    if (ctx.params.p != 3 || ctx.params.m != 2 || q == 2 || q == 3 || q == 5 || q == 7) {
        return skip("needs p = 3, m = 2 and characteristic outside {2, 3, 5, 7}");
    }
    const CentralCatalog cat = central_idempotents(ctx.field, ctx.dihedral);
    const LinearCode fcode = left_ideal_code(noncentral_generator(matrix_units(cat, 1)).f);
    if (fcode.length() != 18 || fcode.dimension() != 2) return fail("code(f) is not [18, 2]");
    const std::size_t d = min_weight(fcode, ctx.params.budget);
    if (d != 15) return fail("w(code(f)) = " + std::to_string(d));
    if (const auto bad = coset_slot_violations(fcode, ctx.dihedral); bad != 0) {
        return fail(std::to_string(bad) + " codewords break the coset-slot claim");
    }

    const AbelianCatalog ab = abelian_catalog(ctx.field, 3, 2);
    for (const auto& row : enumerate_abelian_codes(ab, 2, ctx.params.budget)) {
        if (!row.min_weight || *row.min_weight >= 13) return fail("dimension-2 abelian code with weight >= 13");
        const bool single = (row.mask & (row.mask - 1)) == 0;
        if (single && *row.min_weight != 12) return fail("dimension-2 minimal abelian code with weight != 12");
        const LinearCode other = left_ideal_code(ab.generator(row.mask));
        if (equivalence_necessary_check(fcode, other, ctx.params.budget) != Verdict::impossible) {
            return fail("code(f) not separated from abelian code " + std::to_string(row.mask));
        }
    }
    return pass("[18, 2, 15]; separated from every dimension-2 abelian code");
}

using CheckFn = std::function<CheckResult(Context&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> checks = {
        {"field-axioms", check_field_axioms},
        {"group-relations", check_group},
        {"algebra-properties", check_algebra},
        {"catalog", check_catalog},
        {"matrix-units", check_matrix_units},
        {"central-codes", check_central_codes},
        {"f-basis", check_f_basis},
        {"subgroup-pair", check_subgroup_pairs},
        {"gamma", check_gamma},
        {"survey", check_survey},
        {"flagship", check_flagship},
    };
    return checks;
}

}  // namespace

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::skip: return "SKIP";
    }
    return "?";
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<CheckResult> run_checks(const VerifyParams& params, const std::vector<std::string>& only) {
    for (const auto& name : only) {
        if (std::ranges::find(check_names(), name) == check_names().end()) {
            throw std::invalid_argument("unknown check '" + name + "'");
        }
    }
    if (!check_admissible(params.q, params.p, params.m)) {
        throw InadmissibleParameters("(q, p, m) = (" + std::to_string(params.q) + ", " + std::to_string(params.p) + ", " +
                                     std::to_string(params.m) + ") is not admissible");
    }
    Context ctx{params, PrimeField(params.q), Group::dihedral(params.p, params.m), std::mt19937_64(params.seed)};

    std::vector<CheckResult> results;
    for (const auto& [name, fn] : registry()) {
        if (!only.empty() && std::ranges::find(only, name) == only.end()) continue;
        CheckResult r;
        try {
            r = fn(ctx);
        } catch (const std::exception& e) {
            r = fail(std::string("exception: ") + e.what());
        }
        r.name = name;
        results.push_back(std::move(r));
    }
    return results;
}

std::string format_result(const CheckResult& r) {
    std::string line = std::string(to_string(r.status)) + " " + r.name;
    if (!r.detail.empty()) line += ": " + r.detail;
    return line;
}

std::size_t coset_slot_violations(const LinearCode& code, const Group& dihedral) {
    const auto h1 = dihedral.subgroup_H(1);
    const auto reps = left_transversal(dihedral, h1);
    std::size_t bad = 0;
    const auto total = code.size();
    if (!total) throw BudgetExceeded("code too large for the coset-slot scan");
    for_each_codeword(code, 1, *total, [&](std::uint64_t, std::span<const Residue> w) {
        std::size_t zero_slots = 0;
        bool constant = true;
        for (const GroupElem& r : reps) {
            const Residue first = w[r.index()];
            for (const GroupElem& h : h1) constant = constant && w[(r * h).index()] == first;
            if (first == 0) ++zero_slots;
        }
        if (!constant || zero_slots > 1) ++bad;
    });
    return bad;
}

}  // namespace dcodes
