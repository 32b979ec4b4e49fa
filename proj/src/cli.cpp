#include "dcodes/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dcodes/code.hpp"
#include "dcodes/idempotents.hpp"
#include "dcodes/survey.hpp"
#include "dcodes/verify.hpp"

namespace dcodes::cli {

namespace {

struct JobSpec {
    std::uint64_t q = 11;
    std::uint64_t p = 3;
    unsigned m = 2;
    unsigned j = 1;
    std::vector<std::string> gens;
    std::string coeffs;
    std::size_t h_index = 0;
    std::size_t k_index = 0;
    std::string out_path;
    std::string table_path;
    std::optional<std::size_t> dim;
    std::vector<std::string> checks;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = VerifyParams{}.seed;
};

struct IoError : Error {
    using Error::Error;
};

struct TableError : Error {
    using Error::Error;
};

void add_field_options(CLI::App& cmd, JobSpec& spec) {
    cmd.add_option("--q", spec.q, "Field size (prime)")->required();
    cmd.add_option("--p", spec.p, "Odd prime p of the group order 2p^m")->required();
    cmd.add_option("--m", spec.m, "Exponent m >= 1")->required();
    cmd.add_option("--budget", spec.budget, "Max codewords (or messages) per exact weight computation")
        ->capture_default_str();
}

void add_generator_options(CLI::App& cmd, JobSpec& spec, bool many) {
    cmd.add_option("--j", spec.j, "Component index 1 <= j <= m")->capture_default_str();
    auto* gen = cmd.add_option("--gen", spec.gens, "Generator: e11, e22, f, ej, custom, subgroup-pair")
                    ->check(CLI::IsMember({"e11", "e22", "f", "ej", "custom", "subgroup-pair"}));
    if (!many) gen->expected(1);
    cmd.add_option("--coeffs", spec.coeffs, "Comma-separated coefficients in canonical order (gen=custom)");
    cmd.add_option("--H", spec.h_index, "Subgroup index of H as listed by `subgroups` (gen=subgroup-pair)");
    cmd.add_option("--K", spec.k_index, "Subgroup index of K as listed by `subgroups` (gen=subgroup-pair)");
}

void require_admissible(const JobSpec& spec) {
    if (!check_admissible(spec.q, spec.p, spec.m)) {
        throw InadmissibleParameters("(q, p, m) = (" + std::to_string(spec.q) + ", " + std::to_string(spec.p) + ", " +
                                     std::to_string(spec.m) + ") is not admissible: need q prime, gcd(2p^m, q) = 1 "
                                     "and q of order phi(p^m) modulo p^m");
    }
}

std::vector<Residue> parse_coeffs(const std::string& text, const PrimeField& field) {
    std::vector<Residue> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coefficient '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("bad coefficient '" + item + "'");
        out.push_back(field.reduce(v));
    }
    return out;
}

LinearCode build_code(const JobSpec& spec, const std::string& gen) {
    const PrimeField field(spec.q);
    const Group g = Group::dihedral(spec.p, spec.m);
    if (gen == "custom") return left_ideal_code(AlgebraElem(g, field, parse_coeffs(spec.coeffs, field)));
    if (gen == "subgroup-pair") {
        const auto subs = all_subgroups(g);
        if (spec.h_index >= subs.size() || spec.k_index >= subs.size()) {
            throw std::invalid_argument("subgroup index out of range (0.." + std::to_string(subs.size() - 1) + ")");
        }
        return subgroup_pair_code(g, field, subs[spec.h_index].elements, subs[spec.k_index].elements).code;
    }
    if (spec.j < 1 || spec.j > spec.m) throw std::invalid_argument("--j must satisfy 1 <= j <= m");
    const CentralCatalog cat = central_idempotents(field, g);
    if (gen == "ej") return left_ideal_code(cat.e(spec.j));
    const MatrixUnits mu = matrix_units(cat, spec.j);
    if (gen == "e11") return left_ideal_code(mu.e11);
    if (gen == "e22") return left_ideal_code(mu.e22);
    return left_ideal_code(noncentral_generator(mu).f);
}

// Weight as text: the number, "-" for the zero code. Throws BudgetExceeded.
std::string weight_text(const LinearCode& code, std::uint64_t budget) {
    if (code.dimension() == 0) return "-";
    return std::to_string(min_weight(code, budget));
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    body(os);
    os.flush();
    if (!os) throw IoError("failed writing '" + path + "'");
}

int cmd_construct(const JobSpec& spec, std::ostream& out) {
    require_admissible(spec);
    const LinearCode code = build_code(spec, spec.gens.empty() ? "f" : spec.gens.front());
    if (!spec.out_path.empty()) write_file(spec.out_path, [&](std::ostream& os) { write_generator_matrix(os, code); });
    try {
        const std::string d = weight_text(code, spec.budget);
        out << code.length() << ' ' << code.dimension() << ' ' << d << '\n';
    } catch (const BudgetExceeded&) {
        out << code.length() << ' ' << code.dimension() << " ?\n";
        throw;
    }
    return kOk;
}

int cmd_survey(const JobSpec& spec, std::ostream& out) {
    require_admissible(spec);
    const AbelianCatalog cat = abelian_catalog(PrimeField(spec.q), spec.p, spec.m);
    const auto rows = enumerate_abelian_codes(cat, spec.dim, spec.budget);
    if (!spec.out_path.empty()) write_file(spec.out_path, [&](std::ostream& os) { write_survey_table(os, cat, rows); });

    std::map<std::size_t, std::optional<std::size_t>> best;
    for (const auto& r : rows) {
        auto& slot = best[r.dimension];
        if (r.min_weight && (!slot || *slot < *r.min_weight)) slot = r.min_weight;
    }
    out << "codes " << rows.size() << '\n';
    for (const auto& [k, d] : best) {
        out << "dim " << k << " max_weight " << (d ? std::to_string(*d) : std::string("?")) << '\n';
    }
    return kOk;
}

int cmd_verify(const JobSpec& spec, std::ostream& out) {
    require_admissible(spec);
    VerifyParams params{spec.q, spec.p, spec.m, spec.budget, spec.seed};
    bool ok = true;
    for (const auto& r : run_checks(params, spec.checks)) {
        out << format_result(r) << '\n';
        ok = ok && r.status != CheckStatus::fail;
    }
    return ok ? kOk : kFailure;
}

// Reference rows keyed by (n, k).
std::map<std::pair<std::size_t, std::size_t>, std::size_t> read_reference_table(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open reference table '" + path + "'");
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long n = 0, k = 0, d = 0;
        std::string extra;
        if (!(ls >> n)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw TableError("line " + std::to_string(lineno) + ": expected `n k d_best`");
        }
        if (!(ls >> k >> d) || (ls >> extra) || n <= 0 || k < 0 || d < 0 || k > n || d > n) {
            throw TableError("line " + std::to_string(lineno) + ": expected `n k d_best`");
        }
        const auto key = std::make_pair(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
        if (auto it = table.find(key); it != table.end() && it->second != static_cast<std::size_t>(d)) {
            throw TableError("line " + std::to_string(lineno) + ": conflicting entry for n = " + std::to_string(n) +
                             ", k = " + std::to_string(k));
        }
        table[key] = static_cast<std::size_t>(d);
    }
    return table;
}

int cmd_compare(const JobSpec& spec, std::ostream& out) {
    require_admissible(spec);
    const auto table = read_reference_table(spec.table_path);
    const std::vector<std::string> gens = spec.gens.empty() ? std::vector<std::string>{"f"} : spec.gens;
    for (const auto& gen : gens) {
        const LinearCode code = build_code(spec, gen);
        const std::string d = weight_text(code, spec.budget);
        out << gen << ' ' << code.length() << ' ' << code.dimension() << ' ' << d << ' ';
        const auto it = table.find({code.length(), code.dimension()});
        if (it == table.end() || d == "-") {
            out << "- no reference\n";
            continue;
        }
        const std::size_t dv = std::stoul(d);
        out << it->second << ' ' << (dv == it->second ? "matches" : dv < it->second ? "below" : "above") << '\n';
    }
    return kOk;
}

int cmd_subgroups(const JobSpec& spec, std::ostream& out) {
    const Group g = Group::dihedral(spec.p, spec.m);
    const auto subs = all_subgroups(g);
    for (std::size_t i = 0; i < subs.size(); ++i) {
        out << i << ' ' << subs[i].order() << ' ' << subs[i].name << '\n';
    }
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Codes from left ideals of dihedral group algebras F_q D_{2p^m}", "dcodes"};
    app.require_subcommand(1);
    JobSpec spec;

    auto* construct = app.add_subcommand("construct", "Build a code, print `n k d`, optionally write its generator matrix");
    add_field_options(*construct, spec);
    add_generator_options(*construct, spec, false);
    construct->add_option("--out", spec.out_path, "Generator matrix output file");

    auto* survey = app.add_subcommand("survey", "Enumerate all abelian codes of F_q[C_{p^m} x C_2]");
    add_field_options(*survey, spec);
    survey->add_option("--dim", spec.dim, "Only codes of this dimension");
    survey->add_option("--out", spec.out_path, "Survey table output file");

    auto* verify = app.add_subcommand("verify", "Run the named self-checks");
    add_field_options(*verify, spec);
    verify->add_option("--check", spec.checks, "Run only these checks (repeatable)");
    verify->add_option("--seed", spec.seed, "Seed for sampled property checks")->capture_default_str();

    auto* compare = app.add_subcommand("compare", "Compare constructed codes with a reference table `n k d_best`");
    add_field_options(*compare, spec);
    add_generator_options(*compare, spec, true);
    compare->add_option("--table", spec.table_path, "Reference table file")->required();

    auto* subgroups = app.add_subcommand("subgroups", "List subgroups of D_{2p^m} with the indices used by --H/--K");
    subgroups->add_option("--p", spec.p)->required();
    subgroups->add_option("--m", spec.m)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kFailure;
    }

    try {
        if (construct->parsed()) return cmd_construct(spec, out);
        if (survey->parsed()) return cmd_survey(spec, out);
        if (verify->parsed()) return cmd_verify(spec, out);
        if (compare->parsed()) return cmd_compare(spec, out);
        if (subgroups->parsed()) return cmd_subgroups(spec, out);
    } catch (const InadmissibleParameters& e) {
        err << "error: " << e.what() << '\n';
        return kInadmissible;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const TableError& e) {
        err << "error: " << e.what() << '\n';
        return kBadTable;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}

}  // namespace dcodes::cli
