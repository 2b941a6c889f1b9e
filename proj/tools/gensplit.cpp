// gensplit: generic splitness of twisted flag varieties.
//
// Exit codes: 0 success / Split, 1 NotSplit, 2 Unknown, 3 usage error,
// 4 internal or registry inconsistency.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gensplit/invariants_io.hpp"
#include "gensplit/report.hpp"
#include "gensplit/spelling.hpp"

using namespace gensplit;

namespace {

constexpr int kOk = 0, kNotSplit = 1, kUnknown = 2, kUsage = 3, kInternal = 4;

struct Options {
    std::string format = "md";
    std::string registry_file;
    std::string group;
    std::optional<int> i;
    std::optional<std::string> theta;
    std::optional<int> p;
    std::string inv_file;
    std::vector<std::string> sets;
    std::optional<std::string> characteristic;
    std::string family;
    std::optional<int> n;
    bool diff = false;
};

Format format_of(const Options& o) { return o.format == "records" ? Format::Records : Format::Markdown; }

Registry load_registry(const Options& o)
{
    Registry reg = Registry::builtin();
    if (o.registry_file.empty()) return reg;
    std::ifstream in(o.registry_file);
    if (!in) throw InvalidInput("cannot open registry file '" + o.registry_file + "'");
    reg.load_overrides(in, o.registry_file);
    return reg;
}

SubsetTheta theta_of(const Options& o, const GroupSpec& g)
{
    if (o.i && o.theta) throw InvalidInput("give either --i or --theta, not both");
    if (o.i) return SubsetTheta::maximal(g.type, *o.i);
    if (o.theta) return parse_theta(g.type, *o.theta);
    throw InvalidInput("missing --i or --theta");
}

std::string theta_label(const SubsetTheta& t)
{
    if (auto i = t.maximal_index()) return "i=" + std::to_string(*i);
    return "theta={" + join_ints(t.members) + "}";
}

int cmd_conditions(const Options& o)
{
    Registry reg = load_registry(o);
    GroupSpec g = parse_group(o.group);
    SubsetTheta theta = theta_of(o, g);
    Condition c = derive_condition(reg, g, theta);
    if (format_of(o) == Format::Records)
        std::cout << "group=" << group_name(g) << "\t" << theta_label(theta) << "\tcondition=" << to_string(c) << "\n";
    else
        std::cout << to_string(c) << "\n";
    return kOk;
}

int cmd_check(const Options& o)
{
    Registry reg = load_registry(o);
    GroupSpec g = parse_group(o.group);
    SubsetTheta theta = theta_of(o, g);
    InvariantsReader reader(g, o.inv_file.empty() ? "<invariants>" : o.inv_file);
    if (!o.inv_file.empty()) {
        std::ifstream in(o.inv_file);
        if (!in) throw InvalidInput("cannot open invariants file '" + o.inv_file + "'");
        reader.read(in);
    }
    for (const auto& s : o.sets) reader.override_with(s);
    if (o.characteristic) reader.override_with("char = " + *o.characteristic);

    Condition c = derive_condition(reg, g, theta);
    Verdict v = evaluate(reg, c, reader.result());
    const std::string name = verdict_name(v.kind);
    if (format_of(o) == Format::Records) {
        std::cout << "verdict=" << name << "\tgroup=" << group_name(g) << "\t" << theta_label(theta)
                  << "\tcondition=" << to_string(c) << "\n";
        for (const auto& [atom, value] : v.atom_values) std::cout << "atom=" << atom << "\tvalue=" << value << "\n";
        for (const auto& r : v.reasons) std::cout << "reason=" << r << "\n";
    } else {
        std::cout << name << "\n\n";
        std::cout << "- group: " << group_name(g) << ", " << theta_label(theta) << "\n";
        std::cout << "- condition: `" << to_string(c) << "`\n";
        for (const auto& [atom, value] : v.atom_values) std::cout << "- `" << atom << "`: " << value << "\n";
        for (const auto& r : v.reasons) std::cout << "- unknown because: " << r << "\n";
    }
    switch (v.kind) {
    case Verdict::Kind::Split:
        return kOk;
    case Verdict::Kind::NotSplit:
        return kNotSplit;
    default:
        return kUnknown;
    }
}

DiffFilter filter_of(const Options& o)
{
    DiffFilter f;
    if (!o.family.empty()) {
        auto fam = family_from_letter(o.family[0]);
        if (!fam) throw InvalidInput("unknown family '" + o.family + "'");
        f.family = *fam;
        if (o.family.size() > 1) {
            DynkinType t = parse_type(o.family);
            if (!t.exceptional()) throw InvalidInput("use --n to select a classical group, e.g. --family D --n 6");
            f.rank = t.rank;
        }
    }
    if (o.n) {
        if (f.family && (*f.family == Family::E || *f.family == Family::F || *f.family == Family::G))
            throw InvalidInput("--n applies to classical families only");
        if (*o.n < 2) throw InvalidInput("--n must be at least 2");
        f.rank = *o.n;
        f.n_max = std::max(f.n_max, *o.n);
        if (!f.family) throw InvalidInput("--n needs --family A, B, C or D");
    }
    return f;
}

int cmd_table(const Options& o)
{
    Registry reg = load_registry(o);
    DiffReport rep = diff_table(reg, filter_of(o));
    render_table(std::cout, rep, o.diff, format_of(o));
    return o.diff && rep.mismatches() != 0 ? kInternal : kOk;
}

int cmd_levi(const Options& o)
{
    GroupSpec g = parse_group(o.group);
    SubsetTheta theta = theta_of(o, g);
    LeviDerived levi = levi_derived(g, theta);
    if (format_of(o) == Format::Records) {
        std::cout << "group=" << group_name(g) << "\t" << theta_label(theta) << "\tcomponents=" << levi.components.size()
                  << "\n";
        for (const auto& c : levi.components)
            std::cout << "component=" << c.type.name() << "\tnodes=" << join_ints(c.reading_order()) << "\n";
    } else {
        std::cout << levi.to_string() << "\n";
    }
    return kOk;
}

int cmd_sigma(const Options& o)
{
    Registry reg = load_registry(o);
    GroupSpec g = parse_group(o.group);
    SubsetTheta theta = theta_of(o, g);
    LeviDerived levi = levi_derived(g, theta);
    std::vector<int> primes;
    if (o.p) {
        if (!is_prime(*o.p)) throw InvalidInput(std::to_string(*o.p) + " is not a prime");
        primes.push_back(*o.p);
    } else {
        primes = reg.torsion_primes(g);
    }
    const bool md = format_of(o) == Format::Markdown;
    if (md) std::cout << "H0 = " << levi.to_string() << "\n";
    for (int p : primes) {
        SigmaAssignment s = sigma_map(reg, levi, p);
        if (md) {
            std::cout << "\np=" << p << ": ";
            if (s.entries.empty()) {
                std::cout << "empty (no generator of degree > 1 in Ch*(H0))\n";
                continue;
            }
            std::cout << s.entries.size() << " entries\n";
            for (const auto& e : s.entries)
                std::cout << "- y_" << e.h_index << " (degree " << e.h_degree << ", "
                          << levi.components[static_cast<std::size_t>(e.component)].to_string() << ") -> x_"
                          << e.g_index << "\n";
        } else {
            std::cout << "group=" << group_name(g) << "\t" << theta_label(theta) << "\tp=" << p
                      << "\tentries=" << s.entries.size() << "\n";
            for (const auto& e : s.entries)
                std::cout << "m=" << e.h_index << "\tdegree=" << e.h_degree << "\tcomponent="
                          << levi.components[static_cast<std::size_t>(e.component)].type.name()
                          << "\tsigma=" << e.g_index << "\n";
        }
    }
    return kOk;
}

int cmd_selftest(const Options& o)
{
    Registry reg = load_registry(o);
    SelftestReport rep = run_selftest(reg);
    render_selftest(std::cout, rep, format_of(o));
    return rep.passed() ? kOk : kInternal;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generic splitness of twisted flag varieties"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output encoding")->check(CLI::IsMember({"md", "records"}));
    app.add_option("--registry", o.registry_file, "Registry override file");

    auto with_group = [&](CLI::App* sub, bool needs_subset) {
        sub->add_option("group", o.group, "Group, e.g. E8, B5, D6sc")->required();
        if (needs_subset) {
            auto* oi = sub->add_option("--i", o.i, "Maximal parabolic type i");
            auto* ot = sub->add_option("--theta", o.theta, "Subset Θ of simple roots: 1,2,5 | none | all");
            oi->excludes(ot);
        }
    };

    auto* conditions = app.add_subcommand("conditions", "Print the generic splitness condition");
    with_group(conditions, true);
    auto* check = app.add_subcommand("check", "Evaluate the condition on given invariants");
    with_group(check, true);
    check->add_option("--inv", o.inv_file, "Invariants file")->check(CLI::ExistingFile);
    check->add_option("--set", o.sets, "Inline invariant, e.g. J2=0,1,0,0 (repeatable)");
    check->add_option("--char", o.characteristic, "Characteristic: 0, a prime, or unknown");
    auto* table = app.add_subcommand("table", "Regenerate the classification table");
    table->add_option("--family", o.family, "Family filter: A, B, C, D, E, E6, E7, E8, F4, G2");
    table->add_option("--n", o.n, "Classical parameter n");
    table->add_flag("--diff", o.diff, "Compare against the transcribed table");
    auto* levi = app.add_subcommand("levi", "Derived Levi subgroup components");
    with_group(levi, true);
    auto* sigma = app.add_subcommand("sigma", "Index map σ");
    with_group(sigma, true);
    sigma->add_option("--p", o.p, "Prime (default: every torsion prime)");
    auto* selftest = app.add_subcommand("selftest", "Run all internal consistency sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*conditions) return cmd_conditions(o);
        if (*check) return cmd_check(o);
        if (*table) return cmd_table(o);
        if (*levi) return cmd_levi(o);
        if (*sigma) return cmd_sigma(o);
        if (*selftest) return cmd_selftest(o);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kUsage;
    } catch (const Inconsistency& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
