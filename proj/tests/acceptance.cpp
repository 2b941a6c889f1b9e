// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "gensplit/selfcheck.hpp"

using namespace gensplit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool ok = false;
    std::string detail;
};

const Registry reg = Registry::builtin();

Outcome table_regeneration()
{
    auto t0 = Clock::now();
    auto rep = diff_table(reg);
    double dt = seconds_since(t0);
    // Coverage: every exceptional parabolic and every PGO+ selector row.
    std::set<std::string> selectors;
    int exceptional = 0;
    for (const auto& r : rep.records) {
        if (r.group.type.exceptional()) ++exceptional;
        if (r.group.type.family == Family::D) selectors.insert(r.selector);
    }
    Outcome o;
    o.ok = rep.mismatches() == 0 && exceptional == 2 + 4 + 6 + 7 + 8 && selectors.size() == 5 && dt < 1.0;
    o.detail = std::to_string(rep.records.size()) + " rows, " + std::to_string(rep.mismatches()) + " mismatches, " +
               std::to_string(selectors.size()) + " PGO+ selectors, " + std::to_string(dt) + " s";
    for (const auto& r : rep.records)
        if (!r.equal) o.detail += "\n    " + r.group_label + " i=" + std::to_string(r.i) + ": " + r.derived + " vs " + r.table;
    return o;
}

Outcome sigma_well_defined()
{
    auto t0 = Clock::now();
    auto s = sigma_sweep(reg, 16);
    double dt = seconds_since(t0);
    Outcome o{s.passed() && dt < 1.0, std::to_string(s.checked) + " (group, i, p) cases, " + std::to_string(s.failures.size()) +
                                          " failures, " + std::to_string(dt) + " s"};
    for (const auto& f : s.failures) o.detail += "\n    " + f;
    return o;
}

Outcome levi_oracle()
{
    auto s = levi_oracle_sweep(12, 1000);
    Outcome o{s.passed(), std::to_string(s.checked) + " subsets, " + std::to_string(s.failures.size()) + " disagreements"};
    for (const auto& f : s.failures) o.detail += "\n    " + f;
    return o;
}

// Θ = Π expected value built straight from the registry: every generator
// rational, plus the family's "all Tits algebras split" atom when the group
// has degree-1 generators.
Condition point_condition(const GroupSpec& g)
{
    std::vector<Condition> parts;
    bool degree_one = false;
    for (int p : reg.torsion_primes(g))
        for (const auto& gen : reg.presentation(g, p).generators) {
            parts.push_back(Condition::jzero(p, gen.index));
            degree_one |= gen.degree == 1;
        }
    if (degree_one && g.type.family == Family::A) parts.push_back(Condition::tits_split(1));
    if (degree_one && g.type.family == Family::C) parts.push_back(Condition::group_split());
    return normalize(Condition::all_of(parts));
}

Outcome degenerate_anchors()
{
    int checked = 0;
    std::vector<std::string> bad;
    for (const auto& t : sweep_types(16)) {
        for (auto form : Registry::forms_for(t)) {
            GroupSpec g{t, form};
            if (t.family == Family::D && form == IsogenyForm::Special) continue;
            ++checked;
            if (!(derive_condition(reg, g, SubsetTheta::of(t, {})) == Condition::always()))
                bad.push_back(group_name(g) + " Θ=∅");
            if (!(derive_condition(reg, g, SubsetTheta::all(t)) == point_condition(g)))
                bad.push_back(group_name(g) + " Θ=Π: " + to_string(derive_condition(reg, g, SubsetTheta::all(t))) + " vs " +
                              to_string(point_condition(g)));
        }
    }
    Outcome o{bad.empty(), std::to_string(checked) + " groups, " + std::to_string(bad.size()) + " failures"};
    for (const auto& b : bad) o.detail += "\n    " + b;
    return o;
}

Outcome corollary()
{
    auto rep = rost_scenario(reg);
    // Independent check of the p = 3 part.
    const GroupSpec e8{make_type(Family::E, 8), IsogenyForm::Adjoint};
    const Condition want =
        Condition::refined(Condition::jzero(3, 1), 3, Condition::all_of({Condition::jzero(3, 1), Condition::jzero(3, 2)}));
    bool found = false;
    const Condition derived = derive_condition(reg, e8, 7);
    for (const auto& c : derived.children())
        if (c == normalize(want)) found = true;
    return {rep.confirmed && found, rep.lines.size() > 1 ? rep.lines[1] : std::string("no report")};
}

Outcome evaluation_properties()
{
    std::mt19937 rng(99);
    auto groups = table_groups({std::nullopt, std::nullopt, 2, 12});
    int flips = 0, split_cases = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto& g = groups[rng() % groups.size()];
        int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(g.type.rank));
        auto cond = derive_condition(reg, g, i);
        GroupInvariants a;
        a.group = g;
        for (int p : reg.torsion_primes(g)) {
            std::vector<int> v;
            for (int k = 0; k < reg.presentation(g, p).rank(); ++k) v.push_back(rng() % 3 == 0 ? 1 : 0);
            a.j[p] = v;
        }
        for (int l = 1; l <= g.type.rank; ++l)
            if (rng() % 2) a.tits[l].split = rng() % 3 != 0;
        if (rng() % 2) a.split = rng() % 2 == 0;
        if (rng() % 2) a.characteristic = std::vector<int>{0, 2, 3, 5}[rng() % 4];
        GroupInvariants b = a;
        if (rng() % 2 && !b.j.empty()) {
            auto& v = std::next(b.j.begin(), static_cast<long>(rng() % b.j.size()))->second;
            v[rng() % v.size()] = 0;
        } else {
            b.tits[1 + static_cast<int>(rng() % static_cast<unsigned>(g.type.rank))].split = true;
        }
        if (evaluate(reg, cond, a).kind == Verdict::Kind::Split) {
            ++split_cases;
            if (evaluate(reg, cond, b).kind == Verdict::Kind::NotSplit) ++flips;
        }
    }

    int refined_rows = 0, unsound = 0;
    for (const auto& row : table_rows())
        for (const auto& c : row.constraints) {
            if (c.refined.empty()) continue;
            ++refined_rows;
            Condition base = jpattern(c.prime, c.pattern), strong = jpattern(c.prime, c.refined);
            Condition r = Condition::refined(base, c.prime, strong);
            if (!implies(strong, base) || !implies(r, strong, 0) || !implies(strong, r, 0) || !implies(r, base, c.prime) ||
                !implies(base, r, c.prime))
                ++unsound;
        }

    auto verdict = [](const char* t, int i, std::map<int, std::vector<int>> j) {
        GroupInvariants g;
        g.group = {parse_type(t), IsogenyForm::Adjoint};
        g.j = std::move(j);
        return evaluate(reg, derive_condition(reg, g.group, i), g).kind;
    };
    bool worked = verdict("E7", 3, {{2, {0, 1, 0, 0}}}) == Verdict::Kind::Split &&
                  verdict("F4", 4, {{2, {1}}}) == Verdict::Kind::NotSplit &&
                  verdict("E8", 7, {{3, {0, 1}}, {2, {0, 0, 0, 0}}}) == Verdict::Kind::Unknown;

    return {flips == 0 && split_cases > 0 && unsound == 0 && refined_rows > 0 && worked,
            "1000 mutations (" + std::to_string(split_cases) + " Split baselines, " + std::to_string(flips) +
                " flips), " + std::to_string(refined_rows) + " refined rows (" + std::to_string(unsound) +
                " unsound), worked examples " + (worked ? "ok" : "WRONG")};
}

Outcome fault_injection()
{
    struct Fault {
        std::string name;
        std::function<void(Registry&)> apply;
        std::string expect_in_message;
    };
    std::vector<Fault> faults = {
        {"E8 p=2 without 15", [](Registry& r) { r.set_degrees(make_type(Family::E, 8), IsogenyForm::Adjoint, 2, {3, 5, 9}); },
         "E8"},
        {"E7sc p=2 degree 5 -> 7",
         [](Registry& r) { r.set_degrees(make_type(Family::E, 7), IsogenyForm::SimplyConnected, 2, {3, 7, 9}); }, "E7"},
        {"F4 p=2 degree 3 -> 5", [](Registry& r) { r.set_degrees(make_type(Family::F, 4), IsogenyForm::Adjoint, 2, {5}); },
         "F4"},
    };
    std::string detail;
    bool ok = true;
    for (const auto& f : faults) {
        Registry r;
        f.apply(r);
        auto rep = diff_table(r);
        auto sweep = sigma_sweep(r);
        std::string first;
        for (const auto& rec : rep.records)
            if (!rec.equal && first.empty()) first = rec.group_label + " i=" + std::to_string(rec.i) + ": " + rec.notes.front();
        if (first.empty() && !sweep.failures.empty()) first = sweep.failures.front();
        bool caught = (rep.mismatches() > 0 || !sweep.passed()) && first.find(f.expect_in_message) != std::string::npos;
        ok &= caught;
        detail += "\n    " + f.name + ": " + (caught ? "caught" : "MISSED") + " (" + std::to_string(rep.mismatches()) +
                  " row mismatches, " + std::to_string(sweep.failures.size()) + " sigma failures) " + first;
    }
    return {ok, "3 corruptions" + detail};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 table regeneration", table_regeneration},
        {"2 sigma well-definedness", sigma_well_defined},
        {"3 Levi oracle equivalence", levi_oracle},
        {"4 degenerate anchors", degenerate_anchors},
        {"5 E8 corollary scenario", corollary},
        {"6 evaluation properties", evaluation_properties},
        {"7 fault injection", fault_injection},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail << "\n";
        failed += o.ok ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all acceptance criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
