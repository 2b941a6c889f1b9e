#pragma once

// Command-line spellings of groups and subsets.
//
//   E8  B5  D6adj  D6-sc  B3-O+  D4PGO+  A3-pgl
//
// Without a suffix the form is the table's: adjoint, except O+ for B.

#include <sstream>
#include <string>

#include "chowreg.hpp"
#include "errors.hpp"
#include "rootsys.hpp"

namespace gensplit {

inline GroupSpec parse_group(const std::string& text)
{
    std::size_t k = 1;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
    if (text.empty() || k == 1) throw InvalidInput("cannot parse group '" + text + "' (expected e.g. E8, B5, D6sc)");
    DynkinType t = parse_type(text.substr(0, k));
    std::string suffix = text.substr(k);
    if (!suffix.empty() && suffix.front() == '-') suffix.erase(0, 1);
    GroupSpec g{t, t.family == Family::B ? IsogenyForm::Special : IsogenyForm::Adjoint};
    if (!suffix.empty()) {
        auto f = parse_form_tag(suffix);
        if (!f) throw InvalidInput("unknown isogeny form '" + suffix + "' in '" + text + "'");
        g.form = *f;
    }
    if (auto why = t.illegal_reason(); !why.empty()) throw InvalidInput("illegal Dynkin type " + t.name() + ": " + why);
    g.form = canonical_form(g.type, g.form);
    return g;
}

/// "1,2,5", "none" (empty) or "all".
inline SubsetTheta parse_theta(const DynkinType& t, const std::string& text)
{
    if (text == "all") return SubsetTheta::all(t);
    if (text == "none" || text.empty()) return SubsetTheta::of(t, {});
    std::vector<int> members;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw InvalidInput("bad node '" + item + "' in subset '" + text + "'");
        members.push_back(v);
    }
    return SubsetTheta::of(t, std::move(members));
}

} // namespace gensplit
