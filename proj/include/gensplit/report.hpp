#pragma once

// Output encodings shared by the CLI and the tests.
//
// md:      human-readable markdown.
// records: one line per record, tab-separated key=value fields in a fixed
//          order. Values never contain tabs or newlines.

#include <ostream>
#include <string>
#include <vector>

#include "selfcheck.hpp"
#include "splitcrit.hpp"

namespace gensplit {

enum class Format { Markdown, Records };

inline std::string join_ints(const std::vector<int>& v, const char* sep = ",")
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
    return s;
}

/// Markdown table cells cannot hold a bare '|'.
inline std::string md_cell(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

inline void render_table(std::ostream& os, const DiffReport& rep, bool diff, Format f)
{
    if (f == Format::Records) {
        for (const auto& r : rep.records) {
            os << "group=" << r.group_label << "\ti=" << r.i << "\tprimes=" << join_ints(r.primes)
               << "\tselector=" << r.selector << "\tderived=" << r.derived;
            if (diff) os << "\ttable=" << r.table << "\tequal=" << (r.equal ? "yes" : "no");
            if (diff && !r.notes.empty()) {
                os << "\tnote=";
                for (std::size_t k = 0; k < r.notes.size(); ++k) os << (k ? "; " : "") << r.notes[k];
            }
            os << "\n";
        }
        if (diff) os << "summary\trows=" << rep.records.size() << "\tmismatches=" << rep.mismatches() << "\n";
        return;
    }
    os << (diff ? "| group | i | row | derived | table | match |\n|---|---|---|---|---|---|\n"
                : "| group | i | row | condition |\n|---|---|---|---|\n");
    for (const auto& r : rep.records) {
        os << "| " << r.group_label << " | " << r.i << " | " << r.selector << " | `" << md_cell(r.derived) << "` |";
        if (diff) os << " `" << md_cell(r.table) << "` | " << (r.equal ? "yes" : "**no**") << " |";
        os << "\n";
    }
    if (!diff) return;
    os << "\n";
    if (rep.mismatches() == 0) {
        os << "all rows match (" << rep.records.size() << " rows)\n";
        return;
    }
    os << rep.mismatches() << " of " << rep.records.size() << " rows do not match\n";
    for (const auto& r : rep.records) {
        if (r.equal) continue;
        for (const auto& n : r.notes) os << "- " << r.group_label << " i=" << r.i << ": " << n << "\n";
    }
}

inline void render_selftest(std::ostream& os, const SelftestReport& rep, Format f)
{
    auto status = [](bool ok) { return ok ? "pass" : "FAIL"; };
    if (f == Format::Records) {
        os << "check=table-diff\tstatus=" << status(rep.diff.mismatches() == 0) << "\tchecked=" << rep.diff.records.size()
           << "\tfailures=" << rep.diff.mismatches() << "\n";
        for (const auto& s : rep.sweeps) {
            os << "check=" << s.name << "\tstatus=" << status(s.passed()) << "\tchecked=" << s.checked
               << "\tfailures=" << s.failures.size() << "\n";
            for (const auto& msg : s.failures) os << "failure=" << s.name << "\tdetail=" << msg << "\n";
        }
        os << "check=corollary-scenario\tstatus=" << status(rep.scenario.confirmed) << "\n";
        for (const auto& k : rep.unvalidated) os << "unvalidated=" << k.to_string() << "\n";
        return;
    }
    os << "# selftest\n\n";
    os << "- table diff: " << status(rep.diff.mismatches() == 0) << " (" << rep.diff.records.size() << " rows, "
       << rep.diff.mismatches() << " mismatches)\n";
    for (const auto& s : rep.sweeps) {
        os << "- " << s.name << ": " << status(s.passed()) << " (" << s.checked << " cases)\n";
        for (const auto& msg : s.failures) os << "  - " << msg << "\n";
    }
    os << "- E8 corollary scenario: " << status(rep.scenario.confirmed) << "\n";
    for (const auto& l : rep.scenario.lines) os << "  - " << l << "\n";
    os << "\n## unvalidated registry entries (" << rep.unvalidated.size() << ")\n\n";
    os << "No table row exercises these keys; their data is unchecked.\n\n";
    for (const auto& k : rep.unvalidated) os << "- " << k.to_string() << "\n";
}

} // namespace gensplit
