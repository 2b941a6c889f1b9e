#pragma once

// Flat key-value invariants files.
//
//   # comment
//   J2    = 0,1,0,0      J-invariant at p = 2, one entry per generator
//   A1    = split        Tits algebra A_1: split | nonsplit
//   expA1 = 2            exponent of A_1: positive integer | unknown
//   char  = 0            base field characteristic: 0 | prime | unknown
//   split = yes          explicit "G is split" flag: yes | no
//
// Keys are case-sensitive, each may appear once. Blank lines are ignored.

#include <charconv>
#include <istream>
#include <set>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "splitcrit.hpp"

namespace gensplit {

namespace detail {

inline std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline std::optional<long> to_long(std::string_view s)
{
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

} // namespace detail

class InvariantsReader {
public:
    explicit InvariantsReader(GroupSpec g, std::string source = "<invariants>") : source_(std::move(source))
    {
        inv_.group = g;
    }

    void read(std::istream& in)
    {
        std::string line;
        int n = 0;
        while (std::getline(in, line)) {
            ++n;
            if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
            if (detail::trim(line).empty()) continue;
            assign(line, n);
        }
    }

    /// One `key = value` assignment; `line` is reported in errors.
    void assign(const std::string& text, int line = 0)
    {
        auto eq = text.find('=');
        if (eq == std::string::npos) fail(line, "expected 'key = value', got '" + detail::trim(text) + "'");
        std::string key = detail::trim(std::string_view(text).substr(0, eq));
        std::string val = detail::trim(std::string_view(text).substr(eq + 1));
        if (key.empty()) fail(line, "missing key");
        if (val.empty()) fail(line, "missing value for '" + key + "'");
        if (!seen_.insert(key).second) fail(line, "duplicate key '" + key + "'");

        if (key == "char") {
            inv_.characteristic.reset();
            if (val == "unknown") return;
            auto v = detail::to_long(val);
            if (!v || (*v != 0 && !is_prime(static_cast<int>(*v))))
                fail(line, "char must be 0, a prime or 'unknown', got '" + val + "'");
            inv_.characteristic = static_cast<int>(*v);
        } else if (key == "split") {
            if (val == "yes") inv_.split = true;
            else if (val == "no") inv_.split = false;
            else fail(line, "split must be 'yes' or 'no', got '" + val + "'");
        } else if (key.size() > 4 && key.starts_with("expA")) {
            int l = index_of(key.substr(4), line, key);
            inv_.tits[l].exponent.reset();
            if (val == "unknown") return;
            auto v = detail::to_long(val);
            if (!v || *v < 1) fail(line, "exponent must be a positive integer or 'unknown', got '" + val + "'");
            inv_.tits[l].exponent = *v;
        } else if (key.size() > 1 && key[0] == 'A') {
            int l = index_of(key.substr(1), line, key);
            if (val == "split") inv_.tits[l].split = true;
            else if (val == "nonsplit") inv_.tits[l].split = false;
            else fail(line, "Tits algebra must be 'split' or 'nonsplit', got '" + val + "'");
        } else if (key.size() > 1 && key[0] == 'J') {
            int p = index_of(key.substr(1), line, key);
            if (!is_prime(p)) fail(line, "'" + key + "': " + std::to_string(p) + " is not a prime");
            std::vector<int> comps;
            std::stringstream ss(val);
            std::string item;
            while (std::getline(ss, item, ',')) {
                auto v = detail::to_long(detail::trim(item));
                if (!v || *v < 0) fail(line, "J components must be nonnegative integers, got '" + detail::trim(item) + "'");
                comps.push_back(static_cast<int>(*v));
            }
            if (val.back() == ',') fail(line, "trailing comma in '" + key + "'");
            inv_.j[p] = std::move(comps);
        } else {
            fail(line, "unknown key '" + key + "'");
        }
    }

    /// Like assign(), but a key read earlier is replaced instead of rejected.
    void override_with(const std::string& text)
    {
        if (auto eq = text.find('='); eq != std::string::npos) seen_.erase(detail::trim(std::string_view(text).substr(0, eq)));
        assign(text, 0);
    }

    const GroupInvariants& result() const { return inv_; }

private:
    GroupInvariants inv_;
    std::string source_;
    std::set<std::string> seen_;

    [[noreturn]] void fail(int line, const std::string& what) const { throw ParseError(source_, line, what); }

    int index_of(const std::string& digits, int line, const std::string& key) const
    {
        auto v = detail::to_long(digits);
        if (!v || *v < 1 || *v > 1000) fail(line, "bad index in key '" + key + "'");
        return static_cast<int>(*v);
    }
};

inline GroupInvariants read_invariants(std::istream& in, const GroupSpec& g, const std::string& source = "<invariants>")
{
    InvariantsReader r(g, source);
    r.read(in);
    return r.result();
}

} // namespace gensplit
