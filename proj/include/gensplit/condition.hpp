#pragma once

// Symbolic generic-splitness conditions.
//
// Text form (prefix notation):
//   always | G-split | j[p,m]=0 | split(A_l) | gcd(exp A_l, i)=1
//   and(t, ...) | or(t, ...)
//   t | char!=c: t'        -- t' replaces t when char k != c
// The root combinator separates its children with ", ", nested ones with ",".

#include <algorithm>
#include <cctype>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace gensplit {

class Condition {
public:
    enum class Kind { JZero, TitsSplit, GcdOne, GroupSplit, And, Or, Always, Refined };

    static Condition always() { return Condition(Kind::Always); }
    static Condition group_split() { return Condition(Kind::GroupSplit); }

    /// j_m(G) = 0 at the prime p.
    static Condition jzero(int p, int m)
    {
        if (!prime(p)) throw InvalidInput("j[" + std::to_string(p) + "," + std::to_string(m) + "]: not a prime");
        if (m < 1) throw InvalidInput("generator indices start at 1");
        Condition c(Kind::JZero);
        c.a_ = p;
        c.b_ = m;
        return c;
    }

    /// [A_l] = 0.
    static Condition tits_split(int l)
    {
        if (l < 1) throw InvalidInput("weight indices start at 1");
        Condition c(Kind::TitsSplit);
        c.a_ = l;
        return c;
    }

    /// gcd(exp A_l, i) = 1.
    static Condition gcd_one(int l, int i)
    {
        if (l < 1 || i < 1) throw InvalidInput("gcd(exp A_l, i) needs l, i >= 1");
        Condition c(Kind::GcdOne);
        c.a_ = l;
        c.b_ = i;
        return c;
    }

    static Condition all_of(std::vector<Condition> children)
    {
        if (children.empty()) return always();
        Condition c(Kind::And);
        c.children_ = std::move(children);
        return c;
    }

    static Condition any_of(std::vector<Condition> children)
    {
        if (children.empty()) throw InvalidInput("or() needs at least one operand");
        Condition c(Kind::Or);
        c.children_ = std::move(children);
        return c;
    }

    /// `base`, replaced by `stronger` whenever the characteristic differs from `excluded_char`.
    static Condition refined(Condition base, int excluded_char, Condition stronger)
    {
        if (!prime(excluded_char)) throw InvalidInput("char!=" + std::to_string(excluded_char) + ": not a prime");
        Condition c(Kind::Refined);
        c.a_ = excluded_char;
        c.children_ = {std::move(base), std::move(stronger)};
        return c;
    }

    Kind kind() const { return kind_; }
    bool is_atom() const { return kind_ == Kind::JZero || kind_ == Kind::TitsSplit || kind_ == Kind::GcdOne || kind_ == Kind::GroupSplit; }

    int prime() const { return a_; }
    int index() const { return b_; }
    int weight() const { return a_; }
    int gcd_with() const { return b_; }
    int excluded_char() const { return a_; }

    const std::vector<Condition>& children() const { return children_; }
    const Condition& base() const { return children_.at(0); }
    const Condition& stronger() const { return children_.at(1); }

    bool operator==(const Condition& o) const { return (*this <=> o) == 0; }

    /// Canonical order used by normalize(): atoms before combinators; JZero
    /// by prime descending, then index. A refined node sorts with its base.
    std::strong_ordering operator<=>(const Condition& o) const
    {
        const Condition& l = kind_ == Kind::Refined ? base() : *this;
        const Condition& r = o.kind_ == Kind::Refined ? o.base() : o;
        if (&l != this || &r != &o) {
            if (auto c = l <=> r; c != 0) return c;
            if (auto c = (kind_ == Kind::Refined) <=> (o.kind_ == Kind::Refined); c != 0) return c;
            if (kind_ != Kind::Refined) return std::strong_ordering::equal;
            if (auto c = a_ <=> o.a_; c != 0) return c;
            return stronger() <=> o.stronger();
        }
        if (auto c = static_cast<int>(kind_) <=> static_cast<int>(o.kind_); c != 0) return c;
        switch (kind_) {
        case Kind::JZero:
            if (auto c = o.a_ <=> a_; c != 0) return c;
            return b_ <=> o.b_;
        case Kind::TitsSplit:
        case Kind::GcdOne:
            if (auto c = a_ <=> o.a_; c != 0) return c;
            return b_ <=> o.b_;
        case Kind::And:
        case Kind::Or:
            return std::lexicographical_compare_three_way(children_.begin(), children_.end(), o.children_.begin(),
                                                          o.children_.end());
        default:
            return std::strong_ordering::equal;
        }
    }

private:
    explicit Condition(Kind k) : kind_(k) {}

    static bool prime(int p)
    {
        if (p < 2) return false;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    Kind kind_;
    int a_ = 0;
    int b_ = 0;
    std::vector<Condition> children_;
};

inline Condition normalize(const Condition& c)
{
    using K = Condition::Kind;
    switch (c.kind()) {
    case K::And:
    case K::Or: {
        const bool conj = c.kind() == K::And;
        std::vector<Condition> flat;
        for (const auto& ch : c.children()) {
            Condition n = normalize(ch);
            if (n.kind() == K::Always) {
                if (conj) continue;
                return Condition::always();
            }
            if (n.kind() == c.kind())
                flat.insert(flat.end(), n.children().begin(), n.children().end());
            else
                flat.push_back(std::move(n));
        }
        std::sort(flat.begin(), flat.end());
        flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
        if (flat.empty()) return Condition::always();
        if (flat.size() == 1) return flat.front();
        return conj ? Condition::all_of(std::move(flat)) : Condition::any_of(std::move(flat));
    }
    case K::Refined: {
        Condition base = normalize(c.base());
        Condition stronger = normalize(c.stronger());
        if (base == stronger) return base;
        return Condition::refined(std::move(base), c.excluded_char(), std::move(stronger));
    }
    case K::GcdOne:
        // gcd(x, 1) = 1 for every exponent x.
        return c.gcd_with() == 1 ? Condition::always() : c;
    default:
        return c;
    }
}

namespace detail {

inline std::string render(const Condition& c, bool root)
{
    using K = Condition::Kind;
    switch (c.kind()) {
    case K::Always:
        return "always";
    case K::GroupSplit:
        return "G-split";
    case K::JZero:
        return "j[" + std::to_string(c.prime()) + "," + std::to_string(c.index()) + "]=0";
    case K::TitsSplit:
        return "split(A_" + std::to_string(c.weight()) + ")";
    case K::GcdOne:
        return "gcd(exp A_" + std::to_string(c.weight()) + ", " + std::to_string(c.gcd_with()) + ")=1";
    case K::And:
    case K::Or: {
        std::string s = c.kind() == K::And ? "and(" : "or(";
        for (std::size_t k = 0; k < c.children().size(); ++k) {
            if (k) s += root ? ", " : ",";
            s += render(c.children()[k], false);
        }
        return s + ")";
    }
    case K::Refined: {
        // The parser groups refinements to the right, so a refined base needs brackets.
        std::string base = render(c.base(), root);
        if (c.base().kind() == K::Refined) base = "and(" + base + ")";
        return base + " | char!=" + std::to_string(c.excluded_char()) + ": " + render(c.stronger(), false);
    }
    }
    return "?";
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Condition parse()
    {
        Condition c = term();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing text");
        return c;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw InvalidInput("condition parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                           std::string(s_) + "'");
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(std::string_view lit)
    {
        skip_ws();
        if (s_.substr(pos_, lit.size()) == lit) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view lit)
    {
        if (!accept(lit)) fail("expected '" + std::string(lit) + "'");
    }

    int number()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_ || pos_ - start > 9) fail("expected a number");
        return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }

    std::vector<Condition> operands()
    {
        expect("(");
        std::vector<Condition> out{term()};
        while (accept(",")) out.push_back(term());
        expect(")");
        return out;
    }

    Condition primary()
    {
        if (accept("always")) return Condition::always();
        if (accept("G-split")) return Condition::group_split();
        if (accept("and")) return Condition::all_of(operands());
        if (accept("or")) return Condition::any_of(operands());
        if (accept("j[")) {
            int p = number();
            expect(",");
            int m = number();
            expect("]=0");
            return Condition::jzero(p, m);
        }
        if (accept("split(A_")) {
            int l = number();
            expect(")");
            return Condition::tits_split(l);
        }
        if (accept("gcd(exp A_")) {
            int l = number();
            expect(",");
            int i = number();
            expect(")=1");
            return Condition::gcd_one(l, i);
        }
        fail("expected a condition");
    }

    Condition term()
    {
        Condition c = primary();
        while (accept("|")) {
            expect("char!=");
            int ch = number();
            expect(":");
            c = Condition::refined(std::move(c), ch, term());
        }
        return c;
    }
};

} // namespace detail

inline std::string to_string(const Condition& c) { return detail::render(c, true); }

inline Condition parse_condition(std::string_view s) { return detail::Parser(s).parse(); }

/// Distinct atoms occurring anywhere in `c`, including inside refinements.
inline std::vector<Condition> atoms(const Condition& c)
{
    std::set<Condition> out;
    std::function<void(const Condition&)> walk = [&](const Condition& x) {
        if (x.is_atom()) out.insert(x);
        for (const auto& ch : x.children()) walk(ch);
    };
    walk(c);
    return {out.begin(), out.end()};
}

/// Three-valued truth with an explanation for the Unknown case.
struct Truth {
    enum class Value { False, Unknown, True };
    Value value = Value::Unknown;
    std::vector<std::string> reasons;

    static Truth of(bool b) { return Truth{b ? Value::True : Value::False, {}}; }
    static Truth unknown(std::string why) { return Truth{Value::Unknown, {std::move(why)}}; }

    bool is_true() const { return value == Value::True; }
    bool is_false() const { return value == Value::False; }
    bool is_unknown() const { return value == Value::Unknown; }
};

/// Supplies atom truth values and the (possibly unknown) characteristic.
struct Valuation {
    std::function<Truth(const Condition&)> atom;
    std::optional<int> characteristic;
};

/// Kleene evaluation. A refinement applies when the characteristic is known
/// and differs from the excluded one; with unknown characteristic both
/// readings are evaluated and must agree.
inline Truth evaluate(const Condition& c, const Valuation& v)
{
    using K = Condition::Kind;
    using V = Truth::Value;
    switch (c.kind()) {
    case K::Always:
        return Truth::of(true);
    case K::And:
    case K::Or: {
        const bool conj = c.kind() == K::And;
        Truth acc = Truth::of(conj);
        for (const auto& ch : c.children()) {
            Truth t = evaluate(ch, v);
            if (conj ? t.is_false() : t.is_true()) return t;
            if (t.is_unknown()) {
                acc.value = V::Unknown;
                acc.reasons.insert(acc.reasons.end(), t.reasons.begin(), t.reasons.end());
            }
        }
        return acc;
    }
    case K::Refined: {
        if (v.characteristic) {
            if (*v.characteristic != c.excluded_char()) return evaluate(c.stronger(), v);
            return evaluate(c.base(), v);
        }
        Truth b = evaluate(c.base(), v);
        Truth s = evaluate(c.stronger(), v);
        if (b.value == s.value) return b;
        if (b.is_unknown()) return b;
        if (s.is_unknown()) return s;
        return Truth::unknown("characteristic unknown: '" + to_string(c.base()) + "' is " +
                              (b.is_true() ? "true" : "false") + " but the char!=" +
                              std::to_string(c.excluded_char()) + " refinement '" + to_string(c.stronger()) +
                              "' is " + (s.is_true() ? "true" : "false"));
    }
    default:
        return v.atom(c);
    }
}

/// Boolean evaluation with every atom decided by `assignment` and the
/// characteristic fixed; used for truth-table checks.
inline bool evaluate_bool(const Condition& c, const std::map<Condition, bool>& assignment, std::optional<int> ch)
{
    Valuation v{[&](const Condition& a) { return Truth::of(assignment.at(a)); }, ch};
    return evaluate(c, v).is_true();
}

/// True when `strong` implies `weak` for every assignment of their atoms.
/// The atom count is capped to keep the table finite and small.
inline bool implies(const Condition& strong, const Condition& weak, std::optional<int> ch = std::nullopt)
{
    auto all = atoms(Condition::all_of({strong, weak}));
    if (all.size() > 20) throw InvalidInput("too many atoms for a truth-table check");
    const std::uint32_t rows = 1u << all.size();
    for (std::uint32_t mask = 0; mask < rows; ++mask) {
        std::map<Condition, bool> asg;
        for (std::size_t k = 0; k < all.size(); ++k) asg[all[k]] = (mask >> k) & 1u;
        if (evaluate_bool(strong, asg, ch) && !evaluate_bool(weak, asg, ch)) return false;
    }
    return true;
}

} // namespace gensplit
