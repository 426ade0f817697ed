#pragma once

#include <manetti/arith.hpp>

#include <compare>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace manetti {

/*
 * Hirzebruch-Jung continued fractions.
 *
 * A reduced fraction n/a with 1 <= a <= n expands uniquely as
 *
 *     n/a = b_1 - 1/(b_2 - 1/(... - 1/b_r)),   all b_i >= 2,
 *
 * written [b_1,...,b_r]. The string is the dual graph of the minimal
 * resolution of the cyclic quotient singularity 1/n(1,a): a chain of
 * rational curves of self-intersections -b_1,...,-b_r. The smooth case
 * n = a = 1 corresponds to the empty string.
 */

/// Reduced fraction n/a with 1 <= a <= n; a == n only for 1/1.
class Fraction {
public:
    Fraction(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_ < 1 || den_ < 1)
            throw invalid_input("Fraction: numerator and denominator must be positive");
        if (den_ > num_)
            throw invalid_input("Fraction: expected den <= num, got " + to_string());
        if (den_ == num_ && num_ != 1)
            throw invalid_input("Fraction: den == num only allowed for 1/1");
        if (gcd_of(num_, den_) != 1)
            throw invalid_input("Fraction: not reduced: " + to_string());
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    std::string to_string() const { return num_.str() + "/" + den_.str(); }

    friend bool operator==(const Fraction&, const Fraction&) = default;

private:
    Int num_;
    Int den_;
};

inline std::ostream& operator<<(std::ostream& os, const Fraction& f) {
    return os << f.to_string();
}

/// A string [b_1,...,b_r] with every entry >= 2; may be empty.
class HjString {
public:
    HjString() = default;

    explicit HjString(std::vector<Int> entries) : entries_(std::move(entries)) {
        for (const Int& b : entries_)
            if (b < 2) throw invalid_input("HjString: every entry must be >= 2");
    }

    HjString(std::initializer_list<long long> entries) {
        entries_.reserve(entries.size());
        for (long long b : entries) {
            if (b < 2) throw invalid_input("HjString: every entry must be >= 2");
            entries_.emplace_back(b);
        }
    }

    const std::vector<Int>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const Int& front() const { return entries_.front(); }
    const Int& back() const { return entries_.back(); }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) out += ",";
            out += entries_[i].str();
        }
        return out + "]";
    }

    friend bool operator==(const HjString&, const HjString&) = default;
    friend auto operator<=>(const HjString& a, const HjString& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<Int> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const HjString& s) {
    return os << s.to_string();
}

/// Expansion of n/a by repeated ceiling division; empty iff n = 1.
inline HjString hj_expand(const Fraction& f) {
    if (f.num() == 1) return HjString{};
    std::vector<Int> entries;
    Int n = f.num(), a = f.den();
    while (a != 0) {
        Int b = (n + a - 1) / a;
        entries.push_back(b);
        Int next = b * a - n;
        n = a;
        a = next;
    }
    return HjString(std::move(entries));
}

/// Value of [b_1,...,b_r], computed bottom-up; the empty string is 1/1.
inline Fraction hj_evaluate(const HjString& s) {
    Int p = 1, q = 0;
    for (auto it = s.entries().rbegin(); it != s.entries().rend(); ++it) {
        Int np = *it * p - q;
        q = p;
        p = np;
    }
    if (q == 0) q = 1;  // empty string
    return Fraction(p, q);
}

/// [b_r,...,b_1]: the same singularity with the coordinate roles swapped;
/// the value's denominator becomes the inverse of the old one mod n.
inline HjString reverse_string(const HjString& s) {
    std::vector<Int> rev(s.entries().rbegin(), s.entries().rend());
    return HjString(std::move(rev));
}

/// n/a -> n/(n-a); requires a < n. Involutive.
inline Fraction conjugate_fraction(const Fraction& f) {
    if (f.num() == 1)
        throw invalid_input("conjugate_fraction: 1/1 has no conjugate");
    return Fraction(f.num(), f.num() - f.den());
}

inline bool is_conjugate_pair(const HjString& s, const HjString& t) {
    if (s.empty() || t.empty())
        throw invalid_input("is_conjugate_pair: strings must be nonempty");
    Fraction fs = hj_evaluate(s);
    Fraction ft = hj_evaluate(t);
    return fs.num() == ft.num() && fs.den() + ft.den() == fs.num();
}

enum class GrowSide {
    left_raise,     // raise s's first entry, prepend 2 to t
    right_prepend,  // prepend 2 to s, raise t's first entry
};

/// One growth step on a conjugate pair: if s = n/a and t = n/(n-a) then
/// (b_1+1, b_2,...) = (n+a)/a and (2, c_1,...) = (n+a)/n form the next pair.
inline std::pair<HjString, HjString> grow_conjugate_pair(const HjString& s, const HjString& t,
                                                         GrowSide side) {
    if (!is_conjugate_pair(s, t))
        throw invalid_input("grow_conjugate_pair: strings are not conjugate");
    auto raise_first = [](const HjString& x) {
        std::vector<Int> e = x.entries();
        e.front() += 1;
        return HjString(std::move(e));
    };
    auto prepend_two = [](const HjString& x) {
        std::vector<Int> e;
        e.reserve(x.size() + 1);
        e.emplace_back(2);
        e.insert(e.end(), x.entries().begin(), x.entries().end());
        return HjString(std::move(e));
    };
    if (side == GrowSide::left_raise)
        return {raise_first(s), prepend_two(t)};
    return {prepend_two(s), raise_first(t)};
}

} // namespace manetti
