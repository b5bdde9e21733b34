#pragma once

// The unitary dual as a data model: Speh factors a(m,d) (the d x m box pulled
// back through the Jucys-Murphy surjection), optional imaginary central
// twists y, complementary-series pairs cs(a(m,d), nu) with 0 < nu < 1/2, and
// multisets of these as full modules. Central characters concatenate factor
// strings; the centering constant is c = (d-m)/2, which makes the box content
// equal to the middle element of the hook partition on the nose.
//
// Module spec grammar (CLI and file format):
//   factor  := "a(" m "," d ")" [ "@y=" rational ] | "cs(" factor "," nu ")"
//   module  := factor { "*" factor }

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>
#include <stdexcept>

#include "hecke/partition.hpp"
#include "hecke/symfunc.hpp"

namespace hecke {

struct SpehFactor {
    int m = 1;  // row length of the box
    int d = 1;  // number of rows
    Rational y; // imaginary part of the central twist, 0 for real modules

    SpehFactor() = default;
    SpehFactor(int m_, int d_, Rational y_ = Rational(0)) : m(m_), d(d_), y(std::move(y_)) {
        if (m < 1 || d < 1) throw std::invalid_argument("SpehFactor: m, d must be positive");
    }

    int size() const { return m * d; }

    Partition box() const { return Partition(std::vector<int>(d, m)); }

    // hook(m^d) = (m+d-1, m+d-3, ..., |m-d|+1)
    DistinctPartition hook_string() const { return hook_partition(box()); }

    std::string to_string() const {
        std::string s = "a(" + std::to_string(m) + "," + std::to_string(d) + ")";
        if (!y.is_zero()) s += "@y=" + y.to_string();
        return s;
    }

    friend bool operator==(const SpehFactor& a, const SpehFactor& b) {
        return a.m == b.m && a.d == b.d && a.y == b.y;
    }
    friend bool operator<(const SpehFactor& a, const SpehFactor& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        if (a.m != b.m) return a.m > b.m;
        return a.y < b.y;
    }
};

struct ComplementaryFactor {
    SpehFactor base;
    Rational nu;  // strictly inside (0, 1/2)

    ComplementaryFactor() = default;
    ComplementaryFactor(SpehFactor b, Rational nu_) : base(std::move(b)), nu(std::move(nu_)) {}

    int size() const { return 2 * base.size(); }

    std::string to_string() const {
        return "cs(" + base.to_string() + "," + nu.to_string() + ")";
    }

    friend bool operator==(const ComplementaryFactor& a, const ComplementaryFactor& b) {
        return a.base == b.base && a.nu == b.nu;
    }
    friend bool operator<(const ComplementaryFactor& a, const ComplementaryFactor& b) {
        if (!(a.base == b.base)) return a.base < b.base;
        return a.nu < b.nu;
    }
};

using Factor = std::variant<SpehFactor, ComplementaryFactor>;

inline int factor_size(const Factor& f) {
    return std::visit([](const auto& x) { return x.size(); }, f);
}

inline std::string factor_to_string(const Factor& f) {
    return std::visit([](const auto& x) { return x.to_string(); }, f);
}

// multiset of factors; order is normalized away on construction
class UnitaryModule {
public:
    UnitaryModule() = default;

    explicit UnitaryModule(std::vector<Factor> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) throw std::invalid_argument("UnitaryModule: no factors");
        std::sort(factors_.begin(), factors_.end(), factor_less);
    }

    const std::vector<Factor>& factors() const { return factors_; }

    int n() const {
        int s = 0;
        for (const Factor& f : factors_) s += factor_size(f);
        return s;
    }

    bool speh_only() const {
        for (const Factor& f : factors_)
            if (!std::holds_alternative<SpehFactor>(f)) return false;
        return true;
    }

    bool real() const {  // every factor has y = 0
        for (const Factor& f : factors_) {
            const SpehFactor* s = std::get_if<SpehFactor>(&f);
            const Rational& y = s ? s->y : std::get<ComplementaryFactor>(f).base.y;
            if (!y.is_zero()) return false;
        }
        return true;
    }

    std::string to_string() const {
        std::string out;
        for (const Factor& f : factors_) {
            if (!out.empty()) out += "*";
            out += factor_to_string(f);
        }
        return out;
    }

    friend bool operator==(const UnitaryModule& a, const UnitaryModule& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator<(const UnitaryModule& a, const UnitaryModule& b) {
        return std::lexicographical_compare(a.factors_.begin(), a.factors_.end(),
                                            b.factors_.begin(), b.factors_.end(), factor_less);
    }

private:
    std::vector<Factor> factors_;

    static bool factor_less(const Factor& a, const Factor& b) {
        bool a_speh = std::holds_alternative<SpehFactor>(a);
        bool b_speh = std::holds_alternative<SpehFactor>(b);
        if (a_speh != b_speh) return a_speh;  // Speh factors first
        if (a_speh) return std::get<SpehFactor>(a) < std::get<SpehFactor>(b);
        return std::get<ComplementaryFactor>(a) < std::get<ComplementaryFactor>(b);
    }
};

// A central character with an imaginary part: entries re_k + i*im_k, compared
// as a multiset of complex pairs.
class CentralCharacter {
public:
    CentralCharacter() = default;
    explicit CentralCharacter(std::vector<std::pair<Rational, Rational>> entries)
        : entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return b.first < a.first;
            return b.second < a.second;
        });
    }

    const std::vector<std::pair<Rational, Rational>>& entries() const { return entries_; }

    bool is_real() const {
        for (const auto& [re, im] : entries_)
            if (!im.is_zero()) return false;
        return true;
    }

    CharacterVector real_part() const {
        std::vector<Rational> v;
        v.reserve(entries_.size());
        for (const auto& [re, im] : entries_) v.push_back(re);
        return CharacterVector(std::move(v));
    }

    // <nu, nu> under the bilinear (not hermitian) form: sum (re + i im)^2
    std::pair<Rational, Rational> norm_squared() const {
        Rational re, im;
        for (const auto& [a, b] : entries_) {
            re += a * a - b * b;
            im += Rational(2) * a * b;
        }
        return {re, im};
    }

    friend bool operator==(const CentralCharacter& a, const CentralCharacter& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<std::pair<Rational, Rational>> entries_;
};

// central character of a(m,d): h_{hook(m^d)} shifted by i*y
inline CentralCharacter speh_central_character(const SpehFactor& f) {
    std::vector<std::pair<Rational, Rational>> entries;
    for (const Rational& r : c_content(f.box(), Rational(f.d - f.m, 2)))
        entries.emplace_back(r, f.y);
    return CentralCharacter(std::move(entries));
}

inline CentralCharacter central_character(const UnitaryModule& X) {
    std::vector<std::pair<Rational, Rational>> entries;
    for (const Factor& f : X.factors()) {
        if (const SpehFactor* s = std::get_if<SpehFactor>(&f)) {
            CentralCharacter c = speh_central_character(*s);
            for (const auto& e : c.entries()) entries.push_back(e);
        } else {
            const ComplementaryFactor& cf = std::get<ComplementaryFactor>(f);
            CentralCharacter base = speh_central_character(cf.base);
            for (const auto& [re, im] : base.entries()) {
                entries.emplace_back(re + cf.nu, im);
                entries.emplace_back(re - cf.nu, im);
            }
        }
    }
    return CentralCharacter(std::move(entries));
}

struct LanglandsDatum {
    Composition lambda;                                // composition of n
    std::vector<std::pair<Rational, Rational>> nu;     // complex parameters per factor

    // dominance: real parts weakly decreasing
    bool dominant() const {
        for (size_t i = 1; i < nu.size(); ++i)
            if (nu[i - 1].first < nu[i].first) return false;
        return true;
    }
};

// a(m,d) = L_{lambda^t}((m-1)/2, (m-3)/2, ..., -(m-1)/2) with lambda^t = (d^m)
inline LanglandsDatum speh_langlands(const SpehFactor& f) {
    if (!f.y.is_zero())
        throw std::invalid_argument("speh_langlands: only real Speh factors supported");
    LanglandsDatum out;
    out.lambda = Composition(std::vector<int>(f.m, f.d));
    for (int j = 0; j < f.m; ++j) out.nu.emplace_back(Rational(f.m - 1 - 2 * j, 2), Rational(0));
    return out;
}

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

inline ValidationReport validate_unitary(const UnitaryModule& X) {
    ValidationReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };
    for (const Factor& f : X.factors()) {
        if (const ComplementaryFactor* cf = std::get_if<ComplementaryFactor>(&f)) {
            if (!(Rational(0) < cf->nu) || !(cf->nu < Rational(1, 2)))
                fail(cf->to_string() + ": nu must satisfy 0 < nu < 1/2");
            if (cf->base.m < 1 || cf->base.d < 1) fail(cf->to_string() + ": m, d must be positive");
        } else {
            const SpehFactor& s = std::get<SpehFactor>(f);
            if (s.m < 1 || s.d < 1) fail(s.to_string() + ": m, d must be positive");
        }
    }
    int total = 0;
    for (const Factor& f : X.factors()) total += factor_size(f);
    if (total != X.n()) fail("factor sizes do not sum to n");
    if (total < 1) fail("module must have positive size");
    return rep;
}

// restriction to the symmetric group: only for real Speh-only modules, where
// each factor restricts to the box type and induction is Littlewood-Richardson
inline MultiplicityMap restriction_to_W(const UnitaryModule& X) {
    if (!X.speh_only())
        throw std::invalid_argument("restriction_to_W: complementary factor present");
    if (!X.real())
        throw std::invalid_argument("restriction_to_W: imaginary twist present");
    std::vector<Partition> boxes;
    for (const Factor& f : X.factors()) boxes.push_back(std::get<SpehFactor>(f).box());
    return lr_induce(boxes);
}

// ---- module spec parser ------------------------------------------------

namespace detail {

class ModuleParser {
public:
    explicit ModuleParser(std::string_view s) : s_(s) {}

    UnitaryModule parse_module() {
        std::vector<Factor> factors;
        factors.push_back(parse_factor());
        while (peek() == '*') {
            ++pos_;
            factors.push_back(parse_factor());
        }
        if (pos_ != s_.size()) error("trailing input");
        return UnitaryModule(std::move(factors));
    }

private:
    std::string_view s_;
    size_t pos_ = 0;

    [[noreturn]] void error(const std::string& what) {
        throw std::invalid_argument("module spec: " + what + " at position " +
                                    std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void expect(char c) {
        if (peek() != c) error(std::string("expected '") + c + "'");
        ++pos_;
    }

    void expect_word(std::string_view w) {
        if (s_.substr(pos_, w.size()) != w) error("expected \"" + std::string(w) + "\"");
        pos_ += w.size();
    }

    int parse_int() {
        size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
        if (pos_ == start) error("expected integer");
        return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }

    Rational parse_rational() {
        size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        while (pos_ < s_.size() && ((s_[pos_] >= '0' && s_[pos_] <= '9') || s_[pos_] == '/')) ++pos_;
        if (pos_ == start) error("expected rational");
        try {
            return Rational::from_string(s_.substr(start, pos_ - start));
        } catch (const std::exception&) {
            pos_ = start;
            error("bad rational");
        }
    }

    Factor parse_factor() {
        if (peek() == 'a') return parse_speh();
        if (peek() == 'c') {
            expect_word("cs(");
            Factor inner = parse_factor();
            if (!std::holds_alternative<SpehFactor>(inner))
                error("cs() takes a Speh factor");
            expect(',');
            Rational nu = parse_rational();
            expect(')');
            return ComplementaryFactor(std::get<SpehFactor>(inner), std::move(nu));
        }
        error("expected factor");
    }

    Factor parse_speh() {
        expect_word("a(");
        int m = parse_int();
        expect(',');
        int d = parse_int();
        expect(')');
        Rational y(0);
        if (peek() == '@') {
            expect_word("@y=");
            y = parse_rational();
        }
        return SpehFactor(m, d, std::move(y));
    }
};

}  // namespace detail

inline UnitaryModule parse_module(std::string_view spec) {
    return detail::ModuleParser(spec).parse_module();
}

}  // namespace hecke
