#include "multdisc/sympoly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace multdisc {

Monomial Monomial::variable(std::size_t index, unsigned exponent) {
    if (index >= kMaxIndeterminates) fail(Errc::cap_exceeded, "indeterminate a" + std::to_string(index));
    if (exponent > 255) fail(Errc::cap_exceeded, "exponent " + std::to_string(exponent));
    Monomial m;
    m.exps_[index] = static_cast<std::uint8_t>(exponent);
    return m;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (auto e : exps_) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxIndeterminates; ++i) {
        const unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
        if (e > 255) fail(Errc::cap_exceeded, "exponent overflow in a" + std::to_string(i));
        r.exps_[i] = static_cast<std::uint8_t>(e);
    }
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxIndeterminates; ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxIndeterminates; ++i)
        r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - divisor.exps_[i]);
    return r;
}

bool graded_lex_greater(const Monomial& a, const Monomial& b) {
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    if (da != db) return da > db;
    return a.exps_ > b.exps_;
}

std::size_t Monomial::hash() const {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        lo |= std::uint64_t{exps_[i]} << (8 * i);
        hi |= std::uint64_t{exps_[i + 8]} << (8 * i);
    }
    return std::hash<std::uint64_t>{}(lo * 0x9E3779B97F4A7C15ULL ^ hi);
}

std::string Monomial::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < kMaxIndeterminates; ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'a' + std::to_string(i);
        if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out;
}

SymPoly::SymPoly(const Integer& c) {
    if (!multdisc::is_zero(c)) terms_.emplace_back(Monomial{}, c);
}

SymPoly SymPoly::variable(std::size_t index) {
    SymPoly p;
    p.terms_.emplace_back(Monomial::variable(index), Integer(1));
    return p;
}

SymPoly SymPoly::from_terms(std::vector<Term> terms) {
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    for (auto& [m, c] : terms) acc[m] += c;
    SymPoly p;
    for (auto& [m, c] : acc)
        if (!multdisc::is_zero(c)) p.terms_.emplace_back(m, std::move(c));
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return graded_lex_greater(a.first, b.first); });
    return p;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])) != 0) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    std::string digits() {
        skip_ws();
        const auto start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) != 0) ++pos;
        if (start == pos) fail(Errc::parse_error, "expected digits at offset " + std::to_string(start));
        return std::string(s.substr(start, pos - start));
    }
};

}  // namespace

SymPoly SymPoly::parse(std::string_view text) {
    Cursor cur{text};
    std::vector<Term> terms;
    bool first = true;
    while (!cur.eof()) {
        int sign = 1;
        const char c = cur.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++cur.pos;
        } else if (!first) {
            fail(Errc::parse_error, "expected '+' or '-' at offset " + std::to_string(cur.pos));
        }
        first = false;
        Integer coeff(1);
        Monomial mono;
        bool need_factor = true;
        while (need_factor) {
            const char f = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(f)) != 0) {
                coeff *= Integer(cur.digits(), 10);
            } else if (f == 'a') {
                ++cur.pos;
                const auto idx = std::stoul(cur.digits());
                unsigned e = 1;
                if (cur.peek() == '^') {
                    ++cur.pos;
                    e = static_cast<unsigned>(std::stoul(cur.digits()));
                }
                mono = mono * Monomial::variable(idx, e);
            } else {
                fail(Errc::parse_error, "unexpected character at offset " + std::to_string(cur.pos));
            }
            need_factor = cur.peek() == '*';
            if (need_factor) ++cur.pos;
        }
        terms.emplace_back(mono, sign * coeff);
    }
    return from_terms(std::move(terms));
}

std::optional<unsigned> SymPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().first.total_degree();  // graded order puts the largest first
}

unsigned SymPoly::degree_in(std::size_t index) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first[index]);
    return d;
}

bool SymPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.front().first.total_degree() == terms_.back().first.total_degree();
}

Integer SymPoly::evaluate(std::span<const Integer> values) const {
    Integer total;
    for (const auto& [m, c] : terms_) {
        Integer term = c;
        for (std::size_t i = 0; i < kMaxIndeterminates; ++i) {
            if (m[i] == 0) continue;
            if (i >= values.size()) fail(Errc::dimension_mismatch, "no value for a" + std::to_string(i));
            term *= multdisc::pow(values[i], m[i]);
        }
        total += term;
    }
    return total;
}

std::vector<SymPoly::Term> SymPoly::merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && graded_lex_greater(a[i].first, b[j].first))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || graded_lex_greater(b[j].first, a[i].first)) {
            out.emplace_back(b[j].first, subtract ? Integer(-b[j].second) : b[j].second);
            ++j;
        } else {
            Integer c = subtract ? Integer(a[i].second - b[j].second) : Integer(a[i].second + b[j].second);
            if (!multdisc::is_zero(c)) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

SymPoly& SymPoly::operator+=(const SymPoly& rhs) {
    terms_ = merge(terms_, rhs.terms_, false);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& rhs) {
    terms_ = merge(terms_, rhs.terms_, true);
    return *this;
}

SymPoly operator+(const SymPoly& a, const SymPoly& b) {
    SymPoly r;
    r.terms_ = SymPoly::merge(a.terms_, b.terms_, false);
    return r;
}

SymPoly operator-(const SymPoly& a, const SymPoly& b) {
    SymPoly r;
    r.terms_ = SymPoly::merge(a.terms_, b.terms_, true);
    return r;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        // A monomial factor preserves the order of the other operand.
        const auto& single = a.terms_.size() == 1 ? a.terms_.front() : b.terms_.front();
        const auto& many = a.terms_.size() == 1 ? b.terms_ : a.terms_;
        r.terms_.reserve(many.size());
        for (const auto& [m, c] : many) r.terms_.emplace_back(m * single.first, c * single.second);
        return r;
    }
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    Integer prod;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            acc[ma * mb] += prod;
        }
    }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!multdisc::is_zero(c)) r.terms_.emplace_back(m, std::move(c));
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const SymPoly::Term& x, const SymPoly::Term& y) { return graded_lex_greater(x.first, y.first); });
    return r;
}

SymPoly& SymPoly::operator*=(const SymPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

SymPoly SymPoly::operator-() const {
    SymPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

std::string SymPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = sgn(c) < 0;
        const Integer magnitude = abs(c);
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            out += magnitude.get_str();
        } else {
            if (magnitude != 1) out += magnitude.get_str() + "*";
            out += m.to_string();
        }
    }
    return out;
}

SymPoly exact_div(const SymPoly& a, const SymPoly& b) {
    if (b.is_zero()) fail(Errc::non_exact_division, "division by the zero polynomial");
    const auto& [lead_m, lead_c] = b.terms().front();
    std::vector<SymPoly::Term> quotient;
    SymPoly rem = a;
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.terms().front();
        if (!lead_m.divides(rm) || mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t()) == 0)
            fail(Errc::non_exact_division, "(" + a.to_string() + ") / (" + b.to_string() + ")");
        SymPoly::Term t{rm.quotient(lead_m), exact_div(rc, lead_c)};
        rem -= b * SymPoly::from_terms({t});
        quotient.push_back(std::move(t));
    }
    return SymPoly::from_terms(std::move(quotient));
}

}  // namespace multdisc
