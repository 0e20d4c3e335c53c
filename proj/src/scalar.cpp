#include "multdisc/scalar.hpp"

#include <cctype>

namespace multdisc {

Integer exact_div(const Integer& a, const Integer& b) {
    if (is_zero(b)) fail(Errc::non_exact_division, "division by zero");
    if (mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) == 0)
        fail(Errc::non_exact_division, to_string(a) + " / " + to_string(b));
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer factorial(unsigned k) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

std::string to_string(const Integer& a) { return a.get_str(10); }

namespace {

bool valid_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!valid_integer_text(s)) fail(Errc::parse_error, "not an integer: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
    return s;
}

}  // namespace

std::variant<Integer, Rational> ExactScalar::normalize(Rational q) {
    q.canonicalize();
    if (q.get_den() == 1) return Integer(q.get_num());
    return q;
}

ExactScalar::ExactScalar(const Rational& q) : value_(normalize(q)) {}

ExactScalar::ExactScalar(const Integer& num, const Integer& den) {
    if (multdisc::is_zero(den)) fail(Errc::parse_error, "zero denominator");
    value_ = normalize(Rational(num, den));
}

ExactScalar ExactScalar::parse(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return ExactScalar(parse_integer(text));
    return {parse_integer(trim(text.substr(0, slash))), parse_integer(trim(text.substr(slash + 1)))};
}

bool ExactScalar::is_zero() const { return sign() == 0; }

int ExactScalar::sign() const {
    if (const auto* z = std::get_if<Integer>(&value_)) return sgn(*z);
    return sgn(std::get<Rational>(value_));
}

const Integer& ExactScalar::as_integer() const {
    if (const auto* z = std::get_if<Integer>(&value_)) return *z;
    fail(Errc::precondition, "rational value " + to_string() + " is not an integer");
}

Rational ExactScalar::as_rational() const {
    if (const auto* z = std::get_if<Integer>(&value_)) return Rational(*z);
    return std::get<Rational>(value_);
}

Integer ExactScalar::numerator() const {
    if (const auto* z = std::get_if<Integer>(&value_)) return *z;
    return std::get<Rational>(value_).get_num();
}

Integer ExactScalar::denominator() const {
    if (is_integer()) return 1;
    return std::get<Rational>(value_).get_den();
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
    if (is_integer() && rhs.is_integer()) {
        std::get<Integer>(value_) += std::get<Integer>(rhs.value_);
        return *this;
    }
    value_ = normalize(as_rational() + rhs.as_rational());
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& rhs) {
    if (is_integer() && rhs.is_integer()) {
        std::get<Integer>(value_) -= std::get<Integer>(rhs.value_);
        return *this;
    }
    value_ = normalize(as_rational() - rhs.as_rational());
    return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& rhs) {
    if (is_integer() && rhs.is_integer()) {
        std::get<Integer>(value_) *= std::get<Integer>(rhs.value_);
        return *this;
    }
    value_ = normalize(as_rational() * rhs.as_rational());
    return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& rhs) {
    if (rhs.is_zero()) fail(Errc::non_exact_division, "division by zero");
    value_ = normalize(as_rational() / rhs.as_rational());
    return *this;
}

ExactScalar ExactScalar::operator-() const {
    if (const auto* z = std::get_if<Integer>(&value_)) return ExactScalar(Integer(-*z));
    return ExactScalar(Rational(-std::get<Rational>(value_)));
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
    if (a.is_integer() != b.is_integer()) return false;  // both normalized
    if (a.is_integer()) return std::get<Integer>(a.value_) == std::get<Integer>(b.value_);
    return std::get<Rational>(a.value_) == std::get<Rational>(b.value_);
}

bool operator<(const ExactScalar& a, const ExactScalar& b) { return a.as_rational() < b.as_rational(); }

std::string ExactScalar::to_string() const {
    if (const auto* z = std::get_if<Integer>(&value_)) return z->get_str(10);
    const auto& q = std::get<Rational>(value_);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

}  // namespace multdisc
