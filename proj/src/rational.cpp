#include "rufpp/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace rufpp {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

} // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    const std::string original(text);
    if (text.empty()) {
        throw std::invalid_argument("empty number");
    }

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw std::invalid_argument("malformed fraction '" + original + "'");
        }
        mpz_class n(std::string(num), 10), d(std::string(den), 10);
        if (d == 0) {
            throw std::invalid_argument("zero denominator in '" + original + "'");
        }
        Rational r(n, d);
        r.canonicalize();
        return negative ? Rational(-r) : r;
    }

    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        auto exp_text = text.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6) {
            throw std::invalid_argument("malformed exponent in '" + original + "'");
        }
        exponent = std::stol(std::string(exp_text));
        if (exp_negative) {
            exponent = -exponent;
        }
        text = text.substr(0, e);
    }

    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        int_part = text.substr(0, dot);
        frac_part = text.substr(dot + 1);
    }
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
        throw std::invalid_argument("malformed number '" + original + "'");
    }

    mpz_class digits(std::string(int_part) + std::string(frac_part), 10);
    exponent -= static_cast<long>(frac_part.size());
    Rational r;
    if (exponent >= 0) {
        r = Rational(digits * pow10(static_cast<unsigned long>(exponent)));
    } else {
        r = Rational(digits, pow10(static_cast<unsigned long>(-exponent)));
        r.canonicalize();
    }
    return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    mpz_class den = value.get_den();
    unsigned long twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        den /= 5;
        ++fives;
    }
    if (den != 1) {
        return value.get_str();
    }
    const unsigned long places = std::max(twos, fives);
    mpz_class scaled = value.get_num() * pow10(places) / value.get_den();
    const bool negative = scaled < 0;
    std::string digits = mpz_class(abs(scaled)).get_str();
    if (digits.size() <= places) {
        digits.insert(0, places - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - places, ".");
    return negative ? "-" + digits : digits;
}

double to_double(const Rational& value) {
    return value.get_d();
}

int ceil_log(const Rational& base, const Rational& value) {
    if (base <= 1) {
        throw std::invalid_argument("ceil_log requires base > 1");
    }
    int p = 0;
    Rational acc = 1;
    while (acc < value) {
        acc *= base;
        ++p;
    }
    return p;
}

int floor_log2(const Rational& value) {
    if (value <= 0) {
        throw std::invalid_argument("floor_log2 requires a positive value");
    }
    // 2^p <= num/den  <=>  p <= log2(num) - log2(den), refined exactly below
    int p = static_cast<int>(mpz_sizeinbase(value.get_num().get_mpz_t(), 2)) -
            static_cast<int>(mpz_sizeinbase(value.get_den().get_mpz_t(), 2));
    while (pow(Rational(2), p) > value) {
        --p;
    }
    while (pow(Rational(2), p + 1) <= value) {
        ++p;
    }
    return p;
}

Rational pow(const Rational& base, int exponent) {
    Rational result = 1;
    Rational b = exponent >= 0 ? base : Rational(1 / base);
    for (int e = exponent >= 0 ? exponent : -exponent; e > 0; --e) {
        result *= b;
    }
    return result;
}

} // namespace rufpp
