#include "pauliv/real.hpp"

#include "pauliv/errors.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace pauliv {

namespace {
constexpr int kDigitEscalationCap = 1 << 14; // enclosure precision tried before giving up on a digit
}

struct RealValue::Impl {
    std::optional<BigRat> rational;
    std::function<Interval(int)> enclosure; // may be null for rational backend
    std::string label;

    mutable std::mutex mu;
    mutable std::map<int, BigRat> digit_cache; // m -> partial_sum(m)

    BigRat partial_sum(int m) const {
        if (m < 0) throw std::invalid_argument("partial_sum: m must be >= 0");
        {
            std::lock_guard<std::mutex> lk(mu);
            auto it = digit_cache.find(m);
            if (it != digit_cache.end()) return it->second;
        }
        BigRat s;
        BigInt scale = pow10(static_cast<unsigned>(m));
        if (rational) {
            s = BigRat(floor_rat(*rational * scale), scale);
        } else {
            // Determine floor(x * 10^m) from shrinking enclosures.
            int p = m + 4;
            for (;;) {
                Interval e = enclosure(p);
                BigInt flo = floor_rat(e.lo * scale);
                BigInt fhi = floor_rat(e.hi * scale);
                if (flo == fhi) {
                    s = BigRat(flo, scale);
                    break;
                }
                if (p >= kDigitEscalationCap)
                    throw oracle_unavailable("digit stream for '" + label +
                                             "' did not converge at digit " + std::to_string(m));
                p *= 2;
            }
        }
        std::lock_guard<std::mutex> lk(mu);
        digit_cache[m] = s;
        return s;
    }
};

RealValue RealValue::from_rational(const BigRat& x) {
    auto impl = std::make_shared<Impl>();
    impl->rational = x;
    impl->label = "rational";
    return RealValue(impl);
}

RealValue RealValue::from_enclosures(std::function<Interval(int)> f, std::string label) {
    auto impl = std::make_shared<Impl>();
    impl->enclosure = std::move(f);
    impl->label = std::move(label);
    return RealValue(impl);
}

RealValue RealValue::pi() {
    return from_enclosures([](int p) { return pi_interval(p); }, "pi");
}

RealValue RealValue::pi_times(const BigRat& r) {
    if (r == 0) return from_rational(BigRat(0));
    int extra = static_cast<int>(decimal_digits(ceil_rat(abs(r)))) + 2;
    return from_enclosures(
        [r, extra](int p) { return (pi_interval(p + extra) * r).round_out(p); },
        numerator(r).str() + "/" + denominator(r).str() + "*pi");
}

Interval RealValue::interval_at(int precision) const {
    if (precision < 1) throw std::invalid_argument("interval_at: precision must be >= 1");
    if (impl_->rational) {
        BigRat s = impl_->partial_sum(precision);
        return {s, s + BigRat(1, pow10(static_cast<unsigned>(precision)))};
    }
    return impl_->enclosure(precision);
}

BigRat RealValue::partial_sum(int m) const { return impl_->partial_sum(m); }

std::optional<BigRat> RealValue::as_rational() const { return impl_->rational; }

const std::string& RealValue::label() const { return impl_->label; }

BigRat parse_decimal(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty numeric literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return BigRat(num, den);
    }

    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    std::string int_part, frac_part;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) int_part += s[i++];
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) frac_part += s[i++];
    }
    long exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            eneg = s[i] == '-';
            ++i;
        }
        std::string edig;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) edig += s[i++];
        if (edig.empty()) throw std::invalid_argument("malformed exponent in '" + text + "'");
        exp10 = std::stol(edig);
        if (eneg) exp10 = -exp10;
    }
    if (i != s.size() || (int_part.empty() && frac_part.empty()))
        throw std::invalid_argument("malformed numeric literal '" + text + "'");

    BigInt mantissa(int_part.empty() ? "0" : int_part);
    for (char c : frac_part) mantissa = mantissa * 10 + (c - '0');
    BigRat value(mantissa, pow10(static_cast<unsigned>(frac_part.size())));
    if (exp10 > 0) value *= BigRat(pow10(static_cast<unsigned>(exp10)), 1);
    if (exp10 < 0) value /= BigRat(pow10(static_cast<unsigned>(-exp10)), 1);
    return neg ? -value : value;
}

RealValue RealValue::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "pi") return RealValue::pi_times(BigRat(1));
    if (s == "-pi") return RealValue::pi_times(BigRat(-1));
    auto star = s.find("*pi");
    if (star != std::string::npos && star + 3 == s.size())
        return RealValue::pi_times(parse_decimal(s.substr(0, star)));
    return RealValue::from_rational(parse_decimal(s));
}

} // namespace pauliv
