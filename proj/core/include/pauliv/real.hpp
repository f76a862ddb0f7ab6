#pragma once

#include "pauliv/interval.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace pauliv {

// A real number given constructively. Two backends:
//   - digit-backed: a decimal digit source d_0, d_1, ... with value
//     sum d_n/10^n, d_0 any integer, d_{n>=1} in 0..9. partial_sum(m) is the
//     m-digit prefix and interval_at(p) = [s_p, s_p + 10^-p].
//   - enclosure-backed: a function p -> enclosure of width <= 10^-p. Digit
//     extraction on these escalates precision and fails with
//     oracle_unavailable if the value sits on a decimal grid point.
// Values are immutable; the digit/enclosure cache is internally synchronized.
class RealValue {
public:
    static RealValue from_rational(const BigRat& x);
    static RealValue from_int(long x) { return from_rational(BigRat(x)); }
    // f(p) must return an enclosure of width <= 10^-p of a fixed real.
    static RealValue from_enclosures(std::function<Interval(int)> f, std::string label = "real");
    static RealValue pi();
    static RealValue pi_times(const BigRat& r);

    // Accepted forms: decimal ("-0.25", "1e-4"), rational ("3/7"),
    // or an angle "<decimal-or-rational>*pi" ("1/2*pi", "0.5*pi", "pi").
    static RealValue parse(const std::string& text);

    // Enclosure of width <= 10^-p containing the value.
    Interval interval_at(int precision) const;
    // Digit-oracle view: sum of the first m+1 digit terms (Proviso access).
    BigRat partial_sum(int m) const;

    std::optional<BigRat> as_rational() const;
    const std::string& label() const;

    IntervalFn enclosure_fn() const {
        RealValue copy = *this;
        return [copy](int p) { return copy.interval_at(p); };
    }

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit RealValue(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

// Parse a plain decimal/rational literal to an exact rational.
BigRat parse_decimal(const std::string& text);

} // namespace pauliv
