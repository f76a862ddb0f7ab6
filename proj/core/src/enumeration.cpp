#include "pauliv/enumeration.hpp"

#include "pauliv/errors.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace pauliv {

namespace {

std::optional<Interval> try_meet(const Interval& a, const BigRat& lo, const BigRat& hi) {
    BigRat l = a.lo > lo ? a.lo : lo;
    BigRat h = a.hi < hi ? a.hi : hi;
    if (l > h) return std::nullopt;
    return Interval{l, h};
}

// y-extent of the segment [P,Q] over the vertical line x = n, conservatively.
std::optional<Interval> edge_y_at(const IPoint& P, const IPoint& Q, const BigInt& n) {
    BigRat x(n);
    Interval dx = Q.re - P.re;
    if (dx.contains_zero()) {
        // near-vertical edge: contribute its whole y-hull when the column touches
        Interval xr = Interval::hull(P.re, Q.re);
        if (x < xr.lo || x > xr.hi) return std::nullopt;
        return Interval::hull(P.im, Q.im);
    }
    Interval s = (Interval(BigRat(x)) - P.re) / dx;
    auto sc = try_meet(s, BigRat(0), BigRat(1));
    if (!sc) return std::nullopt;
    return P.im + *sc * (Q.im - P.im);
}

int scan_precision(const Meniscus& m, unsigned t) {
    return m.precision() + static_cast<int>(decimal_digits(isqrt_floor(five_pow(t)))) + 6;
}

} // namespace

std::vector<ColumnRange> scan_columns(const Meniscus& m, const GridTransform& tau, unsigned t) {
    int p = scan_precision(m, t);
    const MeniscusFrame& f = m.frame(p);
    Interval s5 = sqrt5_pow(t, p);

    VerticalBand band = band_of(m, tau, p);
    BigInt n_min = ceil_rat((band.left * s5).lo);
    BigInt n_max = floor_rat((band.right * s5).hi);

    IPoint a = tau.apply(f.corner_plus).scale(s5);
    IPoint b = tau.apply(f.corner_minus).scale(s5);
    IPoint c = tau.apply(f.apex).scale(s5);

    std::vector<ColumnRange> cols;
    for (BigInt n = n_min; n <= n_max; ++n) {
        std::optional<Interval> yr;
        for (const auto& [P, Q] : {std::pair{a, b}, {b, c}, {c, a}}) {
            auto e = edge_y_at(P, Q, n);
            if (e) yr = yr ? Interval::hull(*yr, *e) : *e;
        }
        ColumnRange col;
        col.x = n;
        if (yr) {
            col.y_lo = ceil_rat(yr->lo);
            col.y_hi = floor_rat(yr->hi);
        } else {
            col.y_lo = 1;
            col.y_hi = 0;
        }
        cols.push_back(std::move(col));
    }
    return cols;
}

void for_each_member(const Meniscus& m, const GridTransform& tau, unsigned t,
                     const std::function<bool(const Candidate&, bool exact_level)>& visit) {
    GridTransform inv = tau.inverse();
    BigInt f5 = five_pow(t);
    for (const ColumnRange& col : scan_columns(m, tau, t)) {
        for (BigInt y = col.y_lo; y <= col.y_hi; ++y) {
            GaussianInt z{col.x, y};
            GaussianInt g = inv.apply(z);
            if (g.norm() > f5) continue;
            if (!m.contains_scaled(g, t)) continue;
            bool exact = !(g.re % 5 == 0 && g.im % 5 == 0);
            if (!visit(Candidate{z, t, g}, exact)) return;
        }
    }
}

std::vector<Candidate> candidates_at(unsigned t, const Meniscus& m, const GridTransform& tau) {
    std::vector<Candidate> out;
    for_each_member(m, tau, t, [&](const Candidate& c, bool exact) {
        if (exact) out.push_back(c);
        return true;
    });
    return out;
}

std::uint64_t count_members(const Meniscus& m, const GridTransform& tau, unsigned t) {
    std::uint64_t n = 0;
    for_each_member(m, tau, t, [&](const Candidate&, bool) {
        ++n;
        return true;
    });
    return n;
}

std::optional<bool> growth_check(const Meniscus& m, const GridTransform& tau, unsigned t, unsigned k) {
    if (count_members(m, tau, t) < 2) return std::nullopt;
    BigInt need = 1 + five_pow(k);
    BigInt count = 0;
    bool done = false;
    for_each_member(m, tau, t + 2 * k, [&](const Candidate&, bool) {
        if (++count >= need) {
            done = true;
            return false;
        }
        return true;
    });
    return done || count >= need;
}

std::vector<ConjectureRow> conjecture_stats(const Meniscus& m, const GridTransform& tau,
                                            unsigned t_max, Rng& rng, std::uint64_t max_points) {
    std::vector<ConjectureRow> rows;
    std::uint64_t budget = max_points;
    std::uint64_t prev_parity = 0;
    for (unsigned t = 0; t <= t_max; ++t) {
        ConjectureRow row;
        row.t = t;
        BigInt f5 = five_pow(t);
        for_each_member(m, tau, t, [&](const Candidate& c, bool) {
            if (budget == 0) throw resource_error("conjecture_stats: lattice point budget exceeded");
            --budget;
            ++row.parity_count;
            BigInt n = f5 - c.u_scaled.norm();
            bool s2s;
            if (n == 0) {
                s2s = true;
            } else {
                auto w = s2s_decide_and_construct(factor(n, rng), rng);
                s2s = w.has_value();
            }
            if (s2s) ++row.s2s_wins;
            if (n >= 5 && n % 4 == 1 && is_probable_prime(n, 64, rng)) ++row.prime_wins;
            return true;
        });
        row.candidates = row.parity_count + prev_parity;
        MeniscusMetrics met = meniscus_metrics(m, 24);
        row.area = static_cast<double>(met.area.mid()) * std::pow(5.0, static_cast<double>(t));
        prev_parity = row.parity_count;
        rows.push_back(row);
    }
    return rows;
}

std::string conjecture_csv(const std::vector<ConjectureRow>& rows) {
    std::ostringstream os;
    os << "t,candidates,s2s_wins,prime_wins,area\n";
    for (const auto& r : rows) {
        os << r.t << ',' << r.candidates << ',' << r.s2s_wins << ',' << r.prime_wins << ','
           << r.area << '\n';
    }
    return os.str();
}

} // namespace pauliv
