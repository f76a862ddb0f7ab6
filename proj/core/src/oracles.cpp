#include "pauliv/oracles.hpp"

#include "pauliv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <unordered_set>

namespace pauliv {

std::vector<GaussianInt> disk_members(const Meniscus& m, unsigned t) {
    std::vector<GaussianInt> out;
    BigInt f5 = five_pow(t);
    BigInt r = isqrt_floor(f5);
    for (BigInt x = -r; x <= r; ++x) {
        BigInt ymax = isqrt_floor(f5 - x * x);
        for (BigInt y = -ymax; y <= ymax; ++y) {
            GaussianInt g{x, y};
            if (m.contains_scaled(g, t)) out.push_back(g);
        }
    }
    return out;
}

std::vector<GaussianInt> disk_candidates_exact(const Meniscus& m, unsigned t) {
    std::vector<GaussianInt> out;
    for (GaussianInt& g : disk_members(m, t))
        if (!(g.re % 5 == 0 && g.im % 5 == 0)) out.push_back(std::move(g));
    return out;
}

std::optional<std::pair<BigInt, BigInt>> s2s_exhaustive(const BigInt& n) {
    if (n < 0) return std::nullopt;
    if (n > 10'000'000) throw std::invalid_argument("s2s_exhaustive: n too large for brute force");
    for (BigInt c = isqrt_floor(n); c * c * 2 >= n; --c) {
        BigInt rest = n - c * c;
        BigInt d;
        if (is_perfect_square(rest, &d)) return std::make_pair(c, d);
    }
    return std::nullopt;
}

int min_winning_level_bruteforce(const Meniscus& m, int t_limit) {
    for (int t = 0; t <= t_limit; ++t) {
        BigInt f5 = five_pow(static_cast<unsigned>(t));
        for (const GaussianInt& g : disk_candidates_exact(m, static_cast<unsigned>(t))) {
            if (s2s_exhaustive(f5 - g.norm())) return t;
        }
    }
    return -1;
}

BigInt four_square_bruteforce(unsigned t) {
    if (t > 8) throw std::invalid_argument("four_square_bruteforce: t too large");
    long n = static_cast<long>(five_pow(t).convert_to<long>());
    long r = static_cast<long>(std::sqrt(static_cast<double>(n))) + 2;
    while (r * r > n) --r;
    std::vector<std::uint64_t> r2(static_cast<size_t>(n) + 1, 0);
    for (long a = -r; a <= r; ++a) {
        long rest = n - a * a;
        long bmax = static_cast<long>(std::sqrt(static_cast<double>(rest))) + 2;
        while (bmax * bmax > rest) --bmax;
        for (long b = -bmax; b <= bmax; ++b) ++r2[static_cast<size_t>(a * a + b * b)];
    }
    BigInt total = 0;
    for (long k = 0; k <= n; ++k) total += BigInt(r2[static_cast<size_t>(k)]) * BigInt(r2[static_cast<size_t>(n - k)]);
    return total;
}

namespace {

template <typename Fn>
void walk_reduced_words(unsigned max_len, std::vector<Letter>& word, const Fn& fn) {
    if (word.size() == max_len) return;
    for (int li = 0; li < 6; ++li) {
        Letter l = static_cast<Letter>(li);
        if (!word.empty() && l == inverse_of(word.back())) continue;
        word.push_back(l);
        if (fn(word)) walk_reduced_words(max_len, word, fn);
        word.pop_back();
    }
}

std::string word_text(const std::vector<Letter>& w) {
    VWord v;
    v.letters = w;
    return v.str();
}

} // namespace

std::pair<BigInt, BigInt> normal_form_exhaustive(unsigned t) {
    if (t < 1) throw std::invalid_argument("normal_form_exhaustive: t must be >= 1");
    std::unordered_set<std::string> seen;
    BigInt words = 0;
    std::vector<Letter> word;
    walk_reduced_words(t, word, [&](const std::vector<Letter>& w) {
        if (w.size() < t) return true;
        VWord v;
        v.letters = w;
        for (int k = 0; k < 8; ++k) {
            v.tail = static_cast<PauliTail>(k);
            ExactUnitary u = evaluate(v);
            seen.insert(u.u.str() + ";" + u.v.str());
            ++words;
        }
        return true;
    });
    return {words, BigInt(seen.size())};
}

SweepResult freeness_sweep(unsigned max_len, const std::array<ModFiveMatrix, 3>& tables) {
    SweepResult res;
    std::vector<Letter> word;
    std::vector<ModFiveMatrix> stack;
    ModFiveMatrix id;
    id.m = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    stack.push_back(id);
    walk_reduced_words(max_len, word, [&](const std::vector<Letter>& w) {
        if (!res.ok) return false;
        stack.resize(w.size());
        ModFiveMatrix g = tables[generator_index(w.back()) - 1];
        if (!is_positive(w.back())) g = g.transpose();
        ModFiveMatrix cur = stack[w.size() - 1] * g;
        if (cur.is_zero()) {
            res.ok = false;
            res.first_failure = word_text(w);
            return false;
        }
        if (w.size() == max_len) ++res.words_at_max;
        stack.push_back(cur);
        return true;
    });
    return res;
}

SweepResult denominator_sweep(unsigned max_len) {
    SweepResult res;
    std::vector<Letter> word;
    walk_reduced_words(max_len, word, [&](const std::vector<Letter>& w) {
        if (!word_to_rotation(w).has_full_denominator()) {
            res.ok = false;
            res.first_failure = word_text(w);
            return false;
        }
        if (w.size() == max_len) ++res.words_at_max;
        return true;
    });
    return res;
}

namespace {

bool check(std::ostream& log, SelftestReport& rep, const std::string& name, bool ok) {
    if (ok) {
        log << "ok " << name << "\n";
        rep.passed.push_back(name);
    } else {
        log << "FAIL " << name << "\n";
        if (rep.ok) {
            rep.ok = false;
            rep.first_failure = name;
        }
    }
    return ok;
}

} // namespace

SelftestReport run_selftest(bool deep, bool corrupt_generators, std::ostream& log) {
    SelftestReport rep;
    Rng rng(0x5eed);

    {
        bool ok = true;
        unsigned tmax = deep ? 4 : 3;
        for (unsigned t = 1; t <= tmax && ok; ++t) {
            auto [words, distinct] = normal_form_exhaustive(t);
            ok = words == count_normal_forms(t) && distinct == count_normal_forms(t);
        }
        check(log, rep, "normal-form-counts", ok);
    }
    {
        bool ok = true;
        unsigned tmax = deep ? 6 : 4;
        for (unsigned t = 0; t <= tmax && ok; ++t)
            ok = four_square_bruteforce(t) == four_square_count(t);
        check(log, rep, "four-square-counts", ok);
    }
    {
        auto tables = mod5_tables();
        if (corrupt_generators) tables[0].m[1][1] = 3; // negative-control fixture
        SweepResult sw = freeness_sweep(deep ? 8 : 6, tables);
        bool ok = sw.ok;
        if (deep && sw.words_at_max != 468750) ok = false;
        check(log, rep, "freeness", ok);
    }
    {
        SweepResult sw = denominator_sweep(5);
        check(log, rep, "denominator-exactness", sw.ok && sw.words_at_max == 6 * 5 * 5 * 5 * 5);
    }
    {
        bool ok = true;
        long limit = deep ? 100000 : 20000;
        for (long n = 1; n <= limit && ok; ++n) {
            auto direct = s2s_exhaustive(BigInt(n));
            auto constructed = s2s_decide_and_construct(factor(BigInt(n), rng), rng);
            ok = direct.has_value() == constructed.has_value();
            if (constructed) ok = ok && constructed->c * constructed->c + constructed->d * constructed->d == n;
        }
        check(log, rep, "s2s-exhaustive-agreement", ok);
    }
    {
        bool ok = true;
        for (const char* eps : {"0.3", "0.15"}) {
            for (const char* theta : {"0", "1", "2.7"}) {
                Meniscus m(RealValue::parse(eps), RealValue::parse(theta), 24);
                GridTransform tau = adjust_meniscus(m).tau;
                for (unsigned t = 0; t <= 8 && ok; ++t) {
                    if (five_pow(t) > 1000000) break;
                    auto fast = candidates_at(t, m, tau);
                    auto slow = disk_candidates_exact(m, t);
                    std::vector<std::string> a, b;
                    for (const auto& c : fast) a.push_back(c.u_scaled.str());
                    for (const auto& g : slow) b.push_back(g.str());
                    std::sort(a.begin(), a.end());
                    std::sort(b.begin(), b.end());
                    ok = a == b;
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        check(log, rep, "enumeration-vs-disk", ok);
    }
    {
        Meniscus m(RealValue::parse("0.25"), RealValue::parse("0.7"), 24);
        GridTransform tau = adjust_meniscus(m).tau;
        auto rows = conjecture_stats(m, tau, 6, rng);
        bool ok = !rows.empty();
        for (const auto& r : rows)
            ok = ok && r.prime_wins <= r.s2s_wins && r.s2s_wins <= r.parity_count &&
                 r.parity_count <= r.candidates;
        check(log, rep, "conjecture-stats-smoke", ok);
    }
    return rep;
}

} // namespace pauliv
