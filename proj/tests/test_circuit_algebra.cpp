#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pauliv/errors.hpp"
#include "pauliv/oracles.hpp"
#include "pauliv/vword.hpp"

#include <set>
#include <unordered_set>

using namespace pauliv;

namespace {

VWord word_of(std::initializer_list<Letter> ls, PauliTail tail = PauliTail::PlusI) {
    VWord w;
    w.letters = ls;
    w.tail = tail;
    return w;
}

} // namespace

TEST_CASE("generator matrices") {
    ExactUnitary v3 = ExactUnitary::generator(Letter::V3);
    CHECK(v3.u == GaussianInt{1, 2});
    CHECK(v3.v == GaussianInt{0, 0});
    CHECK(v3.t == 1);
    for (int li = 0; li < 6; ++li) {
        ExactUnitary g = ExactUnitary::generator(static_cast<Letter>(li));
        CHECK(g.norm_equation_holds());
        // inverse numerator is the adjoint
        ExactUnitary gi = ExactUnitary::generator(inverse_of(static_cast<Letter>(li)));
        ExactUnitary prod = gi * g;
        CHECK(prod.u == GaussianInt{5, 0});
        CHECK(prod.v == GaussianInt{0, 0});
    }
}

TEST_CASE("evaluate examples") {
    ExactUnitary id = evaluate(word_of({}));
    CHECK(id.u == GaussianInt{1, 0});
    CHECK(id.v == GaussianInt{0, 0});
    CHECK(id.t == 0);

    ExactUnitary v3 = evaluate(word_of({Letter::V3}));
    CHECK(v3.u == GaussianInt{1, 2});
    CHECK(v3.t == 1);

    ExactUnitary v12 = evaluate(word_of({Letter::V1, Letter::V2}));
    // (1 + 2iX)(1 + 2iY) = 1 + 2iX + 2iY + 4i^2 XY = [[1-4i, 2+2i],[-2+2i, 1+4i]]
    CHECK(v12.u == GaussianInt{1, -4});
    CHECK(v12.v == GaussianInt{-2, 2});
    CHECK(v12.t == 2);
    CHECK(v12.norm_equation_holds());

    CHECK_THROWS_AS(evaluate(word_of({Letter::V1, Letter::V1inv})), std::invalid_argument);
}

TEST_CASE("normalization pushes Pauli letters right") {
    // X then V1: X commutes with (1+2iX)
    VWord w1 = normalize({PauliTail::PlusIX, Letter::V1});
    CHECK(w1.letters == std::vector<Letter>{Letter::V1});
    CHECK(w1.tail == PauliTail::PlusIX);

    // X then V2: conjugation flips the exponent
    VWord w2 = normalize({PauliTail::PlusIX, Letter::V2});
    CHECK(w2.letters == std::vector<Letter>{Letter::V2inv});
    CHECK(w2.tail == PauliTail::PlusIX);

    // cancellation
    VWord w3 = normalize({Letter::V1, Letter::V1inv});
    CHECK(w3.letters.empty());
    CHECK(w3.tail == PauliTail::PlusI);

    // normalization preserves the evaluated matrix
    std::vector<WordToken> raw{PauliTail::PlusIY, Letter::V3,    Letter::V1,
                               PauliTail::MinusIZ, Letter::V2inv, Letter::V2inv,
                               Letter::V1,         PauliTail::PlusIX};
    VWord nw = normalize(raw);
    CHECK(nw.is_reduced());
    ExactUnitary direct = ExactUnitary::one();
    for (const WordToken& tok : raw) {
        if (std::holds_alternative<Letter>(tok))
            direct = direct * ExactUnitary::generator(std::get<Letter>(tok));
        else
            direct = direct * ExactUnitary::tail_matrix(std::get<PauliTail>(tok));
    }
    ExactUnitary via = evaluate(nw);
    CHECK(via.u == direct.u);
    CHECK(via.v == direct.v);
    CHECK(via.t <= direct.t); // cancellations only shrink the count
}

TEST_CASE("word text round trip") {
    VWord w = parse_word("V1 V2^-1 V3 X");
    CHECK(w.str() == "V1 V2^-1 V3 X");
    CHECK(parse_word("").str() == "");
    CHECK(parse_word("-I").str() == "-I");
    CHECK_THROWS_AS(parse_word("V4"), std::invalid_argument);
    // parser normalizes
    CHECK(parse_word("V1 V1^-1").str() == "");
    CHECK(parse_word("X V2").str() == "V2^-1 X");
}

TEST_CASE("decompose examples") {
    VWord empty = decompose(ExactUnitary::one());
    CHECK(empty.letters.empty());
    CHECK(empty.tail == PauliTail::PlusI);

    VWord v3 = decompose({{BigInt(1), BigInt(2)}, {BigInt(0), BigInt(0)}, 1});
    CHECK(v3.str() == "V3");

    // malformed: non-minimal exponent (all entries divisible by 5)
    CHECK_THROWS_AS(decompose({{BigInt(5), BigInt(0)}, {BigInt(0), BigInt(0)}, 2}), integrity_error);
    // malformed: norm equation broken
    CHECK_THROWS_AS(decompose({{BigInt(1), BigInt(1)}, {BigInt(0), BigInt(0)}, 1}), integrity_error);
}

TEST_CASE("evaluate and decompose are mutually inverse through V-count 3") {
    std::vector<std::vector<Letter>> words{{}};
    for (unsigned len = 1; len <= 3; ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& w : words) {
            if (w.size() != len - 1) continue;
            for (int li = 0; li < 6; ++li) {
                Letter l = static_cast<Letter>(li);
                if (!w.empty() && l == inverse_of(w.back())) continue;
                auto ext = w;
                ext.push_back(l);
                next.push_back(ext);
            }
        }
        words.insert(words.end(), next.begin(), next.end());
    }
    int count = 0;
    for (const auto& letters : words) {
        for (int k = 0; k < 8; ++k) {
            VWord w;
            w.letters = letters;
            w.tail = static_cast<PauliTail>(k);
            ExactUnitary m = evaluate(w);
            VWord back = decompose(m);
            CHECK(back == w);
            ++count;
        }
    }
    CHECK(count == (1 + 6 + 30 + 150) * 8);
}

TEST_CASE("normal-form counting formula matches exhaustive enumeration") {
    CHECK(count_normal_forms(1) == 48);
    CHECK(count_normal_forms(2) == 240);
    CHECK(count_normal_forms(3) == 1200);
    for (unsigned t = 1; t <= 3; ++t) {
        auto [words, distinct] = normal_form_exhaustive(t);
        CHECK(words == count_normal_forms(t));
        CHECK(distinct == count_normal_forms(t));
    }
}

TEST_CASE("four-square counting formula") {
    CHECK(four_square_count(0) == 8);
    CHECK(four_square_count(1) == 48);
    CHECK(four_square_count(2) == 248);
    CHECK(four_square_count(2) - four_square_count(0) == 240);
    for (unsigned t = 0; t <= 4; ++t) CHECK(four_square_bruteforce(t) == four_square_count(t));
}

TEST_CASE("rotation images") {
    Rat3x3 id = word_to_rotation({});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(id.num[i][j] == (i == j ? 1 : 0));

    Rat3x3 r1 = word_to_rotation({Letter::V1});
    CHECK(r1.t == 1);
    CHECK(r1.num[0][0] == 5);
    CHECK(r1.num[1][1] == -3);
    CHECK(r1.num[1][2] == 4);
    CHECK(r1.num[2][1] == -4);
    CHECK(r1.num[2][2] == -3);

    Rat3x3 r12 = word_to_rotation({Letter::V1, Letter::V2});
    CHECK(r12.t == 2);
    CHECK(r12.has_full_denominator()); // some entry has denominator exactly 25
}

TEST_CASE("mod-5 images") {
    ModFiveMatrix t1 = word_to_modfive({Letter::V1});
    CHECK(t1.m == std::array<std::array<std::uint8_t, 3>, 3>{{{0, 0, 0}, {0, 2, 4}, {0, 1, 2}}});

    ModFiveMatrix t12 = word_to_modfive({Letter::V1, Letter::V2});
    CHECK(t12.m == std::array<std::array<std::uint8_t, 3>, 3>{{{0, 0, 0}, {1, 0, 3}, {3, 0, 4}}});
    CHECK_FALSE(t12.is_zero());

    // rank 1 for every nonempty reduced word (sampled)
    std::vector<Letter> w{Letter::V2, Letter::V3inv, Letter::V1, Letter::V1, Letter::V2inv};
    for (size_t k = 1; k <= w.size(); ++k) {
        std::vector<Letter> prefix(w.begin(), w.begin() + k);
        CHECK(word_to_modfive(prefix).rank() == 1);
    }
}

TEST_CASE("free-group sweeps at unit-test depth") {
    SweepResult fr = freeness_sweep(6, mod5_tables());
    CHECK(fr.ok);
    CHECK(fr.words_at_max == 6 * 5 * 5 * 5 * 5 * 5);
    SweepResult dn = denominator_sweep(4);
    CHECK(dn.ok);
}

TEST_CASE("normalize is idempotent") {
    std::vector<WordToken> raw{Letter::V2,        PauliTail::MinusIY, Letter::V3inv,
                               Letter::V3inv,     PauliTail::PlusIX,  Letter::V1,
                               PauliTail::MinusI, Letter::V2};
    VWord once = normalize(raw);
    std::vector<WordToken> again;
    for (Letter l : once.letters) again.emplace_back(l);
    again.emplace_back(once.tail);
    VWord twice = normalize(again);
    CHECK(once == twice);
}

TEST_CASE("tail group closure and dictionary") {
    // the eight tails form a group; X * Y lands on the Z class
    PauliTail xy = mul_tails(PauliTail::PlusIX, PauliTail::PlusIY);
    CHECK(tail_pauli(xy) == 3);
    // closure: every product stays among the eight
    std::set<std::string> names;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            names.insert(tail_name(mul_tails(static_cast<PauliTail>(i), static_cast<PauliTail>(j))));
    CHECK(names.size() == 8);
}
