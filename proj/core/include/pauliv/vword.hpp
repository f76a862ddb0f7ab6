#pragma once

#include "pauliv/gaussian.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace pauliv {

// Generators (1 +- 2iP)/sqrt(5); even values are the positive powers and
// l ^ 1 is the inverse of l.
enum class Letter : std::uint8_t { V1 = 0, V1inv, V2, V2inv, V3, V3inv };

inline Letter inverse_of(Letter l) { return static_cast<Letter>(static_cast<int>(l) ^ 1); }
inline int generator_index(Letter l) { return static_cast<int>(l) / 2 + 1; } // 1..3
inline bool is_positive(Letter l) { return static_cast<int>(l) % 2 == 0; }

// SU(2) Pauli tail. The tokens X, Y, Z denote the SU(2) representatives
// iX, iY, iZ (determinant-one lift of the Pauli letters; the group they form
// with +-I is closed under multiplication).
enum class PauliTail : std::uint8_t {
    PlusI = 0, MinusI, PlusIX, MinusIX, PlusIY, MinusIY, PlusIZ, MinusIZ
};

inline int tail_pauli(PauliTail b) { return static_cast<int>(b) / 2; } // 0=I,1=X,2=Y,3=Z
PauliTail mul_tails(PauliTail a, PauliTail b);
std::string tail_name(PauliTail b);

// (1/sqrt(5^t)) [[u, -v*],[v, u*]] with |u|^2 + |v|^2 = 5^t; for t >= 2 the
// exponent is minimal (u, v never both divisible by 5).
struct ExactUnitary {
    GaussianInt u;
    GaussianInt v;
    unsigned t = 0;

    static ExactUnitary one() { return {{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(0)}, 0}; }
    static ExactUnitary generator(Letter l);
    static ExactUnitary tail_matrix(PauliTail b);

    ExactUnitary operator*(const ExactUnitary& o) const {
        return {u * o.u - v.conj() * o.v, v * o.u + u.conj() * o.v, t + o.t};
    }
    bool operator==(const ExactUnitary& o) const { return u == o.u && v == o.v && t == o.t; }
    bool norm_equation_holds() const { return u.norm() + v.norm() == five_pow(t); }
};

// Normal form A_1 ... A_t B: a reduced generator word plus one tail.
struct VWord {
    std::vector<Letter> letters;
    PauliTail tail = PauliTail::PlusI;

    unsigned vcount() const { return static_cast<unsigned>(letters.size()); }
    bool is_reduced() const;
    std::string str() const;
    bool operator==(const VWord& o) const { return letters == o.letters && tail == o.tail; }
};

using WordToken = std::variant<Letter, PauliTail>;

// Push Pauli letters right (P commutes with 1+-2iP and flips the sign of
// 1+-2iQ for Q != P), fold the tail group, cancel adjacent inverses.
VWord normalize(const std::vector<WordToken>& raw);

// Text form "V1 V2^-1 V3 X"; tokens are whitespace separated, the optional
// tail letter comes last. Parsing normalizes.
std::vector<WordToken> tokenize_word(const std::string& text);
inline VWord parse_word(const std::string& text) { return normalize(tokenize_word(text)); }

// Exact product of the word; t equals the V-count. Rejects non-reduced input.
ExactUnitary evaluate(const VWord& w);

// Inverse of evaluate: peels the unique generator whose inverse numerator
// annihilates the matrix mod 5 at each level, then matches the tail.
// Throws integrity_error on malformed input (violated norm equation,
// non-minimal exponent, unmatched tail).
VWord decompose(const ExactUnitary& m);

// 48 * 5^(t-1), the number of distinct normal forms of V-count t >= 1.
BigInt count_normal_forms(unsigned t);

// 2 * (5^(t+1) - 1), the number of ordered signed four-square representations
// of 5^t (Jacobi).
BigInt four_square_count(unsigned t);

// Image in SO(3): exact rational 3x3 matrix with common denominator 5^t.
struct Rat3x3 {
    std::array<std::array<BigInt, 3>, 3> num{};
    unsigned t = 0; // value = num / 5^t
    // true iff some entry, in lowest terms, has denominator exactly 5^t
    bool has_full_denominator() const;
};
Rat3x3 word_to_rotation(const std::vector<Letter>& letters);

struct ModFiveMatrix {
    std::array<std::array<std::uint8_t, 3>, 3> m{};
    bool is_zero() const;
    int rank() const;
    ModFiveMatrix operator*(const ModFiveMatrix& o) const;
    ModFiveMatrix transpose() const;
};

// The three generator images reduced mod 5 (inverse letters use transposes).
std::array<ModFiveMatrix, 3> mod5_tables();
ModFiveMatrix word_to_modfive(const std::vector<Letter>& letters);
ModFiveMatrix word_to_modfive(const std::vector<Letter>& letters,
                              const std::array<ModFiveMatrix, 3>& tables);

} // namespace pauliv
