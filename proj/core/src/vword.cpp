#include "pauliv/vword.hpp"

#include "pauliv/errors.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace pauliv {

ExactUnitary ExactUnitary::generator(Letter l) {
    const BigInt two = 2;
    switch (l) {
    case Letter::V1: return {{1, 0}, {0, two}, 1};
    case Letter::V1inv: return {{1, 0}, {0, -two}, 1};
    case Letter::V2: return {{1, 0}, {-two, 0}, 1};
    case Letter::V2inv: return {{1, 0}, {two, 0}, 1};
    case Letter::V3: return {{1, two}, {0, 0}, 1};
    case Letter::V3inv: return {{1, -two}, {0, 0}, 1};
    }
    throw std::invalid_argument("bad letter");
}

ExactUnitary ExactUnitary::tail_matrix(PauliTail b) {
    switch (b) {
    case PauliTail::PlusI: return {{1, 0}, {0, 0}, 0};
    case PauliTail::MinusI: return {{-1, 0}, {0, 0}, 0};
    case PauliTail::PlusIX: return {{0, 0}, {0, 1}, 0};
    case PauliTail::MinusIX: return {{0, 0}, {0, -1}, 0};
    case PauliTail::PlusIY: return {{0, 0}, {-1, 0}, 0};
    case PauliTail::MinusIY: return {{0, 0}, {1, 0}, 0};
    case PauliTail::PlusIZ: return {{0, 1}, {0, 0}, 0};
    case PauliTail::MinusIZ: return {{0, -1}, {0, 0}, 0};
    }
    throw std::invalid_argument("bad tail");
}

PauliTail mul_tails(PauliTail a, PauliTail b) {
    static std::array<std::array<PauliTail, 8>, 8> table;
    static std::once_flag once;
    std::call_once(once, [] {
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                ExactUnitary p = ExactUnitary::tail_matrix(static_cast<PauliTail>(i)) *
                                 ExactUnitary::tail_matrix(static_cast<PauliTail>(j));
                bool found = false;
                for (int k = 0; k < 8; ++k) {
                    ExactUnitary q = ExactUnitary::tail_matrix(static_cast<PauliTail>(k));
                    if (q.u == p.u && q.v == p.v) {
                        table[i][j] = static_cast<PauliTail>(k);
                        found = true;
                        break;
                    }
                }
                if (!found) throw integrity_error("tail group not closed");
            }
        }
    });
    return table[static_cast<int>(a)][static_cast<int>(b)];
}

std::string tail_name(PauliTail b) {
    switch (b) {
    case PauliTail::PlusI: return "I";
    case PauliTail::MinusI: return "-I";
    case PauliTail::PlusIX: return "X";
    case PauliTail::MinusIX: return "-X";
    case PauliTail::PlusIY: return "Y";
    case PauliTail::MinusIY: return "-Y";
    case PauliTail::PlusIZ: return "Z";
    case PauliTail::MinusIZ: return "-Z";
    }
    return "?";
}

bool VWord::is_reduced() const {
    for (size_t i = 0; i + 1 < letters.size(); ++i)
        if (letters[i + 1] == inverse_of(letters[i])) return false;
    return true;
}

namespace {

std::string letter_name(Letter l) {
    std::string s = "V" + std::to_string(generator_index(l));
    if (!is_positive(l)) s += "^-1";
    return s;
}

// Conjugating a generator through a Pauli tail keeps the generator index and
// flips the exponent sign unless the Pauli matches (or the tail is +-I).
Letter letter_through_tail(PauliTail tail, Letter l) {
    int p = tail_pauli(tail);
    if (p == 0 || p == generator_index(l)) return l;
    return inverse_of(l);
}

} // namespace

std::string VWord::str() const {
    std::ostringstream os;
    bool first = true;
    for (Letter l : letters) {
        if (!first) os << ' ';
        os << letter_name(l);
        first = false;
    }
    if (tail != PauliTail::PlusI) {
        if (!first) os << ' ';
        os << tail_name(tail);
    }
    return os.str();
}

VWord normalize(const std::vector<WordToken>& raw) {
    VWord out;
    for (const WordToken& tok : raw) {
        if (std::holds_alternative<Letter>(tok)) {
            Letter l = letter_through_tail(out.tail, std::get<Letter>(tok));
            if (!out.letters.empty() && out.letters.back() == inverse_of(l))
                out.letters.pop_back();
            else
                out.letters.push_back(l);
        } else {
            out.tail = mul_tails(out.tail, std::get<PauliTail>(tok));
        }
    }
    return out;
}

std::vector<WordToken> tokenize_word(const std::string& text) {
    std::vector<WordToken> out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "V1") out.emplace_back(Letter::V1);
        else if (tok == "V1^-1") out.emplace_back(Letter::V1inv);
        else if (tok == "V2") out.emplace_back(Letter::V2);
        else if (tok == "V2^-1") out.emplace_back(Letter::V2inv);
        else if (tok == "V3") out.emplace_back(Letter::V3);
        else if (tok == "V3^-1") out.emplace_back(Letter::V3inv);
        else if (tok == "I") out.emplace_back(PauliTail::PlusI);
        else if (tok == "-I") out.emplace_back(PauliTail::MinusI);
        else if (tok == "X") out.emplace_back(PauliTail::PlusIX);
        else if (tok == "-X") out.emplace_back(PauliTail::MinusIX);
        else if (tok == "Y") out.emplace_back(PauliTail::PlusIY);
        else if (tok == "-Y") out.emplace_back(PauliTail::MinusIY);
        else if (tok == "Z") out.emplace_back(PauliTail::PlusIZ);
        else if (tok == "-Z") out.emplace_back(PauliTail::MinusIZ);
        else throw std::invalid_argument("unknown word token '" + tok + "'");
    }
    return out;
}

ExactUnitary evaluate(const VWord& w) {
    if (!w.is_reduced()) throw std::invalid_argument("evaluate: word is not reduced; normalize first");
    ExactUnitary acc = ExactUnitary::one();
    for (Letter l : w.letters) acc = acc * ExactUnitary::generator(l);
    acc = acc * ExactUnitary::tail_matrix(w.tail);
    if (!acc.norm_equation_holds()) throw integrity_error("evaluate: norm equation violated");
    return acc;
}

VWord decompose(const ExactUnitary& m) {
    if (!m.norm_equation_holds()) throw integrity_error("decompose: |u|^2 + |v|^2 != 5^t");
    VWord out;
    ExactUnitary cur = m;
    for (unsigned level = m.t; level > 0; --level) {
        int peels = 0;
        Letter peeled{};
        ExactUnitary next;
        for (int li = 0; li < 6; ++li) {
            Letter l = static_cast<Letter>(li);
            ExactUnitary g = ExactUnitary::generator(inverse_of(l));
            // numerator of g^{-1} * cur; divisible by 5 iff cur = g * rest
            GaussianInt nu = g.u * cur.u - g.v.conj() * cur.v;
            GaussianInt nv = g.v * cur.u + g.u.conj() * cur.v;
            if (nu.divisible_by(5) && nv.divisible_by(5)) {
                ++peels;
                peeled = l;
                next = {nu.divided_by(5), nv.divided_by(5), level - 1};
            }
        }
        if (peels != 1)
            throw integrity_error(peels == 0 ? "decompose: no generator peels (matrix not in the group)"
                                             : "decompose: multiple generators peel (non-minimal exponent)");
        out.letters.push_back(peeled);
        cur = next;
    }
    for (int k = 0; k < 8; ++k) {
        PauliTail b = static_cast<PauliTail>(k);
        ExactUnitary q = ExactUnitary::tail_matrix(b);
        if (q.u == cur.u && q.v == cur.v) {
            out.tail = b;
            if (!out.is_reduced()) throw integrity_error("decompose: produced non-reduced word");
            return out;
        }
    }
    throw integrity_error("decompose: residue is not a Pauli tail");
}

BigInt count_normal_forms(unsigned t) {
    if (t < 1) throw std::invalid_argument("count_normal_forms: t must be >= 1");
    return 48 * five_pow(t - 1);
}

BigInt four_square_count(unsigned t) { return 2 * (five_pow(t + 1) - 1); }

namespace {

using I3 = std::array<std::array<BigInt, 3>, 3>;

I3 mat_mul(const I3& a, const I3& b) {
    I3 c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            BigInt s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

I3 s_table(Letter l) {
    static const I3 s1{{{5, 0, 0}, {0, -3, 4}, {0, -4, -3}}};
    static const I3 s2{{{-3, 0, -4}, {0, 5, 0}, {4, 0, -3}}};
    static const I3 s3{{{-3, 4, 0}, {-4, -3, 0}, {0, 0, 5}}};
    I3 base = generator_index(l) == 1 ? s1 : generator_index(l) == 2 ? s2 : s3;
    if (is_positive(l)) return base;
    I3 tr{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) tr[i][j] = base[j][i];
    return tr;
}

} // namespace

bool Rat3x3::has_full_denominator() const {
    if (t == 0) return true;
    for (const auto& row : num)
        for (const BigInt& e : row)
            if (e % 5 != 0) return true;
    return false;
}

Rat3x3 word_to_rotation(const std::vector<Letter>& letters) {
    Rat3x3 out;
    out.t = static_cast<unsigned>(letters.size());
    I3 acc{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (Letter l : letters) acc = mat_mul(acc, s_table(l));
    out.num = acc;
    return out;
}

bool ModFiveMatrix::is_zero() const {
    for (const auto& row : m)
        for (auto e : row)
            if (e) return false;
    return true;
}

ModFiveMatrix ModFiveMatrix::operator*(const ModFiveMatrix& o) const {
    ModFiveMatrix c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int s = 0;
            for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
            c.m[i][j] = static_cast<std::uint8_t>(s % 5);
        }
    return c;
}

ModFiveMatrix ModFiveMatrix::transpose() const {
    ModFiveMatrix t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t.m[i][j] = m[j][i];
    return t;
}

int ModFiveMatrix::rank() const {
    // Gaussian elimination over the 5-element field
    std::array<std::array<int, 3>, 3> a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = m[i][j];
    int rank = 0;
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int pivot = -1;
        for (int r = rank; r < 3; ++r)
            if (a[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rank]);
        int inv = 1;
        while (a[rank][col] * inv % 5 != 1) ++inv;
        for (int j = 0; j < 3; ++j) a[rank][j] = a[rank][j] * inv % 5;
        for (int r = 0; r < 3; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            int f = a[r][col];
            for (int j = 0; j < 3; ++j) a[r][j] = ((a[r][j] - f * a[rank][j]) % 5 + 5) % 5;
        }
        ++rank;
    }
    return rank;
}

std::array<ModFiveMatrix, 3> mod5_tables() {
    std::array<ModFiveMatrix, 3> t;
    t[0].m = {{{0, 0, 0}, {0, 2, 4}, {0, 1, 2}}};
    t[1].m = {{{2, 0, 1}, {0, 0, 0}, {4, 0, 2}}};
    t[2].m = {{{2, 4, 0}, {1, 2, 0}, {0, 0, 0}}};
    return t;
}

ModFiveMatrix word_to_modfive(const std::vector<Letter>& letters,
                              const std::array<ModFiveMatrix, 3>& tables) {
    ModFiveMatrix acc{};
    acc.m = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (Letter l : letters) {
        ModFiveMatrix g = tables[generator_index(l) - 1];
        if (!is_positive(l)) g = g.transpose();
        acc = acc * g;
    }
    return acc;
}

ModFiveMatrix word_to_modfive(const std::vector<Letter>& letters) {
    return word_to_modfive(letters, mod5_tables());
}

} // namespace pauliv
