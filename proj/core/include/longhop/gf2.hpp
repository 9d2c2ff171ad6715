#pragma once

// Bit-level GF(2) kernel.
//
// Bit mu of a word is the coefficient of 2^mu. Text forms (to_binary,
// parse_binary) are written most-significant bit first.

#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace longhop {

using Word = std::uint64_t;

/// Hard ceiling on the group dimension d (N = 2^d nodes).
inline constexpr unsigned kMaxDimension = 32;

/// A d-bit element of Z_2^d.
class BitWord {
public:
    constexpr BitWord() = default;
    /// Throws InputError unless 1 <= width <= kMaxDimension and value < 2^width.
    BitWord(Word value, unsigned width);

    constexpr Word value() const noexcept { return value_; }
    constexpr unsigned width() const noexcept { return width_; }

    friend constexpr bool operator==(const BitWord&, const BitWord&) = default;

private:
    Word value_ = 0;
    unsigned width_ = 1;
};

constexpr int parity(Word x) noexcept {
    x ^= x >> 32;
    x ^= x >> 16;
    x ^= x >> 8;
    x ^= x >> 4;
    x ^= x >> 2;
    return static_cast<int>((x ^ (x >> 1)) & 1U);
}

constexpr unsigned weight(Word x) noexcept { return static_cast<unsigned>(std::popcount(x)); }

/// W_r(x) = parity(r & x).
constexpr int walsh(Word r, Word x) noexcept { return parity(r & x); }

int parity(BitWord x) noexcept;
unsigned weight(BitWord x) noexcept;
/// Throws InputError when the widths differ.
int walsh(BitWord r, BitWord x);

constexpr bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

namespace detail {
[[noreturn]] void throw_not_power_of_two(std::size_t n);
}

/// Unnormalized Walsh-Hadamard transform, in place:
/// v[r] <- sum_x v[x] * (-1)^parity(r & x). O(N log N), exact integer arithmetic.
/// Throws InputError unless v.size() is a power of two.
template <std::signed_integral T>
void fwht_inplace(std::span<T> v) {
    const std::size_t n = v.size();
    if (!is_power_of_two(n)) detail::throw_not_power_of_two(n);
    for (std::size_t half = 1; half < n; half <<= 1) {
        for (std::size_t block = 0; block < n; block += half << 1) {
            T* lo = v.data() + block;
            T* hi = lo + half;
            for (std::size_t j = 0; j < half; ++j) {
                const T a = lo[j];
                const T b = hi[j];
                lo[j] = a + b;
                hi[j] = a - b;
            }
        }
    }
}

std::vector<std::int64_t> fwht(std::span<const std::int64_t> v);

/// Rank over GF(2) of a set of row words.
unsigned gf2_rank(std::span<const Word> rows);

struct DiagonalizeResult {
    std::vector<Word> rows;
    bool success = false;
};

/// Applies invertible GF(2) column operations to an m x d bit matrix (one
/// word per row, column mu = bit mu) so that d of the rows become the unit
/// words 2^0..2^(d-1). Row order is preserved. An input already containing
/// every unit word is returned unchanged. Fails when the columns are
/// dependent, in which case `rows` holds the input.
DiagonalizeResult column_diagonalize(std::span<const Word> rows, unsigned cols);

/// MSB-first binary text of the low `width` bits.
std::string to_binary(Word value, unsigned width);

/// Parses a string of '0'/'1'. Throws InputError on any other character,
/// an empty string, or more than 64 digits.
Word parse_binary(std::string_view text);

}  // namespace longhop
