#pragma once

// Binary linear [n, k] block codes.
//
// Row i of a generator matrix is <g_i|. Codeword coordinate 0 is y_1, which
// is also the leftmost character of the text form.

#include "longhop/gf2.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace longhop {

/// Fixed-length bit vector; bit 0 is the leftmost character of to_string().
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size);

    /// Parses '0'/'1' characters; throws InputError on anything else.
    static BitVector from_string(std::string_view text);

    std::size_t size() const noexcept { return size_; }
    bool get(std::size_t i) const noexcept { return (blocks_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i, bool v) noexcept;

    /// Number of set bits.
    std::size_t weight() const noexcept;

    /// Throws InputError on size mismatch.
    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::string to_string() const;

    std::span<const std::uint64_t> blocks() const noexcept { return blocks_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> blocks_;
};

using Codeword = BitVector;

class GeneratorMatrix {
public:
    /// Validates k >= 1, n >= k, equal row lengths, and full row rank.
    explicit GeneratorMatrix(std::vector<BitVector> rows);

    std::size_t rows() const noexcept { return rows_.size(); }  // k
    std::size_t cols() const noexcept { return n_; }            // n
    bool at(std::size_t row, std::size_t col) const noexcept { return rows_[row].get(col); }
    const BitVector& row(std::size_t i) const noexcept { return rows_[i]; }
    const std::vector<BitVector>& row_vectors() const noexcept { return rows_; }

    /// Column `col` as a k-bit word, row 0 at bit 2^0. Requires k <= 64.
    Word column(std::size_t col) const;

    friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<BitVector> rows_;
};

/// GF(2) row rank of a list of equal-length bit vectors.
std::size_t row_rank(const std::vector<BitVector>& rows);

/// XOR of the rows g_i for which message bit i is set.
Codeword encode(const GeneratorMatrix& g, const BitVector& message);

inline constexpr std::size_t kDefaultMinDistanceLimit = 28;

/// Minimum weight over all 2^k - 1 nonzero codewords, enumerated exhaustively
/// in Gray-code order. Throws InfeasibleError when k exceeds `max_k`.
std::size_t min_distance(const GeneratorMatrix& g,
                         std::size_t max_k = kDefaultMinDistanceLimit);

/// Generator file: '#' comment lines and blank lines are ignored, the
/// remaining k lines each hold n characters from {0,1}.
GeneratorMatrix parse_generator(std::string_view text);
std::string emit_generator(const GeneratorMatrix& g);

}  // namespace longhop
