#include "longhop/gf2.hpp"

#include "longhop/error.hpp"

#include <algorithm>

namespace longhop {

BitWord::BitWord(Word value, unsigned width) : value_(value), width_(width) {
    if (width == 0 || width > kMaxDimension) {
        throw InputError("BitWord width must be in [1, 32], got " + std::to_string(width));
    }
    if (value >> width != 0) {
        throw InputError("BitWord value " + std::to_string(value) + " does not fit in " +
                         std::to_string(width) + " bits");
    }
}

int parity(BitWord x) noexcept { return parity(x.value()); }

unsigned weight(BitWord x) noexcept { return weight(x.value()); }

int walsh(BitWord r, BitWord x) {
    if (r.width() != x.width()) {
        throw InputError("walsh: width mismatch (" + std::to_string(r.width()) + " vs " +
                         std::to_string(x.width()) + ")");
    }
    return walsh(r.value(), x.value());
}

namespace detail {
void throw_not_power_of_two(std::size_t n) {
    throw InputError("fwht: length " + std::to_string(n) + " is not a power of two");
}
}  // namespace detail

std::vector<std::int64_t> fwht(std::span<const std::int64_t> v) {
    std::vector<std::int64_t> out(v.begin(), v.end());
    fwht_inplace(std::span<std::int64_t>(out));
    return out;
}

unsigned gf2_rank(std::span<const Word> rows) {
    // xor basis indexed by leading bit
    Word basis[64] = {};
    unsigned rank = 0;
    for (Word w : rows) {
        for (int bit = 63; bit >= 0 && w != 0; --bit) {
            if (((w >> bit) & 1U) == 0) continue;
            if (basis[bit] == 0) {
                basis[bit] = w;
                ++rank;
                w = 0;
            } else {
                w ^= basis[bit];
            }
        }
    }
    return rank;
}

DiagonalizeResult column_diagonalize(std::span<const Word> rows, unsigned cols) {
    DiagonalizeResult result{std::vector<Word>(rows.begin(), rows.end()), false};
    if (cols == 0 || cols > 64) return result;

    const Word mask = cols == 64 ? ~Word{0} : (Word{1} << cols) - 1;
    bool has_all_units = true;
    for (unsigned c = 0; c < cols && has_all_units; ++c) {
        has_all_units = std::find(rows.begin(), rows.end(), Word{1} << c) != rows.end();
    }
    if (has_all_units) {
        result.success = gf2_rank(rows) == cols;
        return result;
    }

    std::vector<Word> m(rows.begin(), rows.end());
    for (Word& w : m) w &= mask;
    std::vector<bool> used(m.size(), false);

    for (unsigned c = 0; c < cols; ++c) {
        const Word bit_c = Word{1} << c;
        std::size_t pivot = m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!used[i] && (m[i] & bit_c) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == m.size()) return result;  // column c is dependent
        used[pivot] = true;

        // col_j ^= col_c for every other column j set in the pivot row.
        const Word others = m[pivot] & ~bit_c;
        for (Word& w : m) {
            if ((w & bit_c) != 0) w ^= others;
        }
    }
    result.rows = std::move(m);
    result.success = true;
    return result;
}

std::string to_binary(Word value, unsigned width) {
    std::string s(width, '0');
    for (unsigned i = 0; i < width; ++i) {
        if ((value >> i) & 1U) s[width - 1 - i] = '1';
    }
    return s;
}

Word parse_binary(std::string_view text) {
    if (text.empty()) throw InputError("empty binary string");
    if (text.size() > 64) throw InputError("binary string longer than 64 digits");
    Word value = 0;
    for (char ch : text) {
        if (ch != '0' && ch != '1') {
            throw InputError(std::string("non-binary character '") + ch + "'");
        }
        value = (value << 1) | static_cast<Word>(ch - '0');
    }
    return value;
}

}  // namespace longhop
