#include "longhop/codes.hpp"

#include "longhop/error.hpp"
#include "text_lines.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace longhop {

BitVector::BitVector(std::size_t size) : size_(size), blocks_((size + 63) / 64, 0) {}

BitVector BitVector::from_string(std::string_view text) {
    BitVector v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch != '0' && ch != '1') {
            throw InputError(std::string("non-binary character '") + ch + "' at column " +
                             std::to_string(i + 1));
        }
        v.set(i, ch == '1');
    }
    return v;
}

void BitVector::set(std::size_t i, bool v) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v) {
        blocks_[i / 64] |= mask;
    } else {
        blocks_[i / 64] &= ~mask;
    }
}

std::size_t BitVector::weight() const noexcept {
    std::size_t w = 0;
    for (auto b : blocks_) w += static_cast<std::size_t>(std::popcount(b));
    return w;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) {
        throw InputError("bit vector size mismatch (" + std::to_string(size_) + " vs " +
                         std::to_string(other.size_) + ")");
    }
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] ^= other.blocks_[i];
    return *this;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

std::size_t row_rank(const std::vector<BitVector>& rows) {
    std::vector<BitVector> m = rows;
    if (m.empty()) return 0;
    const std::size_t n = m.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
        auto it = std::find_if(m.begin() + static_cast<std::ptrdiff_t>(rank), m.end(),
                               [col](const BitVector& r) { return r.get(col); });
        if (it == m.end()) continue;
        std::iter_swap(m.begin() + static_cast<std::ptrdiff_t>(rank), it);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i != rank && m[i].get(col)) m[i] ^= m[rank];
        }
        ++rank;
    }
    return rank;
}

GeneratorMatrix::GeneratorMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw InputError("generator matrix needs at least one row");
    n_ = rows_.front().size();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != n_) {
            throw InputError("generator row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows_[i].size()) + " columns, expected " +
                             std::to_string(n_));
        }
    }
    if (n_ < rows_.size()) {
        throw InputError("generator matrix has n=" + std::to_string(n_) + " < k=" +
                         std::to_string(rows_.size()));
    }
    if (row_rank(rows_) != rows_.size()) {
        throw InputError("generator matrix rows are linearly dependent (rank " +
                         std::to_string(row_rank(rows_)) + " < k=" +
                         std::to_string(rows_.size()) + ")");
    }
}

Word GeneratorMatrix::column(std::size_t col) const {
    if (rows_.size() > 64) throw InputError("column(): k > 64");
    Word w = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].get(col)) w |= Word{1} << i;
    }
    return w;
}

Codeword encode(const GeneratorMatrix& g, const BitVector& message) {
    if (message.size() != g.rows()) {
        throw InputError("message has " + std::to_string(message.size()) + " bits, code has k=" +
                         std::to_string(g.rows()));
    }
    Codeword y(g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (message.get(i)) y ^= g.row(i);
    }
    return y;
}

std::size_t min_distance(const GeneratorMatrix& g, std::size_t max_k) {
    const std::size_t k = g.rows();
    if (k > max_k || k >= 64) {
        throw InfeasibleError("min_distance: k=" + std::to_string(k) +
                              " exceeds the exhaustive limit " + std::to_string(max_k));
    }
    const std::size_t blocks = g.row(0).blocks().size();
    std::vector<std::uint64_t> rows(k * blocks);
    for (std::size_t i = 0; i < k; ++i) {
        std::copy(g.row(i).blocks().begin(), g.row(i).blocks().end(),
                  rows.begin() + static_cast<std::ptrdiff_t>(i * blocks));
    }

    std::vector<std::uint64_t> word(blocks, 0);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const std::uint64_t count = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < count; ++i) {
        const auto flip = static_cast<std::size_t>(std::countr_zero(i));
        const std::uint64_t* r = &rows[flip * blocks];
        std::size_t w = 0;
        for (std::size_t b = 0; b < blocks; ++b) {
            word[b] ^= r[b];
            w += static_cast<std::size_t>(std::popcount(word[b]));
        }
        best = std::min(best, w);
    }
    return best;
}

GeneratorMatrix parse_generator(std::string_view text) {
    std::vector<BitVector> rows;
    std::size_t width = 0;
    for (const auto& line : detail::content_lines(text)) {
        BitVector row;
        try {
            row = BitVector::from_string(line.text);
        } catch (const InputError& e) {
            throw ParseError(line.number, e.what());
        }
        if (rows.empty()) {
            width = row.size();
        } else if (row.size() != width) {
            throw ParseError(line.number, "ragged row: " + std::to_string(row.size()) +
                                              " columns, expected " + std::to_string(width));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(1, "generator file has no rows");
    return GeneratorMatrix(std::move(rows));
}

std::string emit_generator(const GeneratorMatrix& g) {
    std::string out = "# [" + std::to_string(g.cols()) + "," + std::to_string(g.rows()) +
                      "] binary linear code generator matrix\n";
    for (const auto& r : g.row_vectors()) {
        out += r.to_string();
        out += '\n';
    }
    return out;
}

}  // namespace longhop
