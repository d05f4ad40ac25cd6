#pragma once

// Positions of Star Silver Dollar and its special cases (Silver Dollar,
// Star Nim, Nim-with-shared-zero), with move generation and the text
// grammar  position := strip (";" strip)* ,  strip := "[" (int ("," int)*)? "]".

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stargrundy/error.hpp"

namespace stargrundy {

using Square = std::uint64_t;

struct Move;
class Position;

/// Token squares of one strip, strictly increasing.
class Strip {
public:
    Strip() = default;

    explicit Strip(std::vector<Square> tokens) : tokens_(std::move(tokens)) {
        for (std::size_t i = 1; i < tokens_.size(); ++i) {
            if (tokens_[i - 1] >= tokens_[i]) {
                throw InvariantError("strip tokens must be strictly increasing");
            }
        }
    }

    Strip(std::initializer_list<Square> tokens) : Strip(std::vector<Square>(tokens)) {}

    const std::vector<Square>& tokens() const noexcept { return tokens_; }
    std::size_t size() const noexcept { return tokens_.size(); }
    bool empty() const noexcept { return tokens_.empty(); }
    Square operator[](std::size_t i) const { return tokens_[i]; }
    bool occupies_zero() const noexcept { return !tokens_.empty() && tokens_.front() == 0; }

    friend auto operator<=>(const Strip&, const Strip&) = default;
    friend bool operator==(const Strip&, const Strip&) = default;

private:
    friend class Position;
    friend Position apply_move_unchecked(const Position& p, const Move& m);
    std::vector<Square> tokens_;
};

struct Move {
    std::size_t strip_index = 0;
    Square from_square = 0;
    Square to_square = 0;

    friend bool operator==(const Move&, const Move&) = default;
};

/// m >= 1 strips sharing square 0. At most one token overall sits on square 0.
class Position {
public:
    explicit Position(std::vector<Strip> strips) : strips_(std::move(strips)) {
        if (strips_.empty()) {
            throw InvariantError("a position needs at least one strip");
        }
        const auto zeros = std::count_if(strips_.begin(), strips_.end(),
                                         [](const Strip& s) { return s.occupies_zero(); });
        if (zeros > 1) {
            throw InvariantError("square 0 is occupied in more than one strip");
        }
    }

    Position(std::initializer_list<Strip> strips) : Position(std::vector<Strip>(strips)) {}

    const std::vector<Strip>& strips() const noexcept { return strips_; }
    std::size_t strip_count() const noexcept { return strips_.size(); }
    const Strip& operator[](std::size_t i) const { return strips_[i]; }

    bool zero_occupied() const noexcept {
        return std::any_of(strips_.begin(), strips_.end(),
                           [](const Strip& s) { return s.occupies_zero(); });
    }

    std::size_t token_count() const noexcept {
        std::size_t n = 0;
        for (const auto& s : strips_) n += s.size();
        return n;
    }

    Square square_sum() const noexcept {
        Square total = 0;
        for (const auto& s : strips_) {
            for (Square t : s.tokens()) total += t;
        }
        return total;
    }

    friend auto operator<=>(const Position&, const Position&) = default;
    friend bool operator==(const Position&, const Position&) = default;

private:
    struct Trusted {};
    Position(std::vector<Strip> strips, Trusted) : strips_(std::move(strips)) {}

    friend Position apply_move_unchecked(const Position& p, const Move& m);
    friend Position canonicalize(const Position& p);

    std::vector<Strip> strips_;
};

/// Calls `visit(Move)` for every legal move in the canonical order:
/// strip index ascending, from_square descending, to_square ascending.
template <typename Visitor>
void for_each_legal_move(const Position& p, Visitor&& visit) {
    const bool zero_taken = p.zero_occupied();
    for (std::size_t s = 0; s < p.strip_count(); ++s) {
        const auto& tokens = p[s].tokens();
        for (std::size_t j = tokens.size(); j-- > 0;) {
            Square lowest = j == 0 ? 0 : tokens[j - 1] + 1;
            if (lowest == 0 && zero_taken) lowest = 1;
            for (Square to = lowest; to < tokens[j]; ++to) {
                visit(Move{s, tokens[j], to});
            }
        }
    }
}

inline std::vector<Move> legal_moves(const Position& p) {
    std::vector<Move> moves;
    for_each_legal_move(p, [&](const Move& m) { moves.push_back(m); });
    return moves;
}

inline bool is_legal(const Position& p, const Move& m) {
    if (m.strip_index >= p.strip_count() || m.to_square >= m.from_square) return false;
    const auto& tokens = p[m.strip_index].tokens();
    const auto it = std::lower_bound(tokens.begin(), tokens.end(), m.from_square);
    if (it == tokens.end() || *it != m.from_square) return false;
    if (it != tokens.begin() && *std::prev(it) >= m.to_square) return false;
    return m.to_square != 0 || !p.zero_occupied();
}

// Caller guarantees legality.
inline Position apply_move_unchecked(const Position& p, const Move& m) {
    std::vector<Strip> strips = p.strips_;
    auto& tokens = strips[m.strip_index].tokens_;
    *std::lower_bound(tokens.begin(), tokens.end(), m.from_square) = m.to_square;
    return Position(std::move(strips), Position::Trusted{});
}

inline Position apply_move(const Position& p, const Move& m) {
    if (!is_legal(p, m)) {
        throw IllegalMove("illegal move: strip " + std::to_string(m.strip_index) + " " +
                          std::to_string(m.from_square) + "->" + std::to_string(m.to_square));
    }
    return apply_move_unchecked(p, m);
}

/// Strips sorted lexicographically. The Grundy value is invariant under this.
inline Position canonicalize(const Position& p) {
    std::vector<Strip> strips = p.strips_;
    std::sort(strips.begin(), strips.end());
    return Position(std::move(strips), Position::Trusted{});
}

inline std::string format_strip(const Strip& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    out += ']';
    return out;
}

inline std::string format_position(const Position& p) {
    std::string out;
    for (std::size_t i = 0; i < p.strip_count(); ++i) {
        if (i) out += ';';
        out += format_strip(p[i]);
    }
    return out;
}

inline std::string format_move(const Move& m) {
    return "strip " + std::to_string(m.strip_index) + ": " + std::to_string(m.from_square) + " -> " +
           std::to_string(m.to_square);
}

namespace detail {

class PositionParser {
public:
    explicit PositionParser(std::string_view text) : text_(text) {}

    Position parse() {
        std::vector<Strip> strips;
        strips.push_back(strip());
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] == ';') {
            ++pos_;
            strips.push_back(strip());
            skip_ws();
        }
        if (pos_ != text_.size()) fail("expected ';' or end of input");
        return Position(std::move(strips));
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Square integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected a decimal integer");
        }
        Square value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const Square digit = static_cast<Square>(text_[pos_] - '0');
            if (value > (std::numeric_limits<Square>::max() - digit) / 10) fail("integer overflow");
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    Strip strip() {
        expect('[');
        std::vector<Square> tokens;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ']') {
            ++pos_;
            return Strip{};
        }
        tokens.push_back(integer());
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] == ',') {
            ++pos_;
            tokens.push_back(integer());
            skip_ws();
        }
        expect(']');
        return Strip(std::move(tokens));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Throws ParseError (with byte offset) on malformed text, InvariantError on
/// duplicate/unsorted squares or a doubly occupied square 0.
inline Position parse_position(std::string_view text) { return detail::PositionParser(text).parse(); }

}  // namespace stargrundy
