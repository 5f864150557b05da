#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spg {

enum class Player : std::uint8_t { Left, Right };

constexpr Player opponent(Player p) { return p == Player::Left ? Player::Right : Player::Left; }
constexpr char to_char(Player p) { return p == Player::Left ? 'L' : 'R'; }
Player player_from_string(std::string_view s);

/// Outcome of a verifier run. Exit codes of the CLI follow this enum.
enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);

/// Subsets of an indexed vertex set. Complexes and positions are capped at 64 vertices.
using VertexMask = std::uint64_t;
inline constexpr std::size_t kMaxVertices = 64;

inline constexpr VertexMask bit(std::size_t i) { return VertexMask{1} << i; }
inline int popcount(VertexMask m) { return __builtin_popcountll(m); }
inline bool is_subset(VertexMask a, VertexMask b) { return (a & ~b) == 0; }

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a search exceeds its node or time budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Orders digit runs numerically so that x2 sorts before x10.
bool natural_less(std::string_view a, std::string_view b);

} // namespace spg
