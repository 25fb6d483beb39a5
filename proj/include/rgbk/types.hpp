#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace rgbk {

using Rational = boost::rational<long long>;

// Error with a stable machine-readable code ("not-ordered", "missing-edge", ...)
// plus a human-readable detail string.
class error : public std::runtime_error {
 public:
  error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

enum class Color : std::uint8_t { R = 0, G = 1, B = 2, K = 3 };

inline char to_char(Color c) { return "RGBK"[static_cast<int>(c)]; }

inline std::optional<Color> color_from_char(char ch) {
  switch (ch) {
    case 'R': return Color::R;
    case 'G': return Color::G;
    case 'B': return Color::B;
    case 'K': return Color::K;
    default: return std::nullopt;
  }
}

// A set of edge colors, used to restrict paths ("RGK-colored path" = every
// edge on the path is R, G or K).
struct ColorClass {
  std::uint8_t mask = 0;

  constexpr bool contains(Color c) const {
    return (mask >> static_cast<int>(c)) & 1;
  }
  constexpr bool operator==(const ColorClass&) const = default;

  std::string name() const {
    std::string s;
    for (Color c : {Color::R, Color::G, Color::B, Color::K})
      if (contains(c)) s += to_char(c);
    return s;
  }
};

namespace classes {
inline constexpr ColorClass R{1u << 0};
inline constexpr ColorClass G{1u << 1};
inline constexpr ColorClass B{1u << 2};
inline constexpr ColorClass K{1u << 3};
inline constexpr ColorClass RK{R.mask | K.mask};
inline constexpr ColorClass GK{G.mask | K.mask};
inline constexpr ColorClass BK{B.mask | K.mask};
inline constexpr ColorClass RGK{R.mask | G.mask | K.mask};
inline constexpr ColorClass RBK{R.mask | B.mask | K.mask};
inline constexpr ColorClass GBK{G.mask | B.mask | K.mask};
}  // namespace classes

// The three path classes tracked by records, in coordinate order (x, y, z).
inline constexpr std::array<ColorClass, 3> kAvoidingClasses = {
    classes::RGK, classes::RBK, classes::GBK};

// Class of paths avoiding primary color `c`.
inline ColorClass avoiding_class(Color c) {
  switch (c) {
    case Color::R: return classes::GBK;
    case Color::G: return classes::RBK;
    case Color::B: return classes::RGK;
    default: throw error("bad-color", "no avoiding class for K");
  }
}

struct Triple {
  long long x = 0, y = 0, z = 0;

  constexpr bool operator==(const Triple&) const = default;
  constexpr long long operator[](int axis) const {
    return axis == 0 ? x : axis == 1 ? y : z;
  }
  constexpr Triple operator-(const Triple& o) const {
    return {x - o.x, y - o.y, z - o.z};
  }
  constexpr Triple operator+(const Triple& o) const {
    return {x + o.x, y + o.y, z + o.z};
  }
};

// Ordered listing of distinct integer triples, optionally carrying the
// dimensions of an ambient box [1,n1] x [1,n2] x [1,n3].
struct TripleSet {
  std::vector<Triple> points;
  std::optional<Triple> box;

  bool operator==(const TripleSet&) const = default;
  std::size_t size() const { return points.size(); }
};

// All algorithms here are quadratic or worse, so refuse absurd sizes up front.
inline constexpr long long kDefaultVertexCap = 10000;

}  // namespace rgbk
