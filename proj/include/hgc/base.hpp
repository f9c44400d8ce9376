#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgc {

// Curve families.
enum class Color : uint8_t { Alpha = 0, Beta = 1 };

inline Color opposite(Color c) { return c == Color::Alpha ? Color::Beta : Color::Alpha; }
inline char color_char(Color c) { return c == Color::Alpha ? 'a' : 'b'; }
inline std::string color_name(Color c) { return c == Color::Alpha ? "alpha" : "beta"; }

enum class MarkKind : uint8_t { Basepoint = 0, Suture = 1 };

inline std::string mark_name(MarkKind k) { return k == MarkKind::Basepoint ? "basepoint" : "suture"; }

// Which side of a directed half-edge. Left is the side a face walk keeps
// the region on.
enum class Side : uint8_t { Left = 0, Right = 1 };

inline Side flip(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
  int line = 0;
  ParseError(int ln, const std::string& what)
      : Error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

// A named invariant of the data model failed to hold.
struct InvariantError : Error {
  std::string invariant;
  InvariantError(const std::string& inv, const std::string& what)
      : Error(inv + ": " + what), invariant(inv) {}
};

inline void require(bool ok, const std::string& inv, const std::string& what) {
  if (!ok) throw InvariantError(inv, what);
}

inline uint64_t default_seed() {
  if (const char* s = ::getenv("HGC_SEED")) return std::strtoull(s, nullptr, 10);
  return 0;
}

}  // namespace hgc
