#pragma once

namespace grouplab {

// Three-valued answers: `unknown` means the bounds prevented a definitive one.
enum class Tri { no, yes, unknown };

constexpr char const *to_string(Tri t) {
  return t == Tri::yes ? "yes" : t == Tri::no ? "no" : "unknown";
}

constexpr Tri tri(bool b) { return b ? Tri::yes : Tri::no; }

} // namespace grouplab
