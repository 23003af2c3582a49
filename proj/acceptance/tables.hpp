#pragma once

// Reference tables regenerated from first principles and compared with
// their published values.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burniat/picard.hpp"

namespace burniat::tables {

struct GeneratorRow {
  std::string name;  // "A0" .. "C2", "K"
  std::int64_t d = 0;
  std::array<std::int64_t, 6> deg{};
  std::array<std::string, 6> bits{};

  // "(1 | -1 00, 0 00, 0 00 | 0 00, 1 10, 1 00)"
  std::string str() const;
  DivisorClass to_class() const;
};

// The thirteen published rows, generators in slot-then-genus order, K last.
const std::vector<GeneratorRow>& published_generator_rows();

// Generators rebuilt from the truncated coordinates of A0 and C1 under the
// symmetry group; K from [6; 1:00, 1:00, 1:00].
std::vector<std::pair<std::string, DivisorClass>> regenerate_generators();

struct Line {
  std::string label;
  std::string expected;
  std::string actual;
  bool match = false;
};

struct Diff {
  std::string name;
  std::vector<Line> lines;
  std::string summary;

  bool ok() const;
};

Diff generators();
Diff flexible_torsions();
Diff reduced_621();

inline constexpr std::array<std::string_view, 3> kNames = {"generators", "flexible-torsions", "reduced-621"};
std::optional<Diff> by_name(std::string_view name);

}  // namespace burniat::tables
