#pragma once

// Deterministic generators for the named instances and a seeded random
// regular model.

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "t3lab/hypercore.hpp"
#include "t3lab/report.hpp"

namespace t3lab {

struct GadgetSpec;

namespace family {
struct Fano {};
struct ScaledFano { int s = 1; };
struct Extremal { int r = 2; int n = 2; };
struct Thm53Even { int r = 2; };
struct Thm53Odd { int r = 3; };
struct ParallelTriple { int r = 1; };
struct RandomRegular { int r = 1; int n = 1; std::uint64_t seed = 0; };
struct Mixture { std::vector<GadgetSpec> parts; };
}  // namespace family

struct GadgetSpec {
  std::variant<family::Fano, family::ScaledFano, family::Extremal, family::Thm53Even,
               family::Thm53Odd, family::ParallelTriple, family::RandomRegular,
               family::Mixture>
      family;

  // Throws InputError when parameters are outside their domain.
  void check() const;
  std::string name() const;
};

nlohmann::ordered_json to_json(const GadgetSpec& spec);
GadgetSpec spec_from_json(const nlohmann::ordered_json& j);

// Vertex labelling of F: in class i, index 0 is x_i and index 1 is y_i.
// Edges x1x2x3, x1y2y3, y1x2y3, y1y2x3.
inline constexpr std::array<std::array<int, 3>, 4> kFanoShapes{{
    {0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}};

Tripartite3Graph build(const GadgetSpec& spec);

// Family-specific assertions, one report per claim.
std::vector<BoundReport> validate(const GadgetSpec& spec, const Tripartite3Graph& h,
                                  const ExactLimits& limits = {});

// Portable uniform integer in [0, bound) by rejection on a 64-bit engine.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Fisher-Yates permutation of 0..n-1.
std::vector<int> random_permutation(std::mt19937_64& rng, int n);

// True if no two edges of h are parallel.
bool is_simple(const Tripartite3Graph& h);

}  // namespace t3lab
