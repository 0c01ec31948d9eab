#pragma once

#include <cstdint>

namespace trirec {

enum class ExecMode { serial, parallel };

// Controls for the grid-walking evaluators. `block` is the fixed q-block
// size: blocks are summed independently and folded in ascending order, so
// float64 results do not depend on the thread count.
struct EvalOptions {
    std::uint64_t max_grid = 100'000'000;  // abort evaluations above this many grid points
    ExecMode mode = ExecMode::parallel;    // parallel degrades to serial without OpenMP
    std::uint64_t block = 65'536;
};

}  // namespace trirec
