#pragma once

#include <array>

#include "vidp/color.hpp"

namespace vidp::detail {

extern const std::array<Rgb, 256> k_magma_table;
extern const std::array<Rgb, 256> k_viridis_table;

}  // namespace vidp::detail
