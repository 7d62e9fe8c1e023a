#pragma once

#include "riordan_cli/random.hpp"

namespace riordan::testing {
using cli::SeriesGen;
}  // namespace riordan::testing
