#pragma once

// Umbrella header: the whole library.

#include "assign.hpp"      // IWYU pragma: export
#include "cliques.hpp"     // IWYU pragma: export
#include "core.hpp"        // IWYU pragma: export
#include "enumerate.hpp"   // IWYU pragma: export
#include "indet.hpp"       // IWYU pragma: export
#include "prefix.hpp"      // IWYU pragma: export
#include "prefix_graph.hpp"  // IWYU pragma: export
#include "text.hpp"        // IWYU pragma: export
#include "union_find.hpp"  // IWYU pragma: export
