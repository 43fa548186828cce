// parallax.hpp: umbrella header for the whole library.

#pragma once

#include "align.hpp"      // IWYU pragma: export
#include "chunk.hpp"      // IWYU pragma: export
#include "clique.hpp"     // IWYU pragma: export
#include "corpus.hpp"     // IWYU pragma: export
#include "manifest.hpp"   // IWYU pragma: export
#include "render.hpp"     // IWYU pragma: export
#include "similarity.hpp" // IWYU pragma: export
#include "stats.hpp"      // IWYU pragma: export
