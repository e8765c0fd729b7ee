#pragma once

// Convenience header for the whole library.

#include "domsr/subset.hpp"
#include "domsr/algebra.hpp"
#include "domsr/lattice.hpp"
#include "domsr/laws.hpp"
#include "domsr/suites.hpp"
#include "domsr/models.hpp"
#include "domsr/finder.hpp"
#include "domsr/io.hpp"
#include "domsr/cli.hpp"
