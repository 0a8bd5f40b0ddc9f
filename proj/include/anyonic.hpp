#pragma once

// Umbrella header for the library; the command-line layer lives in anyonic/cli.hpp.

#include "anyonic/errors.hpp"
#include "anyonic/cyclotomic.hpp"
#include "anyonic/graded.hpp"
#include "anyonic/algebra.hpp"
#include "anyonic/axioms.hpp"
#include "anyonic/envelope.hpp"
#include "anyonic/constructions.hpp"
#include "anyonic/anyspace.hpp"
#include "anyonic/expr.hpp"
#include "anyonic/io.hpp"
#include "anyonic/search.hpp"
