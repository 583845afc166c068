#pragma once

// Umbrella header.

#include "error.hpp"
#include "lattice.hpp"
#include "levels.hpp"
#include "poset.hpp"
#include "orbitdecomp.hpp"
#include "affine.hpp"
#include "characters.hpp"
#include "pieri.hpp"
#include "crystals.hpp"
#include "report.hpp"
#include "verify.hpp"
#include "io.hpp"
