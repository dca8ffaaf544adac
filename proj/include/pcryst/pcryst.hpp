#pragma once

// Umbrella header: minimum-energy configurations of interacting particles
// in a 2D isotropic harmonic trap, with shell classification, annealing,
// closed-form template minima, and a small quantum reference module.

#include "pcryst/analytic.hpp"
#include "pcryst/anneal.hpp"
#include "pcryst/energy.hpp"
#include "pcryst/geometry.hpp"
#include "pcryst/io.hpp"
#include "pcryst/potential.hpp"
#include "pcryst/quantum.hpp"
#include "pcryst/rng.hpp"
#include "pcryst/shells.hpp"
#include "pcryst/units.hpp"
