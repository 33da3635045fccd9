#pragma once

#include "determinant.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "orbitchar.hpp"
#include "poly.hpp"
#include "schur.hpp"
#include "solver.hpp"
#include "weyl.hpp"
