// leakycav.hpp - umbrella include.

#pragma once

#include "leakycav/dynamics.hpp"
#include "leakycav/entanglement.hpp"
#include "leakycav/errors.hpp"
#include "leakycav/hilbert.hpp"
#include "leakycav/scenarios.hpp"
#include "leakycav/sweep.hpp"
