#pragma once

#include "annsub/bitset.hpp"
#include "annsub/error.hpp"
#include "annsub/export.hpp"
#include "annsub/graph.hpp"
#include "annsub/lattice.hpp"
#include "annsub/module.hpp"
#include "annsub/ring.hpp"
#include "annsub/spectrum.hpp"
#include "annsub/theorems.hpp"
