/**
 * @file polscat.hpp
 * @brief Umbrella header: pulls in the whole library.
 */

#pragma once

#include "polscat/bounds.hpp"
#include "polscat/io.hpp"
#include "polscat/linalg.hpp"
#include "polscat/mueller.hpp"
#include "polscat/parallel.hpp"
#include "polscat/polarization.hpp"
#include "polscat/rmt.hpp"
#include "polscat/rng.hpp"
#include "polscat/sampler.hpp"
