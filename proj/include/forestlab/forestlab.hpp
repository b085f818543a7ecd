#pragma once

// Umbrella header.

#include "forestlab/codes.hpp"
#include "forestlab/forest.hpp"
#include "forestlab/genfun.hpp"
#include "forestlab/labeling.hpp"
#include "forestlab/multipoly.hpp"
#include "forestlab/signed_permutation.hpp"
#include "forestlab/statistics.hpp"
#include "forestlab/verify.hpp"
