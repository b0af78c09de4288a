#pragma once

// Umbrella header.

#include "koszul/algebra.hpp"
#include "koszul/algebroid.hpp"
#include "koszul/checks.hpp"
#include "koszul/dft.hpp"
#include "koszul/io.hpp"
#include "koszul/matrix.hpp"
#include "koszul/poisson.hpp"
#include "koszul/rational.hpp"
#include "koszul/report.hpp"
#include "koszul/sampling.hpp"
#include "koszul/structures.hpp"
