#pragma once

// Finite-ring Fourier analysis: rings with canonical element indexing,
// additive characters, graph/Hamming varieties, spectra and Salem constants,
// ideal structure, and the verification suites built on top of them.

#include "ringfourier/base.hpp"
#include "ringfourier/character.hpp"
#include "ringfourier/checks.hpp"
#include "ringfourier/fourier.hpp"
#include "ringfourier/ideals.hpp"
#include "ringfourier/io.hpp"
#include "ringfourier/ncpoly.hpp"
#include "ringfourier/ring.hpp"
#include "ringfourier/suites.hpp"
#include "ringfourier/variety.hpp"
