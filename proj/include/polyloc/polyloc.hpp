#pragma once

#include "polyloc/bigfloat.hpp"
#include "polyloc/comb.hpp"
#include "polyloc/harmonic.hpp"
#include "polyloc/io.hpp"
#include "polyloc/mpoly.hpp"
#include "polyloc/ncpoly.hpp"
#include "polyloc/parse.hpp"
#include "polyloc/plane.hpp"
#include "polyloc/rational.hpp"
#include "polyloc/scalar.hpp"
#include "polyloc/series.hpp"
#include "polyloc/taylor.hpp"
#include "polyloc/words.hpp"
#include "polyloc/zeta.hpp"
