#pragma once

#include "wasc/big.hpp"
#include "wasc/sequence.hpp"
#include "wasc/matching.hpp"
#include "wasc/enumerate.hpp"
#include "wasc/power_series.hpp"
#include "wasc/counting.hpp"
#include "wasc/bijections/bits001.hpp"
#include "wasc/bijections/ops012.hpp"
#include "wasc/bijections/wmatrix.hpp"
#include "wasc/bijections/aug021.hpp"
#include "wasc/bijections/followers011.hpp"
#include "wasc/permutations.hpp"
#include "wasc/tables.hpp"
