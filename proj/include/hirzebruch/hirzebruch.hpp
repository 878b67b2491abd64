#pragma once

#include "bernoulli.hpp"
#include "characteristic_series.hpp"
#include "formal.hpp"
#include "genus.hpp"
#include "integer_partition.hpp"
#include "power_series.hpp"
#include "rational.hpp"
#include "series_numeric.hpp"
#include "set_partition.hpp"
#include "symmetric_oracle.hpp"
#include "hirzebruch/verify.hpp"
#include "hirzebruch/format.hpp"
