#pragma once

#include "hrvtvm/analysis.hpp"
#include "hrvtvm/cluster.hpp"
#include "hrvtvm/error.hpp"
#include "hrvtvm/export.hpp"
#include "hrvtvm/series.hpp"
#include "hrvtvm/sodp.hpp"
#include "hrvtvm/tvm.hpp"
