#pragma once

#include "stripcover/analysis.hpp"
#include "stripcover/core.hpp"
#include "stripcover/dutycycle.hpp"
#include "stripcover/error.hpp"
#include "stripcover/io.hpp"
#include "stripcover/oracle.hpp"
#include "stripcover/radsc.hpp"
#include "stripcover/random.hpp"
#include "stripcover/rational.hpp"
#include "stripcover/reductions.hpp"
#include "stripcover/roundrobin.hpp"
