#pragma once

#include "curated.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "green.hpp"
#include "interval.hpp"
#include "io.hpp"
#include "moebius.hpp"
#include "partial_map.hpp"
#include "qbijection.hpp"
#include "rational.hpp"
#include "regularity.hpp"
#include "regularity_q.hpp"
#include "symbolic.hpp"
#include "transforms.hpp"
#include "chainmorph/suites.hpp"
