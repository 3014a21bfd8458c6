#pragma once

#include "clawsplit/canonical.hpp"
#include "clawsplit/degree4.hpp"
#include "clawsplit/detection.hpp"
#include "clawsplit/exact.hpp"
#include "clawsplit/generate.hpp"
#include "clawsplit/graph.hpp"
#include "clawsplit/hitting_set.hpp"
#include "clawsplit/kernel.hpp"
#include "clawsplit/matching.hpp"
#include "clawsplit/split.hpp"
