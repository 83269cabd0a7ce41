#pragma once

#include "gapramsey/bignat.hpp"
#include "gapramsey/bounds.hpp"
#include "gapramsey/cnf.hpp"
#include "gapramsey/colouring_io.hpp"
#include "gapramsey/core.hpp"
#include "gapramsey/errors.hpp"
#include "gapramsey/level_tree.hpp"
#include "gapramsey/pattern.hpp"
#include "gapramsey/pipeline.hpp"
#include "gapramsey/rank_gaps.hpp"
#include "gapramsey/rng.hpp"
#include "gapramsey/search.hpp"
#include "gapramsey/seq.hpp"
#include "gapramsey/subtree_sampling.hpp"
#include "gapramsey/threshold.hpp"
