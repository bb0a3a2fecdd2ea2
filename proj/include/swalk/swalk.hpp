#pragma once

#include "swalk/classify.hpp"
#include "swalk/complex.hpp"
#include "swalk/experiment.hpp"
#include "swalk/homology.hpp"
#include "swalk/io.hpp"
#include "swalk/measure.hpp"
#include "swalk/parallel.hpp"
#include "swalk/walk.hpp"
#include "swalk/weight.hpp"
