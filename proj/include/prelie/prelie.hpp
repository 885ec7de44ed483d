#ifndef PRELIE_PRELIE_HPP
#define PRELIE_PRELIE_HPP

#include "prelie/homology.hpp"
#include "prelie/linalg.hpp"
#include "prelie/series.hpp"
#include "prelie/smodule.hpp"
#include "prelie/symfunc.hpp"
#include "prelie/trees.hpp"
#include "prelie/verify.hpp"

#endif  // PRELIE_PRELIE_HPP
