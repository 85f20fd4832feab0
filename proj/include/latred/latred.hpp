#pragma once

#include "latred/analysis.hpp"
#include "latred/basis.hpp"
#include "latred/enumerate.hpp"
#include "latred/errors.hpp"
#include "latred/gen.hpp"
#include "latred/gram_schmidt.hpp"
#include "latred/linalg.hpp"
#include "latred/lll.hpp"
#include "latred/numeric.hpp"
#include "latred/obtuse.hpp"
#include "latred/oracle.hpp"
#include "latred/pipeline.hpp"
#include "latred/rng.hpp"
#include "latred/sign_graph.hpp"
#include "latred/transform.hpp"
