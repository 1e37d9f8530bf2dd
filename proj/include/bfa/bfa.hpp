#pragma once

#include "bfa/affine.hpp"
#include "bfa/anf.hpp"
#include "bfa/error.hpp"
#include "bfa/gf2.hpp"
#include "bfa/kernels.hpp"
#include "bfa/parallel.hpp"
#include "bfa/quadratic.hpp"
#include "bfa/search.hpp"
#include "bfa/splitcubic.hpp"
#include "bfa/text.hpp"
#include "bfa/truth_table.hpp"
#include "bfa/vbf.hpp"
#include "bfa/walsh.hpp"
