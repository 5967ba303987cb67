#pragma once

#include "congruence/scalar.hpp"
#include "congruence/matrix.hpp"
#include "congruence/poly.hpp"
#include "congruence/blocks.hpp"
#include "congruence/cosquare.hpp"
#include "congruence/jordan.hpp"
#include "congruence/canonical_block.hpp"
#include "congruence/canon.hpp"
#include "congruence/quat.hpp"
#include "congruence/json_io.hpp"
#include "congruence/sample.hpp"
