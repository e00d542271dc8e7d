#pragma once

#include "fec/arith.hpp"
#include "fec/counting.hpp"
#include "fec/diagrams.hpp"
#include "fec/verify.hpp"
#include "fec/weyl_oracle.hpp"
