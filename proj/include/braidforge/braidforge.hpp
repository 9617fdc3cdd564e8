#pragma once

#include "braidforge/braid.hpp"
#include "braidforge/braiding.hpp"
#include "braidforge/closure.hpp"
#include "braidforge/error.hpp"
#include "braidforge/grid.hpp"
#include "braidforge/invariants.hpp"
#include "braidforge/io.hpp"
#include "braidforge/laurent.hpp"
#include "braidforge/markov.hpp"
#include "braidforge/pd.hpp"
#include "braidforge/verify.hpp"
