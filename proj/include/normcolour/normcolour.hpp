#pragma once

#include "normcolour/bench.hpp"
#include "normcolour/colouring.hpp"
#include "normcolour/error.hpp"
#include "normcolour/graph.hpp"
#include "normcolour/io.hpp"
#include "normcolour/policies.hpp"
#include "normcolour/resolution.hpp"
#include "normcolour/semantics.hpp"
