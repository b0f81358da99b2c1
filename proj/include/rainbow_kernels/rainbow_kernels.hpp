#pragma once

#include "rainbow_kernels/core.hpp"
#include "rainbow_kernels/generators.hpp"
#include "rainbow_kernels/kernels.hpp"
#include "rainbow_kernels/reachability.hpp"
#include "rainbow_kernels/reductions.hpp"
