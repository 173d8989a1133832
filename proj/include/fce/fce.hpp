// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fce/annotations.hpp"
#include "fce/config.hpp"
#include "fce/decode.hpp"
#include "fce/error.hpp"
#include "fce/eval.hpp"
#include "fce/format.hpp"
#include "fce/fourier.hpp"
#include "fce/geometry.hpp"
#include "fce/losses.hpp"
#include "fce/map_io.hpp"
#include "fce/maps.hpp"
#include "fce/objective.hpp"
#include "fce/parallel.hpp"
#include "fce/svg.hpp"
#include "fce/targets.hpp"
#include "fce/tensor.hpp"
