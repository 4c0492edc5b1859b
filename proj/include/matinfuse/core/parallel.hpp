// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace matinfuse {

// Runs fn(i) for i in [0, count) on a work-stealing pool limited to
// `workers` threads (workers <= 1 runs inline, in order). fn must only touch
// state owned by item i.
void parallel_items(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace matinfuse
