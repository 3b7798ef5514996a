#pragma once

#include "triobj/front.hpp"
#include "triobj/model.hpp"

namespace triobj {

// Ground truth by full enumeration: every binary vector is visited in Gray
// code order with incremental constraint updates, feasible ones are collected
// and the nondominated set is returned. Desk scale only.
Front exact_front(const Instance& inst, int max_n = 22);

}  // namespace triobj
