#pragma once

#include "tropbip/cells.hpp"
#include "tropbip/morphism.hpp"

namespace tropbip {

// Fiber of G when G is interior to a unique small cell. The small cell is
// read through its lexicographically least representative R; the four
// regions are R with the north-west and south-east corner colours of its
// diagram kept or flipped. Pins fix A and b of the last diagram row and
// column. Throws NotGeneric otherwise.
FiberDescription generic_fiber(const MatrixPoint& g, const CellTable& table,
                               const Rat& pin_A = Rat(0), const Rat& pin_b = Rat(0));
FiberDescription generic_fiber(const MatrixPoint& g, const Rat& pin_A = Rat(0),
                               const Rat& pin_b = Rat(0));

}  // namespace tropbip
