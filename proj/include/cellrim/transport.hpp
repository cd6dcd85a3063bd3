#pragma once

#include "cellrim/diagram.hpp"

namespace cellrim {

// (a, b) -> (r+1-a, c+1-b)
Diagram rotate_180(const Diagram& D);

// Appends a one-node row at the smallest column giving an admissible diagram.
// Throws if no column works.
Diagram psi_append(const Diagram& D);

// {(r+1, 1)} together with D shifted one column to the right.
Diagram hat_diagram(const Diagram& D);

}  // namespace cellrim
