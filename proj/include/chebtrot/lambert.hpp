#pragma once

namespace chebtrot {

// Principal branch, x >= -1/e.
double lambert_w0(double x);
// Lower branch, -1/e <= x < 0.
double lambert_wm1(double x);

}  // namespace chebtrot
