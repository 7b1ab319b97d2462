#pragma once

namespace cvdj {

// Si(t) = int_0^t sin(u)/u du.  Odd in t; accurate to ~1e-14 absolute.
double sine_integral(double t);

}  // namespace cvdj
