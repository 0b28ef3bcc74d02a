#pragma once

namespace ktdom {

// ceil(a / b) for a >= 0, b > 0.
constexpr int ceil_div(int a, int b) { return (a + b - 1) / b; }

// a mod m in [0, m), defined for any sign of a.
constexpr int floor_mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace ktdom
