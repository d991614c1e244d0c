#include "vmkdv/taylor.hpp"

namespace vmkdv {

namespace {

// d^k/ds^k f(a + b s) at s = 0 is b^k f^(k)(a); coefficients are b^k/k! times
// the cyclic derivative values of f at a.
TaylorSeries from_cycle(long double even0, long double odd0, long double even2, long double odd2,
                        long double b, std::size_t size) {
    TaylorSeries out(size);
    const long double cycle[4] = {even0, odd0, even2, odd2};
    long double scale = 1.0L; // b^k / k!
    for (std::size_t k = 0; k < size; ++k) {
        out[k] = cycle[k % 4] * scale;
        scale *= b / static_cast<long double>(k + 1);
    }
    return out;
}

} // namespace

TaylorSeries taylor_cosh(long double a, long double b, std::size_t size) {
    return from_cycle(coshl(a), sinhl(a), coshl(a), sinhl(a), b, size);
}

TaylorSeries taylor_sinh(long double a, long double b, std::size_t size) {
    return from_cycle(sinhl(a), coshl(a), sinhl(a), coshl(a), b, size);
}

TaylorSeries taylor_cos(long double a, long double b, std::size_t size) {
    return from_cycle(cosl(a), -sinl(a), -cosl(a), sinl(a), b, size);
}

TaylorSeries taylor_sin(long double a, long double b, std::size_t size) {
    return from_cycle(sinl(a), cosl(a), -sinl(a), -cosl(a), b, size);
}

} // namespace vmkdv
