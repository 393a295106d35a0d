#include "zfx/binomial.hpp"

#include <limits>
#include <string>

#include "zfx/errors.hpp"

namespace zfx {

namespace {
__extension__ using Wide = unsigned __int128;
}

Count binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    Wide value = 1;
    for (int i = 1; i <= b; ++i) {
        // value * (a - b + i) / i stays integral at every step.
        value = value * static_cast<unsigned>(a - b + i) / static_cast<unsigned>(i);
        if (value > std::numeric_limits<Count>::max())
            throw CapacityError("binomial C(" + std::to_string(a) + "," + std::to_string(b) + ") overflows 64 bits");
    }
    return static_cast<Count>(value);
}

}  // namespace zfx
