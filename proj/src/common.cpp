#include "fforge/common.hpp"

namespace fforge {

void require_cap(std::size_t value, std::size_t cap, const std::string& what)
{
    if (value > cap) {
        throw CapExceeded(what + " is " + std::to_string(value) + ", above the cap of "
                          + std::to_string(cap)
                          + "; exhaustive evaluation is refused (raise the cap explicitly"
                            " if the run time is acceptable)");
    }
}

} // namespace fforge
