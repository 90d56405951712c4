#include "krq/parallel.hpp"

#include <cstdlib>
#include <string>

namespace krq {

unsigned thread_count_from_env()
{
    const char* raw = std::getenv("KRQ_THREADS");
    if (raw == nullptr) return 1;
    try {
        const long value = std::stol(raw);
        if (value >= 1 && value <= 1024) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
    return 1;
}

}  // namespace krq
