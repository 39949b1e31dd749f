#include "heilbronn/config.hpp"

#include <cstdlib>
#include <thread>

#include "heilbronn/errors.hpp"

namespace heilbronn {

void RunConfig::validate() const
{
    if (pair_bound < 2)
        throw precondition_error("pair bound must be >= 2");
    if (!(pv_constant > 0))
        throw precondition_error("pv constant must be > 0");
    if (enumeration_cap < 10000)
        throw precondition_error("enumeration cap must be >= 10000");
    if (format != "json" && format != "csv")
        throw precondition_error("format must be json or csv");
}

unsigned resolve_threads(unsigned configured)
{
    if (const char* env = std::getenv("HEILBRONN_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 1024)
            return static_cast<unsigned>(v);
        throw precondition_error("HEILBRONN_THREADS must be an integer in [1, 1024]");
    }
    if (configured >= 1)
        return configured;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

} // namespace heilbronn
