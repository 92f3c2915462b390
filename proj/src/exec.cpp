#include "kg/exec.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kg {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void apply_thread_env_override() {
#ifdef _OPENMP
    if (const char* env = std::getenv("KGIBBS_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) omp_set_num_threads(n);
    }
#endif
}

}  // namespace kg
