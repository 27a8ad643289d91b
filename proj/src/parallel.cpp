#include "motsteen/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace motsteen {

void set_thread_count(int threads)
{
#ifdef _OPENMP
    if (threads > 0)
        omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

}  // namespace motsteen
