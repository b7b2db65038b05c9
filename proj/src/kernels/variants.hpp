#pragma once

#include "molsim/kernels/kernels.hpp"

namespace molsim::kernels::detail {

const KernelTable& scalar_table();

#if defined(MOLSIM_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

}  // namespace molsim::kernels::detail
