#pragma once

#include <gmpxx.h>

#include "orthoconvex/rat.hpp"

namespace oc {

struct BigRat {
  mpq_class q;
};

inline mpq_class as_mpq(const Rat& r) {
  if (r.big() != nullptr) return r.big()->q;
  return mpq_class(mpz_class(static_cast<long>(r.small_num())), mpz_class(static_cast<long>(r.small_den())));
}

}  // namespace oc
