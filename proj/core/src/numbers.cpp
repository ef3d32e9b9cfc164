#include "gramclass/numbers.hpp"

namespace gramclass {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace gramclass
