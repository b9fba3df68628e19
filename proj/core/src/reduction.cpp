#include "taitmap/reduction.hpp"

namespace taitmap {

BigInt euler_characteristic(const CombinatorialMap& map) { return reduce(map, euler_weights()).value; }

}  // namespace taitmap
