#include "hurwitz/config.hpp"

#include <cstdlib>
#include <string>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

template <class T> void read_env(const char *name, T &slot) {
  const char *raw = std::getenv(name);
  if (!raw || !*raw) return;
  try {
    std::size_t used = 0;
    long long v = std::stoll(raw, &used);
    if (used != std::string(raw).size() || v <= 0) throw std::invalid_argument(name);
    slot = static_cast<T>(v);
  } catch (const std::exception &) {
    throw InvalidArgument(std::string("environment variable ") + name + " must be a positive integer");
  }
}

} // namespace

Caps Caps::from_environment() {
  Caps c;
  read_env("HURWITZ_MAX_DEGREE", c.max_degree);
  read_env("HURWITZ_MAX_GROUP_ORDER", c.max_group_order);
  read_env("HURWITZ_MAX_ORBIT", c.max_orbit_size);
  read_env("HURWITZ_MAX_BRUTEFORCE", c.max_bruteforce_tuples);
  read_env("HURWITZ_MAX_SYMMETRIC_DEGREE", c.max_symmetric_degree);
  return c;
}

void Caps::validate() const {
  if (max_degree <= 0 || max_group_order == 0 || max_orbit_size == 0 || max_bruteforce_tuples == 0 ||
      max_symmetric_degree <= 0)
    throw InvalidArgument("caps must be positive");
  if (max_degree > 64) throw InvalidArgument("max_degree above 64 is not supported");
}

} // namespace hurwitz
