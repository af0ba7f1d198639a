#ifndef ORE_ORE_HPP_
#define ORE_ORE_HPP_

#include "ore/bigint.hpp"
#include "ore/hook.hpp"
#include "ore/modint.hpp"
#include "ore/poly.hpp"
#include "ore/intpoly.hpp"
#include "ore/modpoly.hpp"
#include "ore/extpoly.hpp"
#include "ore/newton.hpp"
#include "ore/matrix.hpp"
#include "ore/basis.hpp"
#include "ore/driver.hpp"
#include "ore/json_io.hpp"

#endif
