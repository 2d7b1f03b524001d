// lunar-lab: umbrella header.
#ifndef LUNAR_LUNAR_HPP_
#define LUNAR_LUNAR_HPP_

#include "lunar/boolean_op.hpp"
#include "lunar/corpus.hpp"
#include "lunar/dense.hpp"
#include "lunar/errors.hpp"
#include "lunar/foliation.hpp"
#include "lunar/hankel_system.hpp"
#include "lunar/hardy.hpp"
#include "lunar/int_matrix.hpp"
#include "lunar/io.hpp"
#include "lunar/lunar_check.hpp"
#include "lunar/map_table.hpp"
#include "lunar/reproduce.hpp"
#include "lunar/sap.hpp"
#include "lunar/search.hpp"
#include "lunar/tensor_norm.hpp"

#endif  // LUNAR_LUNAR_HPP_
