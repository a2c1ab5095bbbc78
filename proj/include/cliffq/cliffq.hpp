#pragma once

#include "cliffq/algebra.hpp"
#include "cliffq/blade.hpp"
#include "cliffq/errors.hpp"
#include "cliffq/fast_product.hpp"
#include "cliffq/format.hpp"
#include "cliffq/metric_file.hpp"
#include "cliffq/models.hpp"
#include "cliffq/multivector.hpp"
#include "cliffq/oracle.hpp"
#include "cliffq/quadratic_form.hpp"
#include "cliffq/random.hpp"
#include "cliffq/rational.hpp"
#include "cliffq/scalar.hpp"
#include "cliffq/structure.hpp"
#include "cliffq/tensor.hpp"
#include "cliffq/versor.hpp"
