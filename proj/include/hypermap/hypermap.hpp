#ifndef HYPERMAP_HYPERMAP_HPP_
#define HYPERMAP_HYPERMAP_HPP_

#include "hypermap/bigint.hpp"
#include "hypermap/bivar_poly.hpp"
#include "hypermap/closed_form.hpp"
#include "hypermap/enumerate.hpp"
#include "hypermap/permutation.hpp"
#include "hypermap/rational.hpp"
#include "hypermap/recursion.hpp"
#include "hypermap/table_io.hpp"
#include "hypermap/tables.hpp"
#include "hypermap/two_face.hpp"

#endif  // HYPERMAP_HYPERMAP_HPP_
