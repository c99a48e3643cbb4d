// perforated - isometric representations of the semigroup Z+ \ {1}

#ifndef PERFORATED_HPP_
#define PERFORATED_HPP_

#include "perforated/json_io.hpp"
#include "perforated/linalg.hpp"
#include "perforated/monomial.hpp"
#include "perforated/report.hpp"
#include "perforated/representation.hpp"
#include "perforated/semigroup.hpp"
#include "perforated/state_vector.hpp"
#include "perforated/verifier.hpp"

#endif  // PERFORATED_HPP_
