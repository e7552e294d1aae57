#ifndef HNS_HNS_HPP
#define HNS_HNS_HPP

#include "hns/errors.hpp"
#include "hns/finite_system.hpp"
#include "hns/finite_systems.hpp"
#include "hns/hypercomplex_number.hpp"
#include "hns/infinite_algebra.hpp"
#include "hns/isomorphism.hpp"
#include "hns/rational.hpp"
#include "hns/refactorization.hpp"
#include "hns/serialization.hpp"

#endif  // HNS_HNS_HPP
