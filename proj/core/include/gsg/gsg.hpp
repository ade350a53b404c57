#ifndef GSG_GSG_HPP_
#define GSG_GSG_HPP_

#include "amalgam.hpp"
#include "congruence.hpp"
#include "error.hpp"
#include "gamma_semigroup.hpp"
#include "homomorphism.hpp"
#include "regularity.hpp"
#include "textio.hpp"
#include "words.hpp"

#endif  // GSG_GSG_HPP_
