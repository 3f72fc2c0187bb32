#ifndef SPRINGER_SPRINGER_HPP
#define SPRINGER_SPRINGER_HPP

#include "springer/poly.hpp"
#include "springer/linalg.hpp"
#include "springer/partition.hpp"
#include "springer/rootsys.hpp"
#include "springer/weyl.hpp"
#include "springer/symfun.hpp"
#include "springer/config.hpp"
#include "springer/verify.hpp"

#endif  // SPRINGER_SPRINGER_HPP
