#pragma once

#include "salcom/arrangement.hpp"
#include "salcom/arrangement_io.hpp"
#include "salcom/bitset.hpp"
#include "salcom/com.hpp"
#include "salcom/corpus.hpp"
#include "salcom/errors.hpp"
#include "salcom/homology.hpp"
#include "salcom/oracle.hpp"
#include "salcom/poset.hpp"
#include "salcom/rational.hpp"
#include "salcom/region.hpp"
#include "salcom/salvetti.hpp"
#include "salcom/sign_vector.hpp"
#include "salcom/simplicial.hpp"
#include "salcom/verify.hpp"
#include "salcom/zcover.hpp"
